#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfcyc {

// Finite group by multiplication table; element 0 need not be the identity.
struct FiniteGroupData {
    std::vector<std::string> names;
    std::vector<std::uint32_t> table;  // table[x * order + y] = x*y
    // Optional homomorphism to {+1,-1}, used by the sign module.
    std::vector<int> sign;

    std::uint32_t order() const { return static_cast<std::uint32_t>(names.size()); }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return table[x * order() + y]; }
    std::uint32_t identity() const;
    std::uint32_t inverse(std::uint32_t x) const;
    std::uint32_t element(const std::string& name) const;
};

// Empty string when the table defines a group.
std::string validate_group(const FiniteGroupData& g);

FiniteGroupData cyclic_group(std::uint32_t n);
FiniteGroupData direct_product(const FiniteGroupData& a, const FiniteGroupData& b);
// Closure of the given permutations of {0..degree-1}.
FiniteGroupData permutation_group(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& generators);
FiniteGroupData symmetric_group3();
FiniteGroupData dihedral_group8();
// z2, z3, z4, z2xz2, s3, d4 (a leading 'k' is ignored).
std::optional<FiniteGroupData> builtin_group(std::string name);
std::vector<std::string> builtin_group_names();

// Subgroup given by a list of elements of the parent, with the embedding.
struct SubgroupData {
    FiniteGroupData group;
    std::vector<std::uint32_t> embedding;  // subgroup element -> parent element
};

SubgroupData subgroup(const FiniteGroupData& g, std::vector<std::uint32_t> elements);

// Conjugacy data at a class representative x: centralizer G_x, and the
// quotient G_x / <x> together with the projection of G_x onto it.
struct ConjugacyClassData {
    std::uint32_t representative;
    std::vector<std::uint32_t> members;
    SubgroupData centralizer;
    FiniteGroupData reduced;                  // G_x / <x>
    std::vector<std::uint32_t> reduced_of;    // centralizer element -> coset
    std::vector<std::uint32_t> coset_rep;     // coset -> centralizer element
};

std::vector<ConjugacyClassData> conjugacy_data(const FiniteGroupData& g);

}  // namespace hopfcyc
