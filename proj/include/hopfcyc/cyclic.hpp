#pragma once

#include "hopfcyc/complex.hpp"
#include "hopfcyc/crossed.hpp"

namespace hopfcyc {

// Simplicial or cyclic vector space, materialized in degrees 0..top().
struct CyclicObjectData {
    std::vector<Index> dims;
    std::vector<std::vector<SparseMatrix>> faces;         // faces[n][i] : Z_n -> Z_{n-1}, 0 <= i <= n
    std::vector<std::vector<SparseMatrix>> degeneracies;  // degeneracies[n][i] : Z_n -> Z_{n+1}, n < top
    std::vector<SparseMatrix> cyclic;                     // cyclic[n] : Z_n -> Z_n, empty if simplicial

    int top() const { return static_cast<int>(dims.size()) - 1; }
    bool has_cyclic() const { return !cyclic.empty(); }
};

// H^{(x)(n+1)} with counit faces, coproduct degeneracies and rotation.
CyclicObjectData aux_cyclic(const HopfAlgebraData& h, int top);

struct BuildOptions {
    // When false, a crossed but non-modular module still gets a cyclic
    // operator; the identity suite is then expected to report the failure.
    bool require_modular = true;
};

// H^{(x)(n+1)} (x)_H M, carried by H^{(x)n} (x) M through the section
// (h^1..h^n) (x) m -> (h^1,...,h^n,1) (x)_H m.
CyclicObjectData build_cyclic(const CrossedModuleData& m, int top, BuildOptions opts = {});
// Faces and degeneracies only; needs just the module structure.
CyclicObjectData build_simplicial(const ModuleData& m, int top);

// Normal form of (h^0..h^n) (x) m in H^{(x)n} (x) M.
SparseVec normal_form(const ModuleData& m, int n, const std::vector<std::uint32_t>& slots, std::uint32_t mi);
// nu(u.h (x) m) = nu(u (x) h m) over the basis of H^{(x)(n+1)} x H x M.
CheckReport verify_normal_form(const ModuleData& m, int n);
// tau on representatives is balanced over H in degrees <= n.
CheckReport verify_cyclic_well_defined(const CrossedModuleData& m, int n);

// Simplicial and cyclic identities on every degree the truncation supports.
CheckReport verify_cyclic_object(const CyclicObjectData& z);

ChainComplexData hochschild_complex(const CyclicObjectData& z);
std::vector<Index> hochschild(const CyclicObjectData& z, int lo, int hi, Field field = {});
// Homology of C_n / Im(1 - (-1)^n tau_n); characteristic zero only.
std::vector<Index> cyclic_connes(const CyclicObjectData& z, int lo, int hi);
BicomplexData tsygan_bicomplex(const CyclicObjectData& z);
std::vector<Index> cyclic_bicomplex(const CyclicObjectData& z, int lo, int hi);
// The b' complex, expected to be acyclic.
ChainComplexData bar_prime_complex(const CyclicObjectData& z);

// Tor^H(k, M) from the bar complex H^{(x)n} (x) M (multiplication only).
ChainComplexData tor_bar_complex(const ModuleData& m, int top);
std::vector<Index> tor_oracle(const ModuleData& m, int lo, int hi, Field field = {});

// Group and module given by matrices, for group homology.
struct GroupModule {
    FiniteGroupData group;
    std::uint32_t dim = 0;
    std::vector<SparseMatrix> act;  // act[g] : dim x dim
};
std::vector<Index> group_homology(const GroupModule& gm, int lo, int hi, Field field = {});

// sum_{i>=0} x_{n-2i}
std::vector<Index> fold_periodic(const std::vector<Index>& x);

// Exactness of ... -> HC_{n+1} -> HC_{n-1} -> HH_n -> HC_n -> ... -> HC_0 -> 0
// restricted to the available degrees.
CheckReport sbi_check(const std::vector<Index>& hh, const std::vector<Index>& hc);

struct BurgheleaResult {
    std::vector<std::uint32_t> representatives;
    std::vector<std::vector<Index>> group_homology;  // per class, degrees 0..hi
    std::vector<Index> folded;                       // HC prediction, degrees 0..hi
    CheckReport checks;
};
// HC(kG, M) = sum over classes x, i >= 0 of H_{n-2i}(G_x/<x>, M_x).
BurgheleaResult burghelea_finite(const CrossedModuleData& m, int hi);

struct ComparisonReport {
    std::vector<Index> left, right;
    bool applicable = true;
    std::string reason;
    CheckReport checks;
    bool ok() const { return applicable && left == right && checks.ok(); }
};

// Cocommutative H, trivial coaction: HC_n(H,M) = sum_i Tor_{n-2i}(k,M).
ComparisonReport folded_tor_check(const CrossedModuleData& m, int hi);
// HH and HC of (H, Ind N) against (K, N).
struct ShapiroReport {
    ComparisonReport hh, hc;
    bool free_rank_matches = false;
};
ShapiroReport shapiro_check(const HopfSubalgebraData& k, const CrossedModuleData& n, int hi);

struct ReductionReport {
    bool normal = false, semisimple = false;
    HopfPtr quotient;
    CrossedModuleData reduced;  // M / K+M over H/K+H
    ComparisonReport hh, hc;
};
// Semisimple normal K inside H: compare (H, M) with (H/K+H, M/K+M).
ReductionReport semisimple_reduction(const HopfSubalgebraData& k, const CrossedModuleData& m, int hi);
// M / K+M as a crossed module over H / K+H.
CrossedModuleData reduce_module(const NormalQuotientData& q, const HopfSubalgebraData& k, const CrossedModuleData& m);

struct FiltrationReport {
    FiltrationData filtration;
    std::vector<Index> level_dims;
    std::vector<std::vector<Index>> graded_hc;  // HC of each gr_p, degrees 0..hi
    std::vector<Index> e1_total;               // sum over p of the E^1 terms by total degree
    std::vector<Index> hc;                     // HC(H, M) directly
    bool graded_trivial_coaction = true;
    bool matches_folding = true;               // each gr_p against folded Tor
};
FiltrationReport filtration_report(const CrossedModuleData& m, int hi);

}  // namespace hopfcyc
