#pragma once

#include "hopfcyc/echelon.hpp"
#include "hopfcyc/group.hpp"
#include "hopfcyc/report.hpp"
#include "hopfcyc/sparse.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfcyc {

struct CoproductTerm {
    std::uint32_t left, right;
    Rational coef;
};

// Finite-dimensional Hopf algebra by structure constants in a fixed basis.
struct HopfAlgebraData {
    std::vector<std::string> basis;
    std::vector<SparseVec> mult;                    // mult[i*dim+j] = e_i e_j
    SparseVec unit;
    std::vector<std::vector<CoproductTerm>> comult;  // Delta(e_i)
    std::vector<Rational> counit;
    SparseMatrix antipode;                          // column j = S(e_j)
    std::shared_ptr<const FiniteGroupData> group;   // set for group algebras

    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.size()); }
    const SparseVec& product(std::uint32_t i, std::uint32_t j) const { return mult[i * dim() + j]; }
    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
    SparseVec apply_antipode(const SparseVec& a) const { return antipode.apply(a); }
    Rational apply_counit(const SparseVec& a) const;
    // Delta(a) as a vector of H (x) H.
    SparseVec coproduct(const SparseVec& a) const;
    bool cocommutative() const;
    bool commutative() const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

// Terms of the iterated coproduct Delta^{(k)}(e_b) with k+1 legs.
struct LegTerm {
    std::vector<std::uint32_t> legs;
    Rational coef;
};

class CoproductTable {
public:
    CoproductTable(const HopfAlgebraData& h, int k);
    int k() const { return k_; }
    const std::vector<LegTerm>& operator()(std::uint32_t b) const { return terms_[b]; }

private:
    int k_;
    std::vector<std::vector<LegTerm>> terms_;
};

// Checks the seven bialgebra/antipode axiom families; witnesses name the
// first failing basis tuple.
CheckReport verify_hopf(const HopfAlgebraData& h);

HopfPtr group_algebra(const FiniteGroupData& g);
HopfPtr op_cop(const HopfAlgebraData& h);

// Right action of each basis element on H^{(x)(n+1)} through the iterated
// coproduct: (h^0,...,h^n) h = sum (h^0 h_(1), ..., h^n h_(n+1)).
std::vector<SparseMatrix> diagonal_power(const HopfAlgebraData& h, int n);
CheckReport verify_right_module(const HopfAlgebraData& h, const std::vector<SparseMatrix>& action);

// Isomorphism H^{(x)n} (x) H -> H^{(x)(n+1)} of right modules (canonical
// action on the last factor versus the diagonal action) and its inverse.
struct HopfModuleIso {
    SparseMatrix forward, backward;
};
HopfModuleIso hopf_module_phi(const HopfAlgebraData& h, int n);

struct HopfSubalgebraData {
    HopfPtr sub, parent;
    SparseMatrix inclusion;  // parent.dim x sub.dim
};

// Hopf subalgebra spanned by the given vectors; throws AxiomViolation when
// the span is not closed under the structure maps.
HopfSubalgebraData hopf_subalgebra(const HopfPtr& parent, const std::vector<SparseVec>& spanning);
// Subgroup algebra inside a group algebra.
HopfSubalgebraData subgroup_algebra(const HopfPtr& parent, const std::vector<std::uint32_t>& elements);
// The trivial Hopf subalgebra k.1.
HopfSubalgebraData ground_field_subalgebra(const HopfPtr& parent);

struct NormalQuotientData {
    Index dim_left = 0, dim_right = 0, dim_sum = 0;  // K+H, HK+, K+H + HK+
    bool normal = false;
    HopfPtr quotient;       // H / K+H, valid when normal
    Quotient carrier;
    SparseMatrix projection;
};

NormalQuotientData quotient_by_normal(const HopfSubalgebraData& k);

bool is_grouplike(const HopfAlgebraData& h, const SparseVec& v);

// Solves for e in K (x) K with m(e) = 1 and k e = e k; present iff K is
// separable (for Hopf algebras: semisimple).
std::optional<SparseVec> separability_idempotent(const HopfAlgebraData& k);

}  // namespace hopfcyc
