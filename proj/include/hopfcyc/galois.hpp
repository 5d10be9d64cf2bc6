#pragma once

#include "hopfcyc/cyclic.hpp"

namespace hopfcyc {

// Finite-dimensional unital associative algebra.
struct AlgebraData {
    std::vector<std::string> basis;
    std::vector<SparseVec> mult;  // mult[i*dim+j] = e_i e_j
    SparseVec unit;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.size()); }
    const SparseVec& product(std::uint32_t i, std::uint32_t j) const { return mult[i * dim() + j]; }
    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
};

CheckReport verify_algebra(const AlgebraData& a);
AlgebraData underlying_algebra(const HopfAlgebraData& h);

// Right H-comodule algebra; coaction[x] = rho(e_x) in A (x) H, index a*dimH + h.
struct ComoduleAlgebraData {
    AlgebraData algebra;
    HopfPtr base;
    std::vector<SparseVec> coaction;

    SparseVec coact(const SparseVec& a) const;
};

CheckReport verify_comodule_algebra(const ComoduleAlgebraData& a);

// Subalgebra of A given by a basis of A-vectors.
struct SubalgebraData {
    std::vector<SparseVec> basis;
    Subspace space;
};

// Throws AxiomViolation if the span is not a unital subalgebra.
SubalgebraData subalgebra(const AlgebraData& a, const std::vector<SparseVec>& spanning);
SubalgebraData ground_field(const AlgebraData& a);
// {a : rho(a) = a (x) 1}
SubalgebraData coinvariants(const ComoduleAlgebraData& a);

// (A, A)-bimodule.
struct BimoduleData {
    std::uint32_t dim = 0;
    std::vector<SparseVec> left;   // left[a*dim+m] = e_a e_m
    std::vector<SparseVec> right;  // right[m*dimA+a] = e_m e_a
    std::vector<std::string> labels;

    SparseVec act_left(const SparseVec& a, const SparseVec& m) const;
    SparseVec act_right(const SparseVec& m, const SparseVec& a) const;
};

BimoduleData regular_bimodule(const AlgebraData& a);
CheckReport verify_bimodule(const AlgebraData& a, const BimoduleData& m);

// M (x) A^{(x)n} modulo the B-balancing relators at each of the n inner
// joints, and, when cyclic, the outer relators x.b - b.x as well.
Quotient balanced_tensor(const AlgebraData& a, const SubalgebraData& b, const BimoduleData& m, int n, bool cyclic);

// M (x) A^{(x)n} -> M (x) H^{(x)n},
// m (x) a^1..a^n -> m a^1(0)...a^n(0) (x) (prod_{i>=1} a^i(1), ..., a^n(n)),
// built inductively from the canonical map.
SparseVec beta_power(const ComoduleAlgebraData& a, const BimoduleData& m, int n, Index ambient_index);

struct GaloisExtensionData {
    ComoduleAlgebraData ext;
    SubalgebraData coinvariants;
    Quotient tensor;                // A (x)_B A
    SparseMatrix beta;              // A (x)_B A -> A (x) H
    SparseMatrix beta_inverse;      // valid when galois
    std::vector<SparseVec> kappa;   // kappa(e_h) as a vector of A (x) A (lifted)
    bool galois = false;
    std::size_t rank_defect = 0;
    CheckReport checks;
};

// Builds A (x)_B A, the canonical map and, when it is bijective, the
// translation map.
GaloisExtensionData galois_check(const ComoduleAlgebraData& a);
// The relations satisfied by the translation map: the two coaction
// compatibilities in the cyclic tensor square, sum kappa1 kappa2 = eps,
// anti-multiplicativity and B-centrality.
CheckReport kappa_relations(const GaloisExtensionData& g);

// A_B with the induced Ulbrich-Miyashita action and coaction.
struct ABModuleData {
    CrossedModuleData module;
    Quotient quotient;  // A / [A, B]
    CheckReport checks;
};
ABModuleData ab_crossed_module(const GaloisExtensionData& g);

// Left H-action on M_B and right H-action on M^B.
struct UMActions {
    Quotient coinvariant_quotient;     // M / [M, B]
    ModuleData left;                   // on M_B
    Subspace invariants;               // M^B
    std::vector<SparseMatrix> right;   // per basis element of H, on M^B coordinates
    CheckReport checks;
};
UMActions um_actions(const GaloisExtensionData& g, const BimoduleData& m);

// Z_n(A/B, M) = M cyclic-tensor A^{(x)_B n} on quotient carriers; the cyclic
// operator is built when M is the regular bimodule.
struct RelativeCyclicData {
    CyclicObjectData object;
    std::vector<Quotient> carriers;
    CheckReport checks;  // operators preserve the relator spans
};
RelativeCyclicData relative_cyclic(const AlgebraData& a, const SubalgebraData& b, const BimoduleData& m, int top,
                                   bool with_cyclic);

// lambda_n : Z_n(A/B, M) -> Z_n(H, M_B) and its compatibility with all
// operators.
struct LambdaReport {
    std::vector<SparseMatrix> maps;
    RelativeCyclicData source;
    CyclicObjectData target;
    CheckReport checks;
};
LambdaReport lambda_iso(const GaloisExtensionData& g, const BimoduleData& m, int top);

// HC(A/B) directly and through lambda, for M = A.
struct GaloisHomologyReport {
    LambdaReport lambda;
    std::vector<Index> hh_direct, hh_transported;
    std::vector<Index> hc_direct, hc_transported;
    bool ok() const {
        return lambda.checks.ok() && hh_direct == hh_transported && hc_direct == hc_transported;
    }
};
GaloisHomologyReport galois_homology(const GaloisExtensionData& g, int hi);

// Solves for a B-bimodule section of B (x)_C B -> B.
std::optional<SparseVec> separability_element(const AlgebraData& a, const SubalgebraData& b, const SubalgebraData& c);

struct BaseChangeReport {
    bool separable = false;
    QuasiIsoReport quasi_iso;
    std::vector<Index> hh_small, hh_large;  // relative to C and to B
    std::vector<Index> hc_small, hc_large;  // C = k only
    CheckReport checks;
    bool ok() const { return separable && quasi_iso.ok() && checks.ok(); }
};
// C(A/C, M) -> C(A/B, M) for C inside B inside A.
BaseChangeReport separable_base_change(const AlgebraData& a, const SubalgebraData& b, const SubalgebraData& c,
                                       const BimoduleData& m, int hi);

// Graded algebra over a finite group; degree[i] is the degree of basis element i.
// Throws AxiomViolation with a witness pair when products leave the grading.
ComoduleAlgebraData strongly_graded(const FiniteGroupData& gamma, const AlgebraData& a,
                                    const std::vector<std::uint32_t>& degree);
// A_x A_y = A_{xy} for all x, y (by rank).
CheckReport verify_strong_grading(const ComoduleAlgebraData& a);
// k_omega[G] with e_x e_y = omega(x,y) e_{xy}; omega[x*|G|+y].
ComoduleAlgebraData twisted_group_algebra(const FiniteGroupData& gamma, const std::vector<Rational>& omega);
// B # G with (b e_x)(b' e_y) = omega(x,y) b (x.b') e_{xy}; action[x] is an
// automorphism of B and omega takes scalar values.
ComoduleAlgebraData crossed_product(const AlgebraData& b, const FiniteGroupData& gamma,
                                    const std::vector<SparseMatrix>& action, const std::vector<Rational>& omega);
CheckReport verify_cocycle(const FiniteGroupData& gamma, const std::vector<Rational>& omega);

// s3_over_a3, z4_over_z2, twisted_z2xz2.
std::optional<ComoduleAlgebraData> builtin_extension(const std::string& name);
std::vector<std::string> builtin_extension_names();

// HC(A/B) for A strongly graded by a finite group, from the components
// A_x / [A_x, B] with the induced actions of the reduced centralizers.
struct GradedBurgheleaReport {
    std::vector<std::uint32_t> representatives;
    std::vector<Index> component_dims;  // dim of A_x / [A_x, B] per class
    std::vector<std::vector<Index>> group_homology;
    std::vector<Index> formula, direct;
    CheckReport checks;
    bool ok() const { return checks.ok() && formula == direct; }
};
GradedBurgheleaReport burghelea_graded(const GaloisExtensionData& g, int hi);

// gamma_n : A^{(x)(n+1)} -> Z_n(H, M) attached to a coinvariant M-trace.
struct TraceReport {
    std::vector<SparseMatrix> maps;
    CheckReport checks;
};
// tr is a dimM x dimA matrix.
CheckReport verify_trace(const ComoduleAlgebraData& a, const CrossedModuleData& m, const SparseMatrix& tr);
TraceReport trace_map(const ComoduleAlgebraData& a, const CrossedModuleData& m, const SparseMatrix& tr, int top);

}  // namespace hopfcyc
