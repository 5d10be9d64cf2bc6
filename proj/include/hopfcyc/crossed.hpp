#pragma once

#include "hopfcyc/hopf.hpp"

#include <optional>

namespace hopfcyc {

// Left module over a Hopf algebra.
struct ModuleData {
    HopfPtr base;
    std::uint32_t dim = 0;
    std::vector<SparseVec> action;  // action[h*dim+m] = e_h . e_m
    std::vector<std::string> labels;

    SparseVec act(std::uint32_t h, const SparseVec& m) const;
    SparseVec act(const SparseVec& h, const SparseVec& m) const;
    std::string label(Index m) const { return m < labels.size() ? labels[m] : "m" + std::to_string(m); }
};

// Right comodule: coaction[m] is rho(e_m) in M (x) H, index m'*dimH + h.
struct ComoduleData {
    HopfPtr base;
    std::uint32_t dim = 0;
    std::vector<SparseVec> coaction;
};

// Left module and right comodule, to be checked for the crossed and
// modular conditions.
struct CrossedModuleData : ModuleData {
    std::vector<SparseVec> coaction;

    ComoduleData comodule() const { return ComoduleData{base, dim, coaction}; }
    SparseVec coact(const SparseVec& m) const;
};

CheckReport verify_module(const ModuleData& m);
CheckReport verify_comodule(const ComoduleData& m);
// Module, comodule and rho(hm) = sum h(2)m(0) (x) h(3) m(1) S h(1).
CheckReport verify_crossed(const CrossedModuleData& m);
// sum m(1) . m(0) = m.
CheckReport verify_modular(const CrossedModuleData& m);

CrossedModuleData adjoint_module(const HopfPtr& h);    // h.x = h(2) x S h(1), rho = Delta
CrossedModuleData coadjoint_module(const HopfPtr& h);  // h.x = hx, rho(x) = x(2) (x) x(3) S x(1)
CrossedModuleData trivial_module(const HopfPtr& h);    // counit action, rho(m) = m (x) 1
// One-dimensional module with action by a character and coaction by a
// grouplike element.
CrossedModuleData character_module(const HopfPtr& h, const std::vector<Rational>& character, const SparseVec& grouplike);
// Sign character of a group algebra with trivial coaction.
CrossedModuleData sign_module(const HopfPtr& h);
// adjoint, coadjoint, trivial, sign.
std::optional<CrossedModuleData> builtin_module(const HopfPtr& h, const std::string& name);

// Module over H^{op cop} attached to a grouplike sigma and a character delta.
struct ModularPairReport {
    CrossedModuleData module;  // over op_cop(H)
    bool pair_data_valid = false;  // sigma grouplike, delta character, delta(sigma) = 1
    bool crossed = false;
    bool modular = false;
    bool twisted_antipode_involutive = false;  // (sigma^{-1} S_delta)^2 = Id
};
ModularPairReport modular_pair_module(const HopfPtr& h, const SparseVec& sigma, const std::vector<Rational>& delta);

// Left Yetter-Drinfeld module: left action and left coaction
// lambda(e_m) in H (x) M, index h*dim+m'.
struct YetterDrinfeldData {
    HopfPtr base;
    std::uint32_t dim = 0;
    std::vector<SparseVec> action;
    std::vector<SparseVec> left_coaction;
};
CheckReport verify_yetter_drinfeld(const YetterDrinfeldData& y);
// rho(m) = m(0) (x) S m(-1); needs S^2 = Id.
CrossedModuleData from_yetter_drinfeld(const YetterDrinfeldData& y);
YetterDrinfeldData to_yetter_drinfeld(const CrossedModuleData& m);

bool antipode_is_involutive(const HopfAlgebraData& h);

// Sub and quotient objects; throw AxiomViolation when the subspace or the
// relator span is not stable.
CrossedModuleData crossed_submodule(const CrossedModuleData& m, const Subspace& w);
CrossedModuleData crossed_quotient(const CrossedModuleData& m, const Quotient& q);
ModuleData module_quotient(const ModuleData& m, const Quotient& q);

// Matrices of a linear map M -> N commuting with actions and coactions.
bool is_module_map(const ModuleData& m, const ModuleData& n, const SparseMatrix& f);
bool is_comodule_map(const ComoduleData& m, const ComoduleData& n, const SparseMatrix& f);

struct InductionData {
    CrossedModuleData module;  // over the parent
    Quotient carrier;          // H (x) N modulo the K-balancing relators
    bool free_rank_matches = false;
};
// H (x)_K N with rho(h (x) n) = sum (h(2) (x) n(0)) (x) h(3) n(1) S h(1).
InductionData induce(const HopfSubalgebraData& k, const CrossedModuleData& n);

// M box_H K with k.(m box x) = f(k(2)) m box k(3) x S k(1).
struct RestrictionData {
    CrossedModuleData module;  // over the subalgebra
    Subspace carrier;          // inside M (x) K
};
RestrictionData restrict_module(const HopfSubalgebraData& k, const CrossedModuleData& m);

// u(m) = sum m(1) . m(0)
SparseMatrix u_map(const CrossedModuleData& m);

// N (x) H with h(n (x) x) = h(2)n (x) h(3) x S h(1) and coaction N (x) Delta,
// cut down to Ker(u - Id).
struct HgData {
    CrossedModuleData ambient;
    CrossedModuleData module;
};
HgData hg_construction(const ModuleData& n);
// H (x) N with action on the left factor, cut down to Coker(u - Id).
struct GhData {
    CrossedModuleData ambient;
    CrossedModuleData module;
};
GhData gh_construction(const ComoduleData& n);

// Group algebra case: M = sum_x M_x with M_x = {m : rho(m) = m (x) x}.
struct GroupDecomposition {
    std::vector<Subspace> components;  // indexed by group element
    std::vector<std::uint32_t> representatives;
    std::vector<HopfSubalgebraData> centralizers;
    std::vector<CrossedModuleData> pieces;  // M_x over k[G_x], one per class
    CheckReport checks;
    bool modular_by_components = false;  // g m = m for m in M_g
};
GroupDecomposition decompose_group_case(const CrossedModuleData& m);

struct FiltrationData {
    std::vector<Subspace> levels;  // F_0 subset F_1 subset ...
    bool exhaustive = false;
    int stabilized_at = 0;
    CheckReport checks;
};
// F_0 = M^{coH}, F_{p+1}/F_p = (M/F_p)^{coH}, until it stabilizes.
FiltrationData coinvariants_filtration(const CrossedModuleData& m);
// gr_p = F_p / F_{p-1} as crossed modules.
std::vector<CrossedModuleData> associated_graded(const CrossedModuleData& m, const FiltrationData& f);

}  // namespace hopfcyc
