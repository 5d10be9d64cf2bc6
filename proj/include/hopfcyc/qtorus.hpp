#pragma once

#include "hopfcyc/report.hpp"
#include "hopfcyc/snf.hpp"

#include <optional>
#include <string>

namespace hopfcyc {

// lambda(x, y) = q^{x^T a y} with a antisymmetric; q of order m, or of
// infinite order when q_order is empty.
struct TorusCocycle {
    std::uint32_t r = 0;
    IntMatrix a;
    std::optional<Integer> q_order;
};

// Empty string when the data is valid.
std::string validate_torus(const TorusCocycle& c);

// Subgroup of Z^r spanned by the columns of basis (r x k).
struct LatticeSubgroup {
    std::uint32_t r = 0;
    IntMatrix basis;
    std::optional<Integer> modulus;  // the order of q, when finite

    std::size_t rank() const { return basis.empty() ? 0 : basis.front().size(); }
    bool contains(const std::vector<Integer>& x) const;
    std::string describe() const;
};

// X = {x : lambda(x, -) trivial} = {x : a x = 0 mod m}, through Smith normal form.
LatticeSubgroup x_lambda(const TorusCocycle& c);
// Direct test of lambda(x, f_j) = 1 on the standard basis.
bool lambda_trivial(const TorusCocycle& c, const std::vector<Integer>& x);
// Lattice membership against the direct test on [-bound, bound]^r.
CheckReport box_oracle(const TorusCocycle& c, const LatticeSubgroup& x, std::int64_t bound);

Integer binomial(std::int64_t n, std::int64_t k);

struct TorusDegree {
    Integer hh_per_point;        // C(r, n) per point of X
    Integer hc_fixed;            // sum_i C(r, n - 2i)
    Integer hc_per_nonzero_point;  // C(r-1, n) per point of X \ {0}
    std::optional<Integer> hh_total, hc_total;  // when X resp. X \ {0} is finite
};

struct TorusReport {
    LatticeSubgroup lattice;
    bool lattice_finite = false;     // X = {0}
    std::vector<TorusDegree> degrees;
};

TorusReport torus_homology(const TorusCocycle& c, int max_degree);

}  // namespace hopfcyc
