#include "hopfcyc/qtorus.hpp"

#include "hopfcyc/echelon.hpp"

namespace hopfcyc {

std::string validate_torus(const TorusCocycle& c) {
    if (c.r < 1) return "rank must be at least 1";
    if (c.a.size() != c.r) return "exponent matrix must have r rows";
    for (const auto& row : c.a)
        if (row.size() != c.r) return "exponent matrix must be square";
    for (std::uint32_t i = 0; i < c.r; ++i)
        for (std::uint32_t j = 0; j < c.r; ++j)
            if (c.a[i][j] != -c.a[j][i])
                return "exponent matrix is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (c.q_order && *c.q_order < 1) return "order of q must be positive";
    return {};
}

bool LatticeSubgroup::contains(const std::vector<Integer>& x) const {
    if (x.size() != r) return false;
    std::size_t k = rank();
    if (k == 0) {
        for (const auto& v : x)
            if (v != 0) return false;
        return true;
    }
    std::vector<SparseVec> cols(k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::uint32_t i = 0; i < r; ++i)
            if (basis[i][j] != 0) cols[j].push_back(Entry{i, Rational(basis[i][j])});
    SparseVec rhs;
    for (std::uint32_t i = 0; i < r; ++i)
        if (x[i] != 0) rhs.push_back(Entry{i, Rational(x[i])});
    auto sol = solve(SparseMatrix::from_columns(r, cols), rhs);
    if (!sol) return false;
    for (const auto& e : *sol)
        if (e.value.get_den() != 1) return false;
    return true;
}

std::string LatticeSubgroup::describe() const {
    if (rank() == 0) return "{0}";
    std::string s = "span_Z{";
    for (std::size_t j = 0; j < rank(); ++j) {
        if (j) s += ", ";
        s += "(";
        for (std::uint32_t i = 0; i < r; ++i) s += (i ? "," : "") + basis[i][j].get_str();
        s += ")";
    }
    return s + "}";
}

LatticeSubgroup x_lambda(const TorusCocycle& c) {
    std::string err = validate_torus(c);
    if (!err.empty()) throw InputError(err);
    SmithForm f = smith_normal_form(c.a);
    LatticeSubgroup x;
    x.r = c.r;
    x.modulus = c.q_order;
    x.basis.assign(c.r, {});
    // a x = 0 (mod m)  <=>  D y = 0 (mod m) with x = V y
    for (std::uint32_t i = 0; i < c.r; ++i) {
        const Integer& d = f.diagonal[i];
        Integer scale;
        if (c.q_order) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.q_order->get_mpz_t());
            scale = *c.q_order / g;
        } else if (d == 0) {
            scale = 1;
        } else {
            continue;
        }
        for (std::uint32_t k = 0; k < c.r; ++k) x.basis[k].push_back(f.v[k][i] * scale);
    }
    return x;
}

bool lambda_trivial(const TorusCocycle& c, const std::vector<Integer>& x) {
    for (std::uint32_t j = 0; j < c.r; ++j) {
        Integer e = 0;
        for (std::uint32_t i = 0; i < c.r; ++i) e += x[i] * c.a[i][j];
        if (c.q_order ? e % *c.q_order != 0 : e != 0) return false;
    }
    return true;
}

CheckReport box_oracle(const TorusCocycle& c, const LatticeSubgroup& x, std::int64_t bound) {
    CheckReport rep;
    std::vector<std::int64_t> p(c.r, -bound);
    std::string bad;
    std::size_t count = 0;
    while (true) {
        std::vector<Integer> v(p.begin(), p.end());
        if (x.contains(v) != lambda_trivial(c, v)) {
            bad = "(";
            for (std::uint32_t i = 0; i < c.r; ++i) bad += (i ? "," : "") + std::to_string(p[i]);
            bad += ")";
            break;
        }
        ++count;
        std::uint32_t k = 0;
        while (k < c.r && p[k] == bound) p[k++] = -bound;
        if (k == c.r) break;
        ++p[k];
    }
    rep.add("lattice matches direct enumeration on [-" + std::to_string(bound) + "," + std::to_string(bound) + "]^" +
                std::to_string(c.r),
            bad.empty(), bad.empty() ? std::to_string(count) + " points" : bad);
    return rep;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

TorusReport torus_homology(const TorusCocycle& c, int max_degree) {
    if (max_degree < 0) throw InputError("max degree must be nonnegative");
    TorusReport rep;
    rep.lattice = x_lambda(c);
    rep.lattice_finite = rep.lattice.rank() == 0;
    for (int n = 0; n <= max_degree; ++n) {
        TorusDegree d;
        d.hh_per_point = binomial(c.r, n);
        d.hc_fixed = 0;
        for (int k = n; k >= 0; k -= 2) d.hc_fixed += binomial(c.r, k);
        d.hc_per_nonzero_point = binomial(c.r - 1, n);
        if (rep.lattice_finite) {
            d.hh_total = d.hh_per_point;
            d.hc_total = d.hc_fixed;
        } else if (d.hh_per_point == 0) {
            d.hh_total = 0;
        }
        if (!rep.lattice_finite && d.hc_per_nonzero_point == 0) d.hc_total = d.hc_fixed;
        rep.degrees.push_back(d);
    }
    return rep;
}

}  // namespace hopfcyc
