#include <doctest.h>

#include "hopfcyc/qtorus.hpp"

#include <random>

using namespace hopfcyc;

namespace {

TorusCocycle cocycle(IntMatrix a, std::optional<Integer> order) {
    TorusCocycle c;
    c.r = static_cast<std::uint32_t>(a.size());
    c.a = std::move(a);
    c.q_order = std::move(order);
    return c;
}

TorusCocycle random_cocycle(std::mt19937& rng, std::uint32_t r, std::optional<Integer> order) {
    std::uniform_int_distribution<int> entry(-3, 3);
    IntMatrix a(r, std::vector<Integer>(r, 0));
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = i + 1; j < r; ++j) {
            a[i][j] = entry(rng);
            a[j][i] = -a[i][j];
        }
    return cocycle(a, order);
}

// x lies in X iff every entry of x^T a vanishes (mod the order of q).
bool in_x(const TorusCocycle& c, const std::vector<Integer>& x) {
    for (std::uint32_t j = 0; j < c.r; ++j) {
        Integer s = 0;
        for (std::uint32_t i = 0; i < c.r; ++i) s += x[i] * c.a[i][j];
        if (c.q_order ? mpz_divisible_p(s.get_mpz_t(), c.q_order->get_mpz_t()) == 0 : s != 0) return false;
    }
    return true;
}

// Independent membership check on the box [-b, b]^r.
void check_box(const TorusCocycle& c, const LatticeSubgroup& x, int b) {
    std::vector<Integer> v(c.r, -b);
    while (true) {
        CHECK(x.contains(v) == in_x(c, v));
        CHECK(lambda_trivial(c, v) == in_x(c, v));
        std::uint32_t i = 0;
        while (i < c.r && v[i] == b) v[i++] = -b;
        if (i == c.r) break;
        v[i] += 1;
    }
}

}  // namespace

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("lattice of trivial characters against enumeration") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t r = 1 + trial % 3;
        std::optional<Integer> order;
        if (trial % 4) order = Integer(2 + trial % 6);
        TorusCocycle c = random_cocycle(rng, r, order);
        CAPTURE(trial);
        REQUIRE(validate_torus(c).empty());
        LatticeSubgroup x = x_lambda(c);
        check_box(c, x, r == 3 ? 4 : 8);
        CHECK(box_oracle(c, x, 6).ok());
    }
}

TEST_CASE("nondegenerate rank two at infinite order") {
    TorusCocycle c = cocycle({{0, 1}, {-1, 0}}, std::nullopt);
    TorusReport rep = torus_homology(c, 4);
    CHECK(rep.lattice_finite);
    CHECK(rep.lattice.rank() == 0);
    std::vector<Integer> hh, hc;
    for (const auto& d : rep.degrees) {
        REQUIRE(d.hh_total);
        REQUIRE(d.hc_total);
        hh.push_back(*d.hh_total);
        hc.push_back(*d.hc_total);
    }
    CHECK(hh == std::vector<Integer>{1, 2, 1, 0, 0});
    CHECK(hc == std::vector<Integer>{1, 2, 2, 2, 2});
}

TEST_CASE("per-point counts") {
    for (std::uint32_t r = 1; r <= 5; ++r) {
        IntMatrix zero(r, std::vector<Integer>(r, 0));
        TorusReport rep = torus_homology(cocycle(zero, std::nullopt), static_cast<int>(r) + 2);
        // commutative torus: every character is trivial
        CHECK(rep.lattice.rank() == r);
        CHECK_FALSE(rep.lattice_finite);
        Integer total = 0;
        for (std::size_t n = 0; n < rep.degrees.size(); ++n) {
            const TorusDegree& d = rep.degrees[n];
            total += d.hh_per_point;
            CHECK(d.hh_per_point == binomial(r, n));
            CHECK(d.hc_per_nonzero_point == binomial(r - 1, n));
            Integer fixed = 0;
            for (std::int64_t m = static_cast<std::int64_t>(n); m >= 0; m -= 2) fixed += binomial(r, m);
            CHECK(d.hc_fixed == fixed);
            // an infinite X gives a finite total only where the per-point count vanishes
            CHECK(d.hh_total.has_value() == (d.hh_per_point == 0));
            CHECK(d.hc_total.has_value() == (d.hc_per_nonzero_point == 0));
            if (d.hc_total) CHECK(*d.hc_total == d.hc_fixed);
        }
        CHECK(total == Integer(1) << r);
    }
}

TEST_CASE("Laurent polynomials") {
    // r = 1: the only antisymmetric matrix is zero, X = Z
    TorusReport rep = torus_homology(cocycle({{0}}, std::nullopt), 3);
    CHECK(rep.lattice.rank() == 1);
    CHECK(rep.degrees[0].hh_per_point == 1);
    CHECK(rep.degrees[1].hh_per_point == 1);
    CHECK(rep.degrees[2].hh_per_point == 0);
    CHECK(rep.degrees[0].hc_per_nonzero_point == 1);
    CHECK(rep.degrees[1].hc_per_nonzero_point == 0);
}

TEST_CASE("finite order of q makes X infinite") {
    TorusCocycle c = cocycle({{0, 1}, {-1, 0}}, Integer(3));
    LatticeSubgroup x = x_lambda(c);
    CHECK(x.rank() == 2);
    CHECK(x.contains({3, 0}));
    CHECK(x.contains({0, -3}));
    CHECK_FALSE(x.contains({1, 0}));
    CHECK_FALSE(torus_homology(c, 2).lattice_finite);
    CHECK_FALSE(x.describe().empty());
}

TEST_CASE("invalid cocycles") {
    CHECK_FALSE(validate_torus(cocycle({{0, 1}, {1, 0}}, std::nullopt)).empty());
    CHECK_FALSE(validate_torus(cocycle({{1}}, std::nullopt)).empty());
    CHECK_FALSE(validate_torus(cocycle({{0, 1}}, std::nullopt)).empty());
    CHECK_FALSE(validate_torus(cocycle({{0, 1}, {-1, 0}}, Integer(0))).empty());
    TorusCocycle empty;
    CHECK_FALSE(validate_torus(empty).empty());
    TorusCocycle ragged = cocycle({{0, 1}, {-1}}, std::nullopt);
    CHECK_FALSE(validate_torus(ragged).empty());
}
