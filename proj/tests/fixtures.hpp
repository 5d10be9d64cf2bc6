#pragma once

#include "hopfcyc/io.hpp"

namespace fixtures {

// Sweedler's four-dimensional Hopf algebra: basis 1, g, x, gx with g^2 = 1,
// x^2 = 0, xg = -gx, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x,
// S x = -gx.  Neither commutative, cocommutative nor semisimple, S^2 != Id.
inline const char* sweedler_json = R"({
  "dim": 4,
  "basis": ["1", "g", "x", "gx"],
  "mult": [
    [0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1], [0, 3, 3, 1],
    [1, 0, 1, 1], [1, 1, 0, 1], [1, 2, 3, 1], [1, 3, 2, 1],
    [2, 0, 2, 1], [2, 1, 3, -1],
    [3, 0, 3, 1], [3, 1, 2, -1]
  ],
  "unit": [1, 0, 0, 0],
  "comult": [
    [0, 0, 0, 1],
    [1, 1, 1, 1],
    [2, 2, 0, 1], [2, 1, 2, 1],
    [3, 3, 1, 1], [3, 0, 3, 1]
  ],
  "counit": [1, 1, 0, 0],
  "antipode": [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
    [0, 0, -1, 0]
  ]
})";

inline hopfcyc::HopfPtr sweedler() { return hopfcyc::parse_hopf(hopfcyc::Json::parse(sweedler_json)); }

inline hopfcyc::HopfPtr group(const char* name) { return hopfcyc::group_algebra(*hopfcyc::builtin_group(name)); }

// Element of order two in Z/4.
inline std::uint32_t square_of_generator(const hopfcyc::FiniteGroupData& g) {
    std::uint32_t e = g.identity();
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (x != e && g.mul(x, x) == e) return x;
    return e;
}

inline std::vector<std::uint32_t> even_permutations(const hopfcyc::FiniteGroupData& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (g.sign[x] > 0) out.push_back(x);
    return out;
}

}  // namespace fixtures
