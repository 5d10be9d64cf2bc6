#pragma once

#include "hopfcyc/sparse.hpp"

#include <cstdint>
#include <vector>

namespace hopfcyc {

// Index of a pure tensor of basis vectors in V_1 (x) ... (x) V_k, first
// factor most significant.
inline Index pack(const std::vector<std::uint32_t>& digits, const std::vector<Index>& radices) {
    Index r = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) r = r * radices[i] + digits[i];
    return r;
}

inline std::vector<std::uint32_t> unpack(Index idx, const std::vector<Index>& radices) {
    std::vector<std::uint32_t> d(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
        d[i] = static_cast<std::uint32_t>(idx % radices[i]);
        idx /= radices[i];
    }
    return d;
}

// Radices of H^{(x) n} (x) M.
inline std::vector<Index> power_radices(Index d, int n, Index tail) {
    std::vector<Index> r(static_cast<std::size_t>(n), d);
    r.push_back(tail);
    return r;
}

inline Index ipow(Index base, int e) {
    Index r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// a (x) b where b lives in a space of dimension dim_b.
inline SparseVec tensor(const SparseVec& a, const SparseVec& b, Index dim_b) {
    SparseVec out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(Entry{x.index * dim_b + y.index, x.value * y.value});
    return out;
}

// Accumulates scaled pure tensors of sparse factors.
inline void add_tensor(SparseVec& out, const Rational& c, const std::vector<const SparseVec*>& factors,
                       const std::vector<Index>& radices) {
    std::vector<Entry> cur{Entry{0, c}};
    for (std::size_t f = 0; f < factors.size(); ++f) {
        std::vector<Entry> next;
        next.reserve(cur.size() * factors[f]->size());
        for (const auto& x : cur)
            for (const auto& y : *factors[f]) next.push_back(Entry{x.index * radices[f] + y.index, x.value * y.value});
        cur.swap(next);
        if (cur.empty()) return;
    }
    for (auto& e : cur) out.push_back(std::move(e));
}

}  // namespace hopfcyc
