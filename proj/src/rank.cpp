#include "hopfcyc/rank.hpp"

#include <algorithm>
#include <queue>

namespace hopfcyc {

namespace {

struct IntegerRing {
    using Value = Integer;
    static bool is_unit(const Value& v) { return abs(v) == 1; }
    static std::size_t weight(const Value& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

    // row <- a*row - b*pivot, where a is the pivot entry and b the row entry.
    static void combine(std::vector<std::uint32_t>& idx, std::vector<Value>& val,
                        const std::vector<std::uint32_t>& pidx, const std::vector<Value>& pval,
                        const Value& a, const Value& b, std::vector<std::uint32_t>& fill) {
        std::vector<std::uint32_t> nidx;
        std::vector<Value> nval;
        nidx.reserve(idx.size() + pidx.size());
        nval.reserve(idx.size() + pidx.size());
        std::size_t i = 0, j = 0;
        while (i < idx.size() || j < pidx.size()) {
            if (j == pidx.size() || (i < idx.size() && idx[i] < pidx[j])) {
                nidx.push_back(idx[i]);
                nval.push_back(a * val[i]);
                ++i;
            } else if (i == idx.size() || pidx[j] < idx[i]) {
                nidx.push_back(pidx[j]);
                nval.push_back(-b * pval[j]);
                fill.push_back(pidx[j]);
                ++j;
            } else {
                Value v = a * val[i] - b * pval[j];
                if (sgn(v) != 0) {
                    nidx.push_back(idx[i]);
                    nval.push_back(std::move(v));
                }
                ++i;
                ++j;
            }
        }
        Value g = 0;
        for (const auto& v : nval) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& v : nval) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        idx.swap(nidx);
        val.swap(nval);
    }

    static std::vector<Value> from_rationals(const std::vector<Rational>& q) {
        Integer l = 1;
        for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Value> out;
        out.reserve(q.size());
        for (const auto& x : q) out.push_back(Integer(x.get_num() * (l / x.get_den())));
        return out;
    }
};

struct ModRing {
    using Value = std::uint64_t;
    static inline std::uint64_t p = 2;

    static bool is_unit(const Value&) { return true; }
    static std::size_t weight(const Value&) { return 1; }
    static Value inv(Value a) {
        Value r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    }

    static void combine(std::vector<std::uint32_t>& idx, std::vector<Value>& val,
                        const std::vector<std::uint32_t>& pidx, const std::vector<Value>& pval,
                        const Value& a, const Value& b, std::vector<std::uint32_t>& fill) {
        Value f = b * inv(a) % p;
        std::vector<std::uint32_t> nidx;
        std::vector<Value> nval;
        nidx.reserve(idx.size() + pidx.size());
        nval.reserve(idx.size() + pidx.size());
        std::size_t i = 0, j = 0;
        while (i < idx.size() || j < pidx.size()) {
            if (j == pidx.size() || (i < idx.size() && idx[i] < pidx[j])) {
                nidx.push_back(idx[i]);
                nval.push_back(val[i]);
                ++i;
            } else if (i == idx.size() || pidx[j] < idx[i]) {
                nidx.push_back(pidx[j]);
                nval.push_back((p - f * pval[j] % p) % p);
                fill.push_back(pidx[j]);
                ++j;
            } else {
                Value v = (val[i] + p - f * pval[j] % p) % p;
                if (v != 0) {
                    nidx.push_back(idx[i]);
                    nval.push_back(v);
                }
                ++i;
                ++j;
            }
        }
        idx.swap(nidx);
        val.swap(nval);
    }
};

template <class Ring>
struct Row {
    std::vector<std::uint32_t> idx;
    std::vector<typename Ring::Value> val;
    bool active = true;
};

template <class Ring>
std::size_t eliminate(std::vector<Row<Ring>>& rows, std::uint32_t ncols, bool parallel) {
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    using Key = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
        if (rows[r].idx.empty()) {
            rows[r].active = false;
            continue;
        }
        for (auto c : rows[r].idx) col_rows[c].push_back(r);
        queue.emplace(rows[r].idx.size(), r);
    }

    std::size_t rank = 0;
    std::vector<std::uint32_t> affected;
    while (!queue.empty()) {
        auto [nnz, r] = queue.top();
        queue.pop();
        Row<Ring>& prow = rows[r];
        if (!prow.active || prow.idx.size() != nnz) continue;
        if (prow.idx.empty()) {
            prow.active = false;
            continue;
        }

        std::size_t best = 0;
        for (std::size_t k = 1; k < prow.idx.size(); ++k) {
            auto score = [&](std::size_t t) {
                return std::make_pair(col_rows[prow.idx[t]].size() * 2 + (Ring::is_unit(prow.val[t]) ? 0 : 1),
                                      Ring::weight(prow.val[t]));
            };
            if (score(k) < score(best)) best = k;
        }
        std::uint32_t c = prow.idx[best];
        const auto a = prow.val[best];
        prow.active = false;
        ++rank;

        affected.clear();
        for (auto other : col_rows[c]) {
            if (other == r || !rows[other].active) continue;
            const auto& oi = rows[other].idx;
            if (std::binary_search(oi.begin(), oi.end(), c)) affected.push_back(other);
        }
        std::sort(affected.begin(), affected.end());
        affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
        col_rows[c].clear();

        std::vector<std::vector<std::uint32_t>> fills(affected.size());
        std::int64_t n = static_cast<std::int64_t>(affected.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel && n >= 64)
        for (std::int64_t t = 0; t < n; ++t) {
            Row<Ring>& row = rows[affected[t]];
            auto pos = std::lower_bound(row.idx.begin(), row.idx.end(), c) - row.idx.begin();
            auto b = row.val[pos];
            Ring::combine(row.idx, row.val, prow.idx, prow.val, a, b, fills[t]);
        }
        for (std::size_t t = 0; t < affected.size(); ++t) {
            std::uint32_t id = affected[t];
            for (auto col : fills[t]) col_rows[col].push_back(id);
            if (rows[id].idx.empty())
                rows[id].active = false;
            else
                queue.emplace(rows[id].idx.size(), id);
        }
        prow.idx.clear();
        prow.val.clear();
    }
    return rank;
}

// Rows of the orientation with fewer rows; rank is transpose invariant.
std::vector<SparseVec> short_side(const SparseMatrix& m, std::uint32_t& ncols) {
    if (m.rows() <= m.cols()) {
        SparseMatrix t = m.transpose();
        ncols = static_cast<std::uint32_t>(m.cols());
        return t.columns();
    }
    ncols = static_cast<std::uint32_t>(m.rows());
    return m.columns();
}

}  // namespace

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
    Integer pz = static_cast<unsigned long>(p);
    Integer den = q.get_den() % pz;
    if (den == 0) throw InputError("denominator divisible by " + std::to_string(p));
    Integer num = q.get_num() % pz;
    if (num < 0) num += pz;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    Integer r = num * inv % pz;
    return r.get_ui();
}

std::size_t rank_sparse(const SparseMatrix& m, Field field, bool parallel) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::uint32_t ncols = 0;
    std::vector<SparseVec> src = short_side(m, ncols);
    if (field.is_rational()) {
        std::vector<Row<IntegerRing>> rows(src.size());
        for (std::size_t r = 0; r < src.size(); ++r) {
            std::vector<Rational> q;
            for (const auto& e : src[r]) {
                rows[r].idx.push_back(static_cast<std::uint32_t>(e.index));
                q.push_back(e.value);
            }
            rows[r].val = IntegerRing::from_rationals(q);
        }
        return eliminate(rows, ncols, parallel);
    }
    ModRing::p = field.p;
    std::vector<Row<ModRing>> rows(src.size());
    for (std::size_t r = 0; r < src.size(); ++r) {
        for (const auto& e : src[r]) {
            auto v = reduce_mod(e.value, field.p);
            if (v == 0) continue;
            rows[r].idx.push_back(static_cast<std::uint32_t>(e.index));
            rows[r].val.push_back(v);
        }
    }
    return eliminate(rows, ncols, parallel);
}

std::size_t rank(const SparseMatrix& m, Field field) { return rank_sparse(m, field, parallel_enabled()); }

std::size_t rank_reference(const SparseMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(c));
    for (std::size_t j = 0; j < c; ++j)
        for (const auto& e : m.column(j)) a[e.index][j] = e.value;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t piv = rank;
        while (piv < r && sgn(a[piv][col]) == 0) ++piv;
        if (piv == r) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < r; ++i) {
            if (sgn(a[i][col]) == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (std::size_t k = col; k < c; ++k) a[i][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace hopfcyc
