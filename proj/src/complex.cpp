#include "hopfcyc/complex.hpp"

#include "hopfcyc/echelon.hpp"
#include "hopfcyc/rank.hpp"

#include <exception>
#include <stdexcept>

namespace hopfcyc {

std::string check_complex(const ChainComplexData& c) {
    if (c.diff.size() != c.dims.size()) return "differential count does not match degree count";
    for (int n = 1; n <= c.top(); ++n) {
        const auto& d = c.d(n);
        if (d.cols() != c.dims[n] || d.rows() != c.dims[n - 1])
            return "differential in degree " + std::to_string(n) + " has the wrong shape";
    }
    for (int n = 2; n <= c.top(); ++n)
        if (!(c.d(n - 1) * c.d(n)).is_zero()) return "d o d != 0 in degree " + std::to_string(n);
    return {};
}

std::vector<std::size_t> differential_ranks(const std::vector<const SparseMatrix*>& ms, Field field) {
    std::vector<std::size_t> out(ms.size());
    std::exception_ptr failure;
    std::int64_t n = static_cast<std::int64_t>(ms.size());
    bool par = parallel_enabled();
#pragma omp parallel for schedule(dynamic, 1) if (par && n > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            // Inner loops stay serial when degrees already run concurrently.
            out[i] = rank_sparse(*ms[i], field, par && n == 1);
        } catch (...) {
#pragma omp critical(hopfcyc_rank_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<Index> homology_dims(const ChainComplexData& c, int lo, int hi, Field field) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad degree range");
    if (hi + 1 > c.top())
        throw InsufficientTruncation("homology in degree " + std::to_string(hi) + " needs the complex through degree " +
                                     std::to_string(hi + 1) + ", materialized only through " +
                                     std::to_string(c.top()));
    std::vector<const SparseMatrix*> ms;
    for (int n = std::max(lo, 1); n <= hi + 1; ++n) ms.push_back(&c.d(n));
    auto ranks = differential_ranks(ms, field);
    auto rank_of = [&](int n) -> std::size_t { return n < std::max(lo, 1) ? 0 : ranks[n - std::max(lo, 1)]; };
    std::vector<Index> out;
    for (int n = lo; n <= hi; ++n) out.push_back(c.dims[n] - rank_of(n) - rank_of(n + 1));
    return out;
}

bool BicomplexData::has_cell(int p, int q) const {
    return p >= 0 && q >= 0 && p < static_cast<int>(dims.size()) && q < static_cast<int>(dims[p].size());
}

std::string check_bicomplex(const BicomplexData& b) {
    auto cell = [](int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
    for (int p = 0; p < static_cast<int>(b.dims.size()); ++p) {
        for (int q = 0; q < static_cast<int>(b.dims[p].size()); ++q) {
            if (q >= 2 && !(b.vertical[p][q - 1] * b.vertical[p][q]).is_zero())
                return "vertical maps do not square to zero at " + cell(p, q);
            if (p >= 2 && b.has_cell(p - 1, q) && b.has_cell(p - 2, q) &&
                !(b.horizontal[p - 1][q] * b.horizontal[p][q]).is_zero())
                return "horizontal maps do not square to zero at " + cell(p, q);
            if (p >= 1 && q >= 1 && b.has_cell(p - 1, q)) {
                SparseMatrix vh = b.vertical[p - 1][q] * b.horizontal[p][q];
                SparseMatrix hv = b.horizontal[p][q - 1] * b.vertical[p][q];
                if (!(vh + hv).is_zero()) return "square does not anticommute at " + cell(p, q);
            }
        }
    }
    return {};
}

ChainComplexData total_complex(const BicomplexData& b, int max_degree) {
    for (int n = 0; n <= max_degree; ++n)
        for (int p = 0; p <= n; ++p)
            if (!b.has_cell(p, n - p))
                throw InsufficientTruncation("total degree " + std::to_string(n) + " needs cell (" + std::to_string(p) +
                                             "," + std::to_string(n - p) + ")");
    ChainComplexData c;
    // offsets[n][p]: start of cell (p, n-p) inside Tot_n
    std::vector<std::vector<Index>> offsets(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        Index off = 0;
        for (int p = 0; p <= n; ++p) {
            offsets[n].push_back(off);
            off += b.dim(p, n - p);
        }
        c.dims.push_back(off);
    }
    c.diff.resize(max_degree + 1);
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<SparseVec> cols;
        cols.reserve(c.dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            for (Index j = 0; j < b.dim(p, q); ++j) {
                SparseVec col;
                if (q >= 1)
                    for (const auto& e : b.vertical[p][q].column(j))
                        col.push_back(Entry{offsets[n - 1][p] + e.index, e.value});
                if (p >= 1)
                    for (const auto& e : b.horizontal[p][q].column(j))
                        col.push_back(Entry{offsets[n - 1][p - 1] + e.index, e.value});
                cols.push_back(std::move(col));
            }
        }
        c.diff[n] = SparseMatrix::from_columns(c.dims[n - 1], std::move(cols));
    }
    return c;
}

bool QuasiIsoReport::ok() const {
    if (!chain_map) return false;
    for (bool b : iso)
        if (!b) return false;
    return true;
}

QuasiIsoReport quasi_iso_check(const ChainComplexData& source, const ChainComplexData& target,
                               const ChainMapData& f, int lo, int hi) {
    QuasiIsoReport r;
    if (hi + 1 > source.top() || hi + 1 > target.top() || static_cast<int>(f.maps.size()) <= hi + 1)
        throw InsufficientTruncation("quasi-isomorphism check through degree " + std::to_string(hi) +
                                     " needs both complexes and the map through degree " + std::to_string(hi + 1));
    for (int n = 1; n <= hi + 1; ++n) {
        if (!(f.maps[n - 1] * source.d(n) == target.d(n) * f.maps[n])) {
            r.chain_map = false;
            r.chain_map_failure = "f d != d f in degree " + std::to_string(n);
            return r;
        }
    }
    r.source_dims = homology_dims(source, lo, hi);
    r.target_dims = homology_dims(target, lo, hi);
    for (int n = lo; n <= hi; ++n) {
        Index hs = r.source_dims[n - lo], ht = r.target_dims[n - lo];
        if (hs != ht) {
            r.iso.push_back(false);
            continue;
        }
        // Rank of the induced map: dim(f(Z_n) + B'_n) - dim B'_n.
        std::vector<SparseVec> cycles;
        if (n == 0) {
            for (Index j = 0; j < source.dims[0]; ++j) cycles.push_back(unit_vector(j));
        } else {
            cycles = rank_kernel(source.d(n)).kernel;
        }
        std::vector<SparseVec> image;
        for (const auto& z : cycles) image.push_back(f.maps[n].apply(z));
        SparseMatrix fz = SparseMatrix::from_columns(target.dims[n], image);
        const SparseMatrix& bd = target.d(n + 1);
        std::size_t rb = rank(bd);
        std::size_t rs = rank(bd.hstack(fz));
        r.iso.push_back(rs - rb == hs);
    }
    return r;
}

}  // namespace hopfcyc
