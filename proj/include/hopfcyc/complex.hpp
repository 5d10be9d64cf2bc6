#pragma once

#include "hopfcyc/sparse.hpp"

#include <string>
#include <vector>

namespace hopfcyc {

// Chain complex truncated at top(): spaces C_0..C_top and differentials
// d_n : C_n -> C_{n-1} for 1 <= n <= top.
struct ChainComplexData {
    std::vector<Index> dims;
    std::vector<SparseMatrix> diff;  // diff[n] for n >= 1; diff[0] unused

    int top() const { return static_cast<int>(dims.size()) - 1; }
    const SparseMatrix& d(int n) const { return diff.at(static_cast<std::size_t>(n)); }
};

// Checks shapes and d_{n-1} d_n = 0.  Returns an empty string when valid,
// otherwise a description of the first failure.
std::string check_complex(const ChainComplexData& c);

// Homology dimensions in degrees lo..hi.  Needs hi + 1 <= top().
std::vector<Index> homology_dims(const ChainComplexData& c, int lo, int hi, Field field = {});

// Ranks of d_lo..d_hi, computed degreewise (in parallel when enabled).
std::vector<std::size_t> differential_ranks(const std::vector<const SparseMatrix*>& ms, Field field);

// Double complex with cells C_{p,q}, p,q >= 0.  vertical[p][q] maps
// (p,q) -> (p,q-1), horizontal[p][q] maps (p,q) -> (p-1,q).  Squares are
// expected to anticommute so that the total differential is the plain sum.
struct BicomplexData {
    std::vector<std::vector<Index>> dims;  // dims[p][q]
    std::vector<std::vector<SparseMatrix>> vertical;
    std::vector<std::vector<SparseMatrix>> horizontal;

    bool has_cell(int p, int q) const;
    Index dim(int p, int q) const { return has_cell(p, q) ? dims[p][q] : 0; }
};

// Checks that vertical and horizontal maps square to zero and anticommute
// on every cell present.  Empty string when valid.
std::string check_bicomplex(const BicomplexData& b);

// Total complex in degrees 0..max_degree.  Throws InsufficientTruncation if
// some cell with p+q <= max_degree is missing.
ChainComplexData total_complex(const BicomplexData& b, int max_degree);

// Chain map f_n : C_n -> D_n for n in 0..top.
struct ChainMapData {
    std::vector<SparseMatrix> maps;
};

struct QuasiIsoReport {
    bool chain_map = true;
    std::string chain_map_failure;
    std::vector<bool> iso;           // per degree lo..hi
    std::vector<Index> source_dims;  // homology dims of the source
    std::vector<Index> target_dims;
    bool ok() const;
};

QuasiIsoReport quasi_iso_check(const ChainComplexData& source, const ChainComplexData& target,
                               const ChainMapData& f, int lo, int hi);

}  // namespace hopfcyc
