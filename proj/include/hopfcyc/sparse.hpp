#pragma once

#include "hopfcyc/scalar.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace hopfcyc {

using Index = std::uint64_t;

struct Entry {
    Index index;
    Rational value;

    friend bool operator==(const Entry& a, const Entry& b) { return a.index == b.index && a.value == b.value; }
};

// Sorted by index, no explicit zeros (after normalize()).
using SparseVec = std::vector<Entry>;

void normalize(SparseVec& v);
SparseVec unit_vector(Index i, const Rational& c = 1);
// a + c*b
SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec scaled(const SparseVec& v, const Rational& c);
Rational coefficient(const SparseVec& v, Index i);

// Column-major sparse matrix; column j is the image of basis vector j.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols);

    static SparseMatrix from_columns(Index rows, std::vector<SparseVec> columns);
    static SparseMatrix identity(Index n);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(cols_.size()); }
    const SparseVec& column(Index j) const { return cols_[j]; }
    const std::vector<SparseVec>& columns() const { return cols_; }
    std::size_t nnz() const;
    Rational at(Index i, Index j) const { return coefficient(cols_[j], i); }
    bool is_zero() const;

    SparseVec apply(const SparseVec& x) const;
    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix operator-(const SparseMatrix& rhs) const;
    SparseMatrix scaled(const Rational& c) const;
    bool operator==(const SparseMatrix& rhs) const;

    // Columns of this followed by columns of rhs.
    SparseMatrix hstack(const SparseMatrix& rhs) const;

private:
    Index rows_ = 0;
    std::vector<SparseVec> cols_;
};

// Builds a matrix column by column.  The parallel variant distributes
// columns over OpenMP threads; the result is identical.
using ColumnFn = std::function<SparseVec(Index)>;
SparseMatrix assemble_serial(Index rows, Index cols, const ColumnFn& fn);
SparseMatrix assemble_parallel(Index rows, Index cols, const ColumnFn& fn);
SparseMatrix assemble(Index rows, Index cols, const ColumnFn& fn);

// Global switch used by assemble() and the rank kernels.
void set_parallel(bool on);
bool parallel_enabled();

}  // namespace hopfcyc
