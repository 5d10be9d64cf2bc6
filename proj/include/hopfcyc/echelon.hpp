#pragma once

#include "hopfcyc/sparse.hpp"

#include <map>
#include <optional>

namespace hopfcyc {

// Incremental row-echelon basis over Q.  Each stored row has leading
// coefficient 1 at its key; make_reduced() turns the set into RREF.
class Echelon {
public:
    explicit Echelon(Index ambient) : ambient_(ambient) {}

    // Returns true when v was independent of the rows already present.
    bool insert(const SparseVec& v);
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    void make_reduced();

    Index ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::map<Index, SparseVec>& rows() const { return rows_; }

private:
    Index ambient_;
    std::map<Index, SparseVec> rows_;
    bool reduced_ = true;
};

// Span of a family of vectors, with a basis in reduced echelon form so that
// coordinates are read off at the pivot positions.
class Subspace {
public:
    Subspace() = default;
    Subspace(Index ambient, const std::vector<SparseVec>& spanning);

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return static_cast<Index>(pivots_.size()); }
    const SparseMatrix& inclusion() const { return inclusion_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    std::optional<SparseVec> coordinates(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return coordinates(v).has_value(); }

private:
    Index ambient_ = 0;
    std::vector<Index> pivots_;
    SparseMatrix inclusion_;
};

// Ambient space modulo the span of relators.  The complement of the pivot
// positions gives the quotient basis; section() maps each quotient basis
// vector to its ambient representative.
class Quotient {
public:
    Quotient() = default;
    Quotient(Index ambient, const std::vector<SparseVec>& relators);
    Quotient(Echelon relators);

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return static_cast<Index>(complement_.size()); }
    SparseVec project(const SparseVec& v) const;
    SparseVec project_basis(Index j) const;
    // Ambient index representing quotient basis vector k.
    Index representative(Index k) const { return complement_[k]; }
    SparseMatrix projection() const;
    SparseMatrix section() const;
    // Rows spanning the relator subspace.
    std::vector<SparseVec> relator_basis() const;

private:
    void build(Echelon e);
    Index ambient_ = 0;
    std::vector<Index> complement_;
    std::vector<std::int64_t> position_;  // ambient index -> complement slot or -1
    std::map<Index, SparseVec> rows_;
};

struct RankKernel {
    std::size_t rank = 0;
    std::vector<SparseVec> kernel;  // basis of the null space
};

// Exact rank and null space; intended for small and medium matrices.
RankKernel rank_kernel(const SparseMatrix& m);

// Some solution of m x = b, or nullopt when inconsistent.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b);

// Inverse of a square invertible matrix, or nullopt.
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

}  // namespace hopfcyc
