#include "hopfcyc/echelon.hpp"

#include <algorithm>

namespace hopfcyc {

namespace {

SparseVec to_vec(const std::map<Index, Rational>& work) {
    SparseVec out;
    out.reserve(work.size());
    for (const auto& [k, c] : work)
        if (sgn(c) != 0) out.push_back(Entry{k, c});
    return out;
}

// Eliminates every pivot position present in work.
void eliminate(std::map<Index, Rational>& work, const std::map<Index, SparseVec>& rows) {
    auto it = work.begin();
    while (it != work.end()) {
        if (sgn(it->second) == 0) {
            it = work.erase(it);
            continue;
        }
        auto piv = rows.find(it->first);
        if (piv == rows.end()) {
            ++it;
            continue;
        }
        Rational c = it->second;
        Index key = it->first;
        for (const auto& e : piv->second) {
            if (e.index == key) continue;
            work[e.index] -= c * e.value;
        }
        it = work.erase(it);
        // Entries added by the pivot row lie strictly after key.
        it = work.upper_bound(key);
    }
}

}  // namespace

SparseVec Echelon::reduce(const SparseVec& v) const {
    std::map<Index, Rational> work;
    for (const auto& e : v) work.emplace(e.index, e.value);
    eliminate(work, rows_);
    return to_vec(work);
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    if (r.back().index >= ambient_) throw std::out_of_range("echelon: index out of range");
    Rational lead = r.front().value;
    for (auto& e : r) e.value /= lead;
    Index key = r.front().index;
    if (!rows_.empty() && rows_.begin()->first < key) reduced_ = false;
    rows_.emplace(key, std::move(r));
    return true;
}

void Echelon::make_reduced() {
    if (reduced_) return;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        std::map<Index, Rational> work;
        bool touches = false;
        for (const auto& e : it->second) {
            work.emplace(e.index, e.value);
            if (e.index != it->first && rows_.count(e.index)) touches = true;
        }
        if (!touches) continue;
        Rational lead = work.begin()->second;
        work.erase(work.begin());
        eliminate(work, rows_);
        SparseVec row{Entry{it->first, lead}};
        for (auto& e : to_vec(work)) row.push_back(std::move(e));
        it->second = std::move(row);
    }
    reduced_ = true;
}

Subspace::Subspace(Index ambient, const std::vector<SparseVec>& spanning) : ambient_(ambient) {
    Echelon e(ambient);
    for (const auto& v : spanning) e.insert(v);
    e.make_reduced();
    std::vector<SparseVec> cols;
    for (const auto& [k, row] : e.rows()) {
        pivots_.push_back(k);
        cols.push_back(row);
    }
    inclusion_ = SparseMatrix::from_columns(ambient, std::move(cols));
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
    SparseVec coords;
    SparseVec residual = v;
    for (Index k = 0; k < dim(); ++k) {
        Rational c = coefficient(v, pivots_[k]);
        if (sgn(c) == 0) continue;
        coords.push_back(Entry{k, c});
        residual = axpy(residual, -c, inclusion_.column(k));
    }
    if (!residual.empty()) return std::nullopt;
    return coords;
}

Quotient::Quotient(Index ambient, const std::vector<SparseVec>& relators) {
    Echelon e(ambient);
    for (const auto& r : relators) e.insert(r);
    build(std::move(e));
}

Quotient::Quotient(Echelon relators) { build(std::move(relators)); }

void Quotient::build(Echelon e) {
    e.make_reduced();
    ambient_ = e.ambient();
    rows_ = e.rows();
    position_.assign(ambient_, -1);
    for (Index j = 0; j < ambient_; ++j) {
        if (!rows_.count(j)) {
            position_[j] = static_cast<std::int64_t>(complement_.size());
            complement_.push_back(j);
        }
    }
}

SparseVec Quotient::project_basis(Index j) const {
    if (position_[j] >= 0) return unit_vector(static_cast<Index>(position_[j]));
    SparseVec out;
    for (const auto& e : rows_.at(j)) {
        if (e.index == j) continue;
        out.push_back(Entry{static_cast<Index>(position_[e.index]), -e.value});
    }
    normalize(out);
    return out;
}

SparseVec Quotient::project(const SparseVec& v) const {
    SparseVec out;
    for (const auto& e : v) {
        if (position_[e.index] >= 0) {
            out.push_back(Entry{static_cast<Index>(position_[e.index]), e.value});
            continue;
        }
        for (const auto& f : rows_.at(e.index)) {
            if (f.index == e.index) continue;
            out.push_back(Entry{static_cast<Index>(position_[f.index]), -e.value * f.value});
        }
    }
    normalize(out);
    return out;
}

SparseMatrix Quotient::projection() const {
    return assemble_serial(dim(), ambient_, [&](Index j) { return project_basis(j); });
}

SparseMatrix Quotient::section() const {
    std::vector<SparseVec> cols;
    for (Index k : complement_) cols.push_back(unit_vector(k));
    return SparseMatrix::from_columns(ambient_, std::move(cols));
}

std::vector<SparseVec> Quotient::relator_basis() const {
    std::vector<SparseVec> out;
    for (const auto& [k, row] : rows_) out.push_back(row);
    return out;
}

RankKernel rank_kernel(const SparseMatrix& m) {
    SparseMatrix t = m.transpose();
    Echelon e(m.cols());
    for (Index i = 0; i < t.cols(); ++i) e.insert(t.column(i));
    e.make_reduced();
    RankKernel out;
    out.rank = e.rank();
    const auto& rows = e.rows();
    for (Index f = 0; f < m.cols(); ++f) {
        if (rows.count(f)) continue;
        SparseVec v{Entry{f, 1}};
        for (const auto& [p, row] : rows) {
            Rational c = coefficient(row, f);
            if (sgn(c) != 0) v.push_back(Entry{p, -c});
        }
        normalize(v);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b) {
    SparseMatrix t = m.transpose();
    Index n = m.cols();
    std::vector<SparseVec> rows(m.rows());
    for (Index i = 0; i < m.rows(); ++i) rows[i] = t.column(i);
    for (const auto& e : b) rows.at(e.index).push_back(Entry{n, e.value});
    Echelon e(n + 1);
    for (const auto& r : rows) e.insert(r);
    e.make_reduced();
    if (e.rows().count(n)) return std::nullopt;
    SparseVec x;
    for (const auto& [p, row] : e.rows()) {
        Rational c = coefficient(row, n);
        if (sgn(c) != 0) x.push_back(Entry{p, c});
    }
    return x;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank_kernel(m).rank != m.cols()) return std::nullopt;
    std::vector<SparseVec> cols;
    for (Index j = 0; j < m.rows(); ++j) {
        auto x = solve(m, unit_vector(j));
        if (!x) return std::nullopt;
        cols.push_back(*x);
    }
    return SparseMatrix::from_columns(m.cols(), std::move(cols));
}

}  // namespace hopfcyc
