#include "hopfcyc/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

namespace hopfcyc {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

void normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        Index idx = v[i].index;
        Rational sum = v[i].value;
        std::size_t j = i + 1;
        for (; j < v.size() && v[j].index == idx; ++j) sum += v[j].value;
        if (sgn(sum) != 0) v[out++] = Entry{idx, std::move(sum)};
        i = j;
    }
    v.resize(out);
}

SparseVec unit_vector(Index i, const Rational& c) {
    if (sgn(c) == 0) return {};
    return SparseVec{Entry{i, c}};
}

SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            out.push_back(Entry{b[j].index, c * b[j].value});
            ++j;
        } else {
            Rational s = a[i].value + c * b[j].value;
            if (sgn(s) != 0) out.push_back(Entry{a[i].index, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scaled(const SparseVec& v, const Rational& c) {
    if (sgn(c) == 0) return {};
    SparseVec out = v;
    for (auto& e : out) e.value *= c;
    return out;
}

Rational coefficient(const SparseVec& v, Index i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const Entry& e, Index k) { return e.index < k; });
    if (it != v.end() && it->index == i) return it->value;
    return 0;
}

SparseMatrix::SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_columns(Index rows, std::vector<SparseVec> columns) {
    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = std::move(columns);
    for (auto& c : m.cols_) {
        normalize(c);
        if (!c.empty() && c.back().index >= rows) throw std::out_of_range("matrix entry out of range");
    }
    return m;
}

SparseMatrix SparseMatrix::identity(Index n) {
    SparseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.cols_[i] = unit_vector(i);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    Index r = rows.size();
    Index c = r ? rows[0].size() : 0;
    SparseMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            if (sgn(rows[i][j]) != 0) m.cols_[j].push_back(Entry{i, rows[i][j]});
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    SparseVec out;
    for (const auto& e : x) {
        for (const auto& f : cols_.at(e.index)) out.push_back(Entry{f.index, e.value * f.value});
    }
    normalize(out);
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols(), rows_);
    for (Index j = 0; j < cols(); ++j)
        for (const auto& e : cols_[j]) t.cols_[e.index].push_back(Entry{j, e.value});
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols() != rhs.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    return assemble(rows_, rhs.cols(), [&](Index j) { return apply(rhs.column(j)); });
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    SparseMatrix m(rows_, cols());
    for (Index j = 0; j < cols(); ++j) m.cols_[j] = axpy(cols_[j], 1, rhs.cols_[j]);
    return m;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
    SparseMatrix m(rows_, cols());
    for (Index j = 0; j < cols(); ++j) m.cols_[j] = axpy(cols_[j], -1, rhs.cols_[j]);
    return m;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    SparseMatrix m(rows_, cols());
    for (Index j = 0; j < cols(); ++j) m.cols_[j] = hopfcyc::scaled(cols_[j], c);
    return m;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) return false;
    for (Index j = 0; j < cols(); ++j) {
        const auto& a = cols_[j];
        const auto& b = rhs.cols_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].index != b[k].index || a[k].value != b[k].value) return false;
    }
    return true;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("hstack: row mismatch");
    SparseMatrix m = *this;
    m.cols_.insert(m.cols_.end(), rhs.cols_.begin(), rhs.cols_.end());
    return m;
}

SparseMatrix assemble_serial(Index rows, Index cols, const ColumnFn& fn) {
    std::vector<SparseVec> columns(cols);
    for (Index j = 0; j < cols; ++j) columns[j] = fn(j);
    return SparseMatrix::from_columns(rows, std::move(columns));
}

SparseMatrix assemble_parallel(Index rows, Index cols, const ColumnFn& fn) {
    std::vector<SparseVec> columns(cols);
    std::int64_t n = static_cast<std::int64_t>(cols);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t j = 0; j < n; ++j) {
        try {
            columns[j] = fn(static_cast<Index>(j));
            normalize(columns[j]);
        } catch (...) {
#pragma omp critical(hopfcyc_assemble_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return SparseMatrix::from_columns(rows, std::move(columns));
}

SparseMatrix assemble(Index rows, Index cols, const ColumnFn& fn) {
    if (parallel_enabled() && cols >= 256) return assemble_parallel(rows, cols, fn);
    return assemble_serial(rows, cols, fn);
}

}  // namespace hopfcyc
