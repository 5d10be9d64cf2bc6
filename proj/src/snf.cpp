#include "hopfcyc/snf.hpp"

#include <utility>

namespace hopfcyc {

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    std::size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    IntMatrix out(r, std::vector<Integer>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    return out;
}

namespace {

struct Work {
    IntMatrix d, u, v;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    // row_i += f * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& f) {
        for (std::size_t k = 0; k < cols; ++k) d[i][k] += f * d[j][k];
        for (std::size_t k = 0; k < rows; ++k) u[i][k] += f * u[j][k];
    }
    // col_i += f * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& f) {
        for (std::size_t k = 0; k < rows; ++k) d[k][i] += f * d[k][j];
        for (std::size_t k = 0; k < cols; ++k) v[k][i] += f * v[k][j];
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    Work w;
    w.rows = a.size();
    w.cols = w.rows ? a[0].size() : 0;
    w.d = a;
    w.u = int_identity(w.rows);
    w.v = int_identity(w.cols);
    std::size_t n = std::min(w.rows, w.cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block goes to (t,t).
            std::size_t bi = w.rows, bj = w.cols;
            for (std::size_t i = t; i < w.rows; ++i)
                for (std::size_t j = t; j < w.cols; ++j)
                    if (w.d[i][j] != 0 && (bi == w.rows || abs(w.d[i][j]) < abs(w.d[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == w.rows) break;
            w.swap_rows(t, bi);
            w.swap_cols(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < w.rows; ++i) {
                if (w.d[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.d[i][t].get_mpz_t(), w.d[t][t].get_mpz_t());
                w.add_row(i, t, -q);
                if (w.d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < w.cols; ++j) {
                if (w.d[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.d[t][j].get_mpz_t(), w.d[t][t].get_mpz_t());
                w.add_col(j, t, -q);
                if (w.d[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < w.rows && divides; ++i)
                for (std::size_t j = t + 1; j < w.cols; ++j)
                    if (w.d[i][j] % w.d[t][t] != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.d[t][t] < 0) {
            for (std::size_t k = 0; k < w.cols; ++k) w.d[t][k] = -w.d[t][k];
            for (std::size_t k = 0; k < w.rows; ++k) w.u[t][k] = -w.u[t][k];
        }
    }
    SmithForm out;
    for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(w.d[t][t]);
    out.u = std::move(w.u);
    out.d = std::move(w.d);
    out.v = std::move(w.v);
    return out;
}

}  // namespace hopfcyc
