#pragma once

#include "hopfcyc/scalar.hpp"

#include <vector>

namespace hopfcyc {

using IntMatrix = std::vector<std::vector<Integer>>;

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    IntMatrix u, d, v;
    std::vector<Integer> diagonal;  // min(rows, cols) entries
};

SmithForm smith_normal_form(const IntMatrix& a);

IntMatrix int_identity(std::size_t n);
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace hopfcyc
