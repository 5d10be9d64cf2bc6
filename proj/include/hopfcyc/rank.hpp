#pragma once

#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

// Sparse rank by fraction-free elimination (integer rows with content
// removal over Q, word arithmetic over F_p).  Pivots are chosen from the
// sparsest row, preferring the column with the fewest remaining entries.
// With parallel == true the row updates of each pivot step run on OpenMP
// threads; the result does not depend on the thread count.
std::size_t rank_sparse(const SparseMatrix& m, Field field, bool parallel);

// Dispatches to rank_sparse using the global parallel switch.
std::size_t rank(const SparseMatrix& m, Field field = {});

// Dense Gaussian elimination over Q, serial.  Reference for tests and
// benchmarks only.
std::size_t rank_reference(const SparseMatrix& m);

// Reduces a rational matrix entrywise mod p; throws InputError when a
// denominator is divisible by p.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

}  // namespace hopfcyc
