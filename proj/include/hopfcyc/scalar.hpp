#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfcyc {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Coefficient field of a session: p == 0 means the rationals.
struct Field {
    std::uint64_t p = 0;

    bool is_rational() const { return p == 0; }
    std::string name() const;
    // Accepts "q" or "f<p>" with p prime.
    static Field parse(std::string_view text);
};

// Input or configuration problem (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested degree needs operators beyond the materialized truncation.
class InsufficientTruncation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structure failed an axiom that a construction depends on.
class AxiomViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hopfcyc
