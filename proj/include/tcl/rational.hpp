#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tcl {

using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and "-p/q"; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

// Exact binomial coefficient for small arguments; 0 when k < 0 or k > n.
std::int64_t binom(std::int64_t n, std::int64_t k);

}  // namespace tcl
