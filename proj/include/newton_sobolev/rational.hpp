#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace newton_sobolev {

// Arbitrary-precision rational. GMP keeps every arithmetic result in lowest
// terms with a positive denominator; values built from raw num/den pairs go
// through make_rat() so the same holds for them.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rat parse_rat(std::string_view text);

// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

double to_double(const Rat& r);

bool is_integer(const Rat& r);

// Requires is_integer(r) and that the value fits.
std::int64_t to_int64(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace newton_sobolev
