#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hk {

// Exact rational number. GMP keeps every result canonical: the fraction is
// reduced and the denominator is positive.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long num, long den = 1);

// Accepts "p", "p/q" and a leading '-' or '+'. Throws Error(kParseError).
Rat parse_rat(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

bool is_integer(const Rat& r);
BigInt floor(const Rat& r);
BigInt ceil(const Rat& r);
Rat abs(const Rat& r);
Rat pow(const Rat& base, unsigned exponent);

// Exact k-th root when it exists (r >= 0).
bool exact_root(const Rat& r, unsigned k, Rat* root);

// Throws Error(kInvalidArgument) if the value does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace hk
