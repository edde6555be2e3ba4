#pragma once

// Exact integer/rational helpers shared by the certificate math, the
// symbolic geometry layer and the probabilistic bounds.  Everything here
// is arbitrary precision; no floating point leaks into any decision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hgg/errors.hpp"

namespace hgg {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

BigInt ipow(const BigInt& base, unsigned exp);
Rational rpow(const Rational& base, unsigned exp);

// Largest t with t^r <= x.  Requires x >= 0, r >= 1.
BigInt iroot_floor(const BigInt& x, unsigned r);

// Exact square root of a nonnegative rational if it is itself rational.
bool rational_sqrt(const Rational& x, Rational& out);

bool is_prime(int n);

std::int64_t to_int64(const BigInt& v);

// ceil(num/den) for a nonnegative rational, as BigInt.
BigInt rational_ceil(const Rational& r);

std::string rational_str(const Rational& r);

// Budget knobs, overridable through environment variables (HGG_*).
long long env_budget(const char* name, long long dflt);

} // namespace hgg
