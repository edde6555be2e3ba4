#include "hgg/exactmath.hpp"

#include <cstdlib>
#include <limits>

namespace hgg {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result = 1, b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp > 0) b *= b;
    }
    return result;
}

Rational rpow(const Rational& base, unsigned exp) {
    return Rational(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

BigInt iroot_floor(const BigInt& x, unsigned r) {
    if (x < 0) throw parameter_error("iroot_floor: negative radicand");
    if (r == 0) throw parameter_error("iroot_floor: zeroth root");
    if (x == 0 || x == 1 || r == 1) return x;
    // bisection on t^r <= x
    BigInt lo = 1, hi = 1;
    while (ipow(hi, r) <= x) hi <<= 1;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) >> 1;
        if (ipow(mid, r) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool rational_sqrt(const Rational& x, Rational& out) {
    if (x < 0) return false;
    BigInt n = numerator(x), d = denominator(x);
    BigInt rn = iroot_floor(n, 2), rd = iroot_floor(d, 2);
    if (rn * rn != n || rd * rd != d) return false;
    out = Rational(rn, rd);
    return true;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; static_cast<long long>(f) * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::int64_t to_int64(const BigInt& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw resource_error("value does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

BigInt rational_ceil(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (q * d != n && n > 0) ++q;
    return q;
}

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

long long env_budget(const char* name, long long dflt) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return dflt;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v) return dflt;
    return parsed;
}

} // namespace hgg
