#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace dedekind {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer ipow(Integer base, unsigned long exp)
{
    Integer r = 1;
    while (exp) {
        if (exp & 1U)
            r *= base;
        exp >>= 1U;
        if (exp)
            base *= base;
    }
    return r;
}

/// floor(sqrt(n)), n >= 0.
inline Integer isqrt(const Integer& n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Integer& n, Integer* root = nullptr)
{
    if (n < 0)
        return false;
    Integer r = isqrt(n);
    if (r * r != n)
        return false;
    if (root)
        *root = r;
    return true;
}

/// Largest m >= 0 with m^k <= n.
inline Integer iroot(const Integer& n, unsigned k)
{
    if (n < 0 || k == 0)
        throw std::domain_error("iroot: bad arguments");
    if (k == 1 || n < 2)
        return n;
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) / k + 2;
    Integer lo = 0, hi = Integer(1) << bits;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline Integer powmod(Integer base, Integer exp, const Integer& mod)
{
    return boost::multiprecision::powm(base, exp, mod);
}

/// Deterministic for n < 3.3e24 (first 13 prime bases); probabilistic beyond.
inline bool is_probable_prime(const Integer& n)
{
    if (n < 2)
        return false;
    static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned p : small) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : small) {
        Integer x = powmod(Integer(a), d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

inline std::string to_string(const Integer& n) { return n.str(); }

inline Integer parse_integer(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw std::invalid_argument("bad integer literal: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("bad integer literal: " + s);
    Integer r(s.substr(i));
    return s[0] == '-' ? Integer(-r) : r;
}

/// Uniform integer in [0, bound) from a 64-bit engine.
inline Integer random_below(std::mt19937_64& rng, const Integer& bound)
{
    if (bound <= 0)
        throw std::domain_error("random_below: bound must be positive");
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    for (;;) {
        Integer r = 0;
        for (unsigned got = 0; got < bits; got += 64)
            r = (r << 64) | Integer(rng());
        r >>= (((bits + 63) / 64) * 64 - bits);
        if (r < bound)
            return r;
    }
}

} // namespace dedekind
