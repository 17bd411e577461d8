#pragma once

#include "dedekind/errors.hpp"
#include "dedekind/integer.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dedekind {

enum class RingKind { integers, polynomials };

/// Caps on explicit enumerations (elements, residues, candidate lattices).
inline constexpr std::uint64_t enumeration_cap = 50'000'000ULL;

template <class E>
struct XGcd {
    E g, s, t; // s*a + t*b = g, g canonical
};

/// The basic PID Z with N(x) = |x|, c = C0 = 1.
class IntegerRing {
  public:
    using element = Integer;

    static constexpr RingKind kind = RingKind::integers;

    std::string name() const { return "Z"; }
    bool operator==(const IntegerRing&) const { return true; }

    element zero() const { return 0; }
    element one() const { return 1; }
    element from_integer(const Integer& n) const { return n; }

    bool is_zero(const element& a) const { return a == 0; }
    element add(const element& a, const element& b) const { return a + b; }
    element sub(const element& a, const element& b) const { return a - b; }
    element neg(const element& a) const { return -a; }
    element mul(const element& a, const element& b) const { return a * b; }

    /// Quotient and remainder with 0 <= r < |b|.
    std::pair<element, element> divmod(const element& a, const element& b) const
    {
        if (b == 0)
            throw std::domain_error("division by zero");
        element q = a / b, r = a % b;
        if (r < 0) {
            if (b > 0) {
                r += b;
                q -= 1;
            } else {
                r -= b;
                q += 1;
            }
        }
        return {std::move(q), std::move(r)};
    }

    element rem(const element& a, const element& b) const { return divmod(a, b).second; }

    element divexact(const element& a, const element& b) const
    {
        auto [q, r] = divmod(a, b);
        if (r != 0)
            throw std::logic_error("inexact division " + a.str() + " / " + b.str());
        return q;
    }

    bool divides(const element& d, const element& a) const
    {
        if (d == 0)
            return a == 0;
        return a % d == 0;
    }

    Integer norm(const element& a) const { return boost::multiprecision::abs(a); }

    bool is_unit(const element& a) const { return a == 1 || a == -1; }
    element unit_part(const element& a) const { return a < 0 ? element(-1) : element(1); }
    element unit_inverse(const element& u) const { return u; }
    element canonical(const element& a) const { return boost::multiprecision::abs(a); }
    std::vector<element> units() const { return {1, -1}; }

    XGcd<element> xgcd(const element& a, const element& b) const
    {
        element r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            element q = r0 / r1;
            element tmp = r0 - q * r1;
            r0 = std::move(r1);
            r1 = std::move(tmp);
            tmp = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(tmp);
            tmp = t0 - q * t1;
            t0 = std::move(t1);
            t1 = std::move(tmp);
        }
        if (r0 < 0) {
            r0 = -r0;
            s0 = -s0;
            t0 = -t0;
        }
        return {r0, s0, t0};
    }

    element gcd(const element& a, const element& b) const { return boost::multiprecision::gcd(a, b); }

    /// Total order matching enumerate_small: 0, 1, -1, 2, -2, ...
    int compare(const element& a, const element& b) const
    {
        Integer na = norm(a), nb = norm(b);
        if (na != nb)
            return na < nb ? -1 : 1;
        if (a == b)
            return 0;
        return a > b ? -1 : 1;
    }

    /// {x : |x| <= bound} in the order 0, 1, -1, 2, -2, ...
    std::vector<element> enumerate_small(const Integer& bound) const
    {
        std::vector<element> out;
        if (bound < 0)
            return out;
        if (bound > Integer(enumeration_cap / 2))
            throw resource_limit("enumerate_small: bound too large");
        auto b = bound.convert_to<std::uint64_t>();
        out.reserve(2 * b + 1);
        out.emplace_back(0);
        for (std::uint64_t i = 1; i <= b; ++i) {
            out.emplace_back(i);
            out.emplace_back(-Integer(i));
        }
        return out;
    }

    /// Canonical residues 0..|m|-1.
    std::vector<element> residues(const element& m) const
    {
        Integer n = norm(m);
        if (n == 0)
            throw std::domain_error("residues modulo zero");
        if (n > Integer(enumeration_cap))
            throw resource_limit("residue enumeration too large");
        std::vector<element> out;
        auto count = n.convert_to<std::uint64_t>();
        out.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i)
            out.emplace_back(i);
        return out;
    }

    /// Positive primes p <= bound, ascending.
    std::vector<element> primes_up_to(const Integer& bound) const
    {
        std::vector<element> out;
        if (bound < 2)
            return out;
        if (bound > Integer(enumeration_cap))
            throw resource_limit("prime enumeration too large");
        auto b = bound.convert_to<std::size_t>();
        std::vector<bool> composite(b + 1, false);
        for (std::size_t i = 2; i <= b; ++i) {
            if (composite[i])
                continue;
            out.emplace_back(i);
            for (std::size_t j = i * i; j <= b; j += i)
                composite[j] = true;
        }
        return out;
    }

    /// Uniform element with |x| <= bound.
    element sample(std::mt19937_64& rng, const Integer& bound) const
    {
        return random_below(rng, 2 * bound + 1) - bound;
    }

    Integer characteristic() const { return 0; }
    Integer small_norm_constant() const { return 1; }
    Integer quasi_triangle_constant() const { return 1; }

    std::string to_string(const element& a) const { return a.str(); }

    std::size_t hash(const element& a) const
    {
        auto low = static_cast<std::uint64_t>(boost::multiprecision::abs(a) & Integer(0xFFFFFFFFFFFFFFFFULL));
        return static_cast<std::size_t>(low * 0x9E3779B97F4A7C15ULL ^ (a < 0 ? 0x5bd1e995ULL : 0ULL));
    }
};

} // namespace dedekind
