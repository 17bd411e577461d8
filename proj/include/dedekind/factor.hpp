#pragma once

#include "dedekind/base_pid.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/integer_ring.hpp"
#include "dedekind/poly_ring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace dedekind {

/// Prime factorization as (canonical prime, multiplicity), primes ascending
/// in the ring's total order.
template <class E>
using Factorization = std::vector<std::pair<E, unsigned>>;

namespace detail {

inline Integer pollard_brent(const Integer& n, std::uint64_t seed)
{
    if (n % 2 == 0)
        return 2;
    std::mt19937_64 rng(seed);
    for (;;) {
        Integer y = random_below(rng, n - 1) + 1;
        Integer c = random_below(rng, n - 1) + 1;
        Integer m = 128, g = 1, r = 1, q = 1, x, ys;
        auto f = [&](const Integer& v) { return (v * v + c) % n; };
        do {
            x = y;
            for (Integer i = 0; i < r; ++i)
                y = f(y);
            Integer k = 0;
            do {
                ys = y;
                for (Integer i = 0; i < std::min<Integer>(m, r - k); ++i) {
                    y = f(y);
                    q = q * boost::multiprecision::abs(x - y) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = boost::multiprecision::gcd(Integer(boost::multiprecision::abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

inline void split_integer(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t& seed)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n, seed++);
    split_integer(d, out, seed);
    split_integer(n / d, out, seed);
}

} // namespace detail

/// Trial division to 10^6, then Pollard rho for cofactors below 2^128.
inline Factorization<Integer> factor_integer(Integer n)
{
    if (n == 0)
        throw domain_rejection("factorization of zero");
    n = boost::multiprecision::abs(n);
    std::map<Integer, unsigned> found;
    for (std::uint32_t p = 2; p <= 1'000'000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2))
        while (n % p == 0) {
            ++found[Integer(p)];
            n /= p;
        }
    if (n > 1) {
        if (!is_probable_prime(n) && n > (Integer(1) << 128))
            throw resource_limit("factorization limit: composite cofactor above 2^128");
        std::uint64_t seed = 1;
        detail::split_integer(n, found, seed);
    }
    return {found.begin(), found.end()};
}

namespace detail {

inline Poly monic(const PolyRing& ring, const Poly& f) { return ring.canonical(f); }

inline Poly pth_root(const PolyRing& ring, const Poly& f)
{
    const std::uint32_t p = ring.field().characteristic();
    const std::uint64_t e = ring.q() / p;
    Poly r;
    for (std::size_t i = 0; i < f.size(); i += p)
        r.push_back(ring.field().pow(f[i], e));
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

inline void squarefree_parts(const PolyRing& ring, const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out)
{
    if (PolyRing::degree(f) < 1)
        return;
    Poly c = ring.gcd(f, ring.derivative(f));
    Poly w = ring.divexact(f, c);
    unsigned i = 1;
    while (PolyRing::degree(w) > 0) {
        Poly y = ring.gcd(w, c);
        Poly fac = ring.divexact(w, y);
        if (PolyRing::degree(fac) > 0)
            out.emplace_back(monic(ring, fac), i * mult);
        w = y;
        c = ring.divexact(c, y);
        ++i;
    }
    if (PolyRing::degree(c) > 0)
        squarefree_parts(ring, monic(ring, pth_root(ring, c)), mult * ring.field().characteristic(), out);
}

inline void equal_degree_split(const PolyRing& ring, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out)
{
    const int n = PolyRing::degree(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    const Integer qd = ipow(Integer(ring.q()), static_cast<unsigned long>(d));
    for (;;) {
        Poly a = ring.sample(rng, ipow(Integer(ring.q()), static_cast<unsigned long>(n - 1)));
        if (PolyRing::degree(a) < 1)
            continue;
        Poly b;
        if (ring.characteristic() == 2) {
            // Absolute trace a + a^2 + ... + a^(2^(k d - 1)) onto F_2.
            const unsigned k = ring.field().degree() * static_cast<unsigned>(d);
            Poly power = ring.rem(a, g);
            b = power;
            for (unsigned i = 1; i < k; ++i) {
                power = ring.rem(ring.mul(power, power), g);
                b = ring.add(b, power);
            }
        } else {
            b = ring.sub(ring.powmod(a, (qd - 1) / 2, g), ring.one());
        }
        Poly h = ring.gcd(b, g);
        if (PolyRing::degree(h) > 0 && PolyRing::degree(h) < n) {
            equal_degree_split(ring, h, d, rng, out);
            equal_degree_split(ring, monic(ring, ring.divexact(g, h)), d, rng, out);
            return;
        }
    }
}

} // namespace detail

/// Squarefree decomposition, distinct-degree, then Cantor-Zassenhaus
/// equal-degree splitting with a fixed seed.
inline Factorization<Poly> factor_poly(const PolyRing& ring, const Poly& f)
{
    if (ring.is_zero(f))
        throw domain_rejection("factorization of zero");
    if (PolyRing::degree(f) > 4096)
        throw resource_limit("factorization limit: degree above 4096");
    std::vector<std::pair<Poly, unsigned>> sqf;
    detail::squarefree_parts(ring, detail::monic(ring, f), 1, sqf);
    std::map<Integer, std::pair<Poly, unsigned>> found; // keyed by code order
    std::mt19937_64 rng(0x5eed);
    auto code = [&](const Poly& p) {
        Integer c = 0;
        for (std::size_t i = p.size(); i-- > 0;)
            c = c * ring.q() + p[i];
        return c;
    };
    for (auto& [g0, mult] : sqf) {
        Poly g = g0;
        Poly h = ring.variable();
        const Poly x = ring.variable();
        for (int i = 1; PolyRing::degree(g) >= 2 * i; ++i) {
            h = ring.powmod(h, Integer(ring.q()), g);
            Poly d = ring.gcd(ring.sub(h, x), g);
            if (PolyRing::degree(d) > 0) {
                std::vector<Poly> parts;
                detail::equal_degree_split(ring, d, i, rng, parts);
                for (auto& p : parts) {
                    auto& slot = found[code(p)];
                    slot.first = p;
                    slot.second += mult;
                }
                g = detail::monic(ring, ring.divexact(g, d));
                h = ring.rem(h, g);
            }
        }
        if (PolyRing::degree(g) > 0) {
            auto& slot = found[code(g)];
            slot.first = g;
            slot.second += mult;
        }
    }
    Factorization<Poly> out;
    for (auto& [k, v] : found)
        out.push_back(v);
    return out;
}

template <BasicPid R>
Factorization<typename R::element> factor(const R& ring, const typename R::element& a)
{
    if constexpr (R::kind == RingKind::integers) {
        (void)ring;
        return factor_integer(a);
    } else {
        return factor_poly(ring, a);
    }
}

} // namespace dedekind
