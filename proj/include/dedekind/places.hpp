#pragma once

#include "dedekind/base_pid.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/factor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dedekind {

template <BasicPid R>
using FractionElement = Fraction<R>;

/// A finite place (a canonical prime of A) or the place at infinity.
template <BasicPid R>
struct Place {
    bool infinite = false;
    typename R::element prime{};
    Integer residue_size = 0;

    bool operator==(const Place&) const = default;
};

/// |x|_v as an exact rational. For finite places value = residue_size^exponent.
template <BasicPid R>
struct AbsValue {
    Place<R> place;
    long exponent = 0;
    Rational value;
};

template <BasicPid R>
Place<R> infinite_place(const R&)
{
    Place<R> p;
    p.infinite = true;
    return p;
}

template <BasicPid R>
Place<R> finite_place(const R& ring, const typename R::element& prime)
{
    if (ring.is_zero(prime) || ring.is_unit(prime) || ring.canonical(prime) != prime)
        throw domain_rejection("place needs a canonical prime");
    bool irreducible;
    if constexpr (R::kind == RingKind::integers)
        irreducible = is_probable_prime(prime);
    else
        irreducible = ring.is_irreducible(prime);
    if (!irreducible)
        throw domain_rejection("place needs an irreducible element: " + ring.to_string(prime));
    return Place<R>{false, prime, ring.norm(prime)};
}

template <BasicPid R>
std::string place_to_string(const R& ring, const Place<R>& p)
{
    return p.infinite ? std::string("inf") : "(" + ring.to_string(p.prime) + ")";
}

namespace detail {

template <BasicPid R>
long base_valuation(const R& ring, typename R::element a, const typename R::element& p)
{
    long v = 0;
    for (;;) {
        auto [q, r] = ring.divmod(a, p);
        if (!ring.is_zero(r))
            return v;
        a = std::move(q);
        ++v;
    }
}

template <BasicPid R>
void require_nonzero(const R& ring, const Fraction<R>& x)
{
    if (ring.is_zero(x.num))
        throw domain_rejection("zero element: valuation is infinite");
}

} // namespace detail

template <BasicPid R>
long valuation(const R& ring, const Fraction<R>& x, const Place<R>& place)
{
    detail::require_nonzero(ring, x);
    if (place.infinite)
        throw domain_rejection("valuation needs a finite place");
    return detail::base_valuation(ring, x.num, place.prime) - detail::base_valuation(ring, x.den, place.prime);
}

template <BasicPid R>
AbsValue<R> abs_value(const R& ring, const Fraction<R>& x, const Place<R>& place)
{
    detail::require_nonzero(ring, x);
    AbsValue<R> a;
    a.place = place;
    if (place.infinite) {
        a.value = Rational(ring.norm(x.num), ring.norm(x.den));
        return a;
    }
    a.exponent = -valuation(ring, x, place);
    Integer power = ipow(place.residue_size, static_cast<unsigned long>(a.exponent < 0 ? -a.exponent : a.exponent));
    a.value = a.exponent < 0 ? Rational(Integer(1), power) : Rational(power);
    return a;
}

/// Finite places where |x|_v != 1, in the ring's order.
template <BasicPid R>
std::vector<Place<R>> support(const R& ring, const Fraction<R>& x)
{
    detail::require_nonzero(ring, x);
    std::vector<typename R::element> primes;
    for (const auto& part : {x.num, x.den})
        for (auto& [p, e] : factor(ring, part))
            primes.push_back(p);
    std::sort(primes.begin(), primes.end(), [&](const auto& a, const auto& b) { return ring.compare(a, b) < 0; });
    std::vector<Place<R>> out;
    for (const auto& p : primes)
        out.push_back(Place<R>{false, p, ring.norm(p)});
    return out;
}

template <BasicPid R>
struct ProductFormula {
    std::vector<AbsValue<R>> factors; // support places, then infinity
    Rational product;
    bool holds = false;
};

template <BasicPid R>
ProductFormula<R> product_formula(const R& ring, const Fraction<R>& x)
{
    ProductFormula<R> out;
    out.product = 1;
    for (const auto& place : support(ring, x))
        out.factors.push_back(abs_value(ring, x, place));
    out.factors.push_back(abs_value(ring, x, infinite_place(ring)));
    for (const auto& f : out.factors)
        out.product *= f.value;
    out.holds = out.product == 1;
    return out;
}

} // namespace dedekind
