#pragma once

// PIDs with finite quotients that fail the quasi-triangle inequality.

#include "dedekind/errors.hpp"
#include "dedekind/integer.hpp"

#include <string>
#include <utility>
#include <variant>

namespace dedekind {

/// a + b*sqrt(2)
struct Zsqrt2Element {
    Integer a, b;
    bool operator==(const Zsqrt2Element&) const = default;
};

/// Z[sqrt 2], with the norm |a^2 - 2b^2|.
class Zsqrt2 {
  public:
    using element = Zsqrt2Element;

    std::string name() const { return "Zsqrt2"; }

    Integer norm(const element& x) const { return boost::multiprecision::abs(x.a * x.a - 2 * x.b * x.b); }
    element add(const element& x, const element& y) const { return {x.a + y.a, x.b + y.b}; }
    element mul(const element& x, const element& y) const
    {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    element conjugate(const element& x) const { return {x.a, -x.b}; }

    /// The fundamental unit 1 + sqrt 2.
    element unit() const { return {1, 1}; }

    element pow(element x, unsigned e) const
    {
        element r{1, 0};
        while (e) {
            if (e & 1U)
                r = mul(r, x);
            x = mul(x, x);
            e >>= 1U;
        }
        return r;
    }

    std::string to_string(const element& x) const
    {
        std::string s = x.a.str();
        s += x.b < 0 ? "-" : "+";
        s += Integer(boost::multiprecision::abs(x.b)).str() + "*sqrt2";
        return s;
    }
};

/// num/den in lowest terms with den > 0.
struct ZlocElement {
    Integer num, den;
    bool operator==(const ZlocElement&) const = default;
};

/// The localization Z_(p): fractions whose denominator is prime to p.
/// Its ideal norm is N(x) = p^{v_p(x)}.
class ZLocalized {
  public:
    using element = ZlocElement;

    explicit ZLocalized(Integer p)
        : p_(std::move(p))
    {
        if (p_ < 3 || !is_probable_prime(p_))
            throw domain_rejection("Zloc requires an odd prime, got " + p_.str());
    }

    const Integer& prime() const { return p_; }
    std::string name() const { return "Zloc p=" + p_.str(); }

    element make(Integer num, Integer den) const
    {
        if (den == 0)
            throw domain_rejection("zero denominator");
        Integer g = boost::multiprecision::gcd(num, den);
        num /= g;
        den /= g;
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (den % p_ == 0)
            throw domain_rejection("denominator " + den.str() + " is divisible by " + p_.str() + "; not in " + name());
        return {num, den};
    }

    element from_integer(const Integer& n) const { return {n, 1}; }

    Integer norm(const element& x) const
    {
        if (x.num == 0)
            return 0;
        Integer n = boost::multiprecision::abs(x.num), r = 1;
        while (n % p_ == 0) {
            n /= p_;
            r *= p_;
        }
        return r;
    }

    element add(const element& x, const element& y) const { return make(x.num * y.den + y.num * x.den, x.den * y.den); }

    std::string to_string(const element& x) const
    {
        return x.den == 1 ? x.num.str() : x.num.str() + "/" + x.den.str();
    }

  private:
    Integer p_;
};

using NonExampleRing = std::variant<Zsqrt2, ZLocalized>;

inline Integer nonexample_norm(const Zsqrt2& ring, const Zsqrt2Element& x) { return ring.norm(x); }
inline Integer nonexample_norm(const ZLocalized& ring, const ZlocElement& x) { return ring.norm(x); }

} // namespace dedekind
