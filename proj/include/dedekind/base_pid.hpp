#pragma once

#include "dedekind/errors.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/integer_ring.hpp"
#include "dedekind/poly_ring.hpp"

#include <cctype>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace dedekind {

/// A basic PID with exact Euclidean arithmetic and an ideal norm.
template <class R>
concept BasicPid = requires(const R& ring, const typename R::element& a, std::mt19937_64& rng) {
    typename R::element;
    { R::kind } -> std::convertible_to<RingKind>;
    { ring.zero() } -> std::same_as<typename R::element>;
    { ring.one() } -> std::same_as<typename R::element>;
    { ring.add(a, a) } -> std::same_as<typename R::element>;
    { ring.sub(a, a) } -> std::same_as<typename R::element>;
    { ring.mul(a, a) } -> std::same_as<typename R::element>;
    { ring.neg(a) } -> std::same_as<typename R::element>;
    { ring.divmod(a, a) } -> std::same_as<std::pair<typename R::element, typename R::element>>;
    { ring.divexact(a, a) } -> std::same_as<typename R::element>;
    { ring.norm(a) } -> std::same_as<Integer>;
    { ring.canonical(a) } -> std::same_as<typename R::element>;
    { ring.unit_part(a) } -> std::same_as<typename R::element>;
    { ring.xgcd(a, a) } -> std::same_as<XGcd<typename R::element>>;
    { ring.compare(a, a) } -> std::same_as<int>;
    { ring.is_zero(a) } -> std::same_as<bool>;
    { ring.enumerate_small(Integer{}) } -> std::same_as<std::vector<typename R::element>>;
    { ring.sample(rng, Integer{}) } -> std::same_as<typename R::element>;
    { ring.to_string(a) } -> std::same_as<std::string>;
    { ring.name() } -> std::same_as<std::string>;
};

/// Reduced fraction num/den with den canonical (positive / monic).
template <class R>
struct Fraction {
    typename R::element num, den;

    bool operator==(const Fraction&) const = default;
};

/// Field of fractions of a basic PID.
template <BasicPid R>
class FractionField {
  public:
    using element = Fraction<R>;
    using base_element = typename R::element;

    explicit FractionField(R ring)
        : ring_(std::move(ring))
    {
    }

    const R& ring() const { return ring_; }

    element make(base_element num, base_element den) const
    {
        if (ring_.is_zero(den))
            throw domain_rejection("zero denominator");
        if (ring_.is_zero(num))
            return {ring_.zero(), ring_.one()};
        base_element g = ring_.canonical(ring_.xgcd(num, den).g);
        num = ring_.divexact(num, g);
        den = ring_.divexact(den, g);
        base_element u = ring_.unit_inverse(ring_.unit_part(den));
        return {ring_.mul(num, u), ring_.mul(den, u)};
    }

    element from_base(const base_element& a) const { return {a, ring_.one()}; }
    element zero() const { return {ring_.zero(), ring_.one()}; }
    element one() const { return {ring_.one(), ring_.one()}; }
    bool is_zero(const element& x) const { return ring_.is_zero(x.num); }

    element add(const element& x, const element& y) const
    {
        return make(ring_.add(ring_.mul(x.num, y.den), ring_.mul(y.num, x.den)), ring_.mul(x.den, y.den));
    }
    element sub(const element& x, const element& y) const
    {
        return make(ring_.sub(ring_.mul(x.num, y.den), ring_.mul(y.num, x.den)), ring_.mul(x.den, y.den));
    }
    element neg(const element& x) const { return {ring_.neg(x.num), x.den}; }
    element mul(const element& x, const element& y) const
    {
        return make(ring_.mul(x.num, y.num), ring_.mul(x.den, y.den));
    }
    element inv(const element& x) const
    {
        if (is_zero(x))
            throw domain_rejection("inverse of zero");
        return make(x.den, x.num);
    }
    element div(const element& x, const element& y) const { return mul(x, inv(y)); }

    element pow(element x, long e) const
    {
        if (e < 0) {
            x = inv(x);
            e = -e;
        }
        element r = one();
        while (e) {
            if (e & 1)
                r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const element& x) const
    {
        if (ring_.is_unit(x.den) && x.den == ring_.one())
            return ring_.to_string(x.num);
        auto wrap = [&](const base_element& a) {
            std::string s = ring_.to_string(a);
            bool simple = s.find_first_of("+-*") == std::string::npos || (s[0] == '-' && s.find_first_of("+*", 1) == std::string::npos && s.find('-', 1) == std::string::npos);
            return simple ? s : "(" + s + ")";
        };
        return wrap(x.num) + "/" + wrap(x.den);
    }

  private:
    R ring_;
};

namespace detail {

template <BasicPid R>
class ExpressionParser {
  public:
    ExpressionParser(const R& ring, std::string_view text)
        : field_(ring), text_(text)
    {
    }

    Fraction<R> parse()
    {
        auto v = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return v;
    }

  private:
    FractionField<R> field_;
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary()
    {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Fraction<R> expr()
    {
        auto v = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = field_.add(v, term());
            } else if (c == '-') {
                ++pos_;
                v = field_.sub(v, term());
            } else
                return v;
        }
    }

    Fraction<R> term()
    {
        auto v = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = field_.mul(v, unary());
            } else if (c == '/') {
                ++pos_;
                auto d = unary();
                if (field_.is_zero(d))
                    throw domain_rejection("division by zero in \"" + std::string(text_) + "\"");
                v = field_.div(v, d);
            } else if (starts_primary()) {
                v = field_.mul(v, power());
            } else
                return v;
        }
    }

    Fraction<R> unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return field_.neg(unary());
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Fraction<R> power()
    {
        auto base = primary();
        if (peek() == '^') {
            ++pos_;
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            Integer e = digits();
            if (e > 100000)
                fail("exponent too large");
            long ev = e.convert_to<long>();
            if (negative && field_.is_zero(base))
                throw domain_rejection("zero to a negative power");
            base = field_.pow(base, negative ? -ev : ev);
        }
        return base;
    }

    Integer digits()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Fraction<R> primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto v = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return field_.from_base(field_.ring().from_integer(digits()));
        if constexpr (R::kind == RingKind::polynomials) {
            if (c == 't' || c == 'x') {
                ++pos_;
                return field_.from_base(field_.ring().variable());
            }
            if (c == 'g' && !field_.ring().field().is_prime_field()) {
                ++pos_;
                return field_.from_base(field_.ring().constant(field_.ring().field().generator()));
            }
        }
        fail("unexpected token");
    }
};

} // namespace detail

/// Parses an arithmetic expression (+ - * / ^, parentheses, variable t)
/// into the fraction field of the ring.
template <BasicPid R>
Fraction<R> parse_fraction(const R& ring, std::string_view text)
{
    return detail::ExpressionParser<R>(ring, text).parse();
}

/// Parses an expression that must denote an element of the ring itself.
template <BasicPid R>
typename R::element parse_element(const R& ring, std::string_view text)
{
    auto f = parse_fraction(ring, text);
    if (!ring.is_unit(f.den))
        throw parse_error("\"" + std::string(text) + "\" is not a ring element");
    return ring.mul(f.num, ring.unit_inverse(f.den));
}

using AnyRing = std::variant<IntegerRing, PolyRing>;

namespace detail {

inline std::string trim_copy(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

/// "9", "3^2"
inline std::uint32_t parse_prime_power(std::string_view text)
{
    std::string s = trim_copy(text);
    auto caret = s.find('^');
    Integer v;
    try {
        if (caret == std::string::npos)
            v = parse_integer(s);
        else
            v = ipow(parse_integer(s.substr(0, caret)), parse_integer(s.substr(caret + 1)).convert_to<unsigned long>());
    } catch (const std::invalid_argument&) {
        throw parse_error("bad field order \"" + s + "\"");
    }
    if (v < 2 || v > FiniteField::max_order)
        throw domain_rejection("field order " + v.str() + " outside supported range 2..65536");
    return v.convert_to<std::uint32_t>();
}

} // namespace detail

/// Parses "Z" or "Fq[t] q=<p^k>" (also accepts "F3[t]").
inline AnyRing parse_ring(std::string_view text)
{
    std::string s = detail::trim_copy(text);
    if (s == "Z" || s == "ZZ")
        return IntegerRing{};
    if (s.rfind("Fq[t]", 0) == 0) {
        auto eq = s.find("q=");
        if (eq == std::string::npos)
            throw parse_error("ring \"" + s + "\" lacks q=<p^k>");
        return PolyRing(detail::parse_prime_power(s.substr(eq + 2)));
    }
    if (s.size() > 4 && s[0] == 'F' && s.substr(s.size() - 3) == "[t]")
        return PolyRing(detail::parse_prime_power(s.substr(1, s.size() - 4)));
    throw parse_error("unknown ring \"" + s + "\" (expected Z or Fq[t] q=<p^k>)");
}

inline std::string ring_name(const AnyRing& r)
{
    return std::visit([](const auto& ring) { return ring.name(); }, r);
}

} // namespace dedekind
