#pragma once

#include "dedekind/errors.hpp"
#include "dedekind/finite_field.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/integer_ring.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dedekind {

/// Coefficients over F_q, lowest degree first, no trailing zeros.
/// The zero polynomial is the empty sequence.
using Poly = std::vector<std::uint32_t>;

/// The basic PID F_q[t] with N(f) = q^deg f, c = C0 = 1.
class PolyRing {
  public:
    using element = Poly;

    static constexpr RingKind kind = RingKind::polynomials;

    explicit PolyRing(std::uint32_t q)
        : field_(std::make_shared<const FiniteField>(q))
    {
    }

    const FiniteField& field() const { return *field_; }
    std::uint32_t q() const { return field_->order(); }

    std::string name() const { return "Fq[t] q=" + std::to_string(q()); }
    bool operator==(const PolyRing& o) const { return q() == o.q(); }

    element zero() const { return {}; }
    element one() const { return {1}; }
    element variable() const { return {0, 1}; }
    element constant(std::uint32_t c) const { return c == 0 ? element{} : element{c}; }
    element from_integer(const Integer& n) const { return constant(field_->from_integer(n)); }

    static int degree(const element& a) { return static_cast<int>(a.size()) - 1; }
    static std::uint32_t leading(const element& a) { return a.empty() ? 0 : a.back(); }

    bool is_zero(const element& a) const { return a.empty(); }

    element add(const element& a, const element& b) const
    {
        const element& lo = a.size() < b.size() ? a : b;
        const element& hi = a.size() < b.size() ? b : a;
        element r = hi;
        for (std::size_t i = 0; i < lo.size(); ++i)
            r[i] = field_->add(r[i], lo[i]);
        trim(r);
        return r;
    }

    element neg(const element& a) const
    {
        element r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = field_->neg(a[i]);
        return r;
    }

    element sub(const element& a, const element& b) const
    {
        element r = a;
        if (r.size() < b.size())
            r.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] = field_->sub(r[i], b[i]);
        trim(r);
        return r;
    }

    element scale(const element& a, std::uint32_t c) const
    {
        if (c == 0)
            return {};
        element r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = field_->mul(a[i], c);
        return r;
    }

    element mul(const element& a, const element& b) const
    {
        if (a.empty() || b.empty())
            return {};
        if (field_->is_prime_field()) {
            const std::uint64_t p = field_->characteristic();
            std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0)
                    continue;
                for (std::size_t j = 0; j < b.size(); ++j) {
                    acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
                    if (acc[i + j] >= (1ULL << 62))
                        acc[i + j] %= p;
                }
            }
            element r(acc.size());
            for (std::size_t i = 0; i < acc.size(); ++i)
                r[i] = static_cast<std::uint32_t>(acc[i] % p);
            trim(r);
            return r;
        }
        element r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = field_->add(r[i + j], field_->mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }

    /// Euclidean division; the remainder has degree < deg b and is unique.
    std::pair<element, element> divmod(const element& a, const element& b) const
    {
        if (b.empty())
            throw std::domain_error("division by zero polynomial");
        if (a.size() < b.size())
            return {{}, a};
        element r = a;
        element q(a.size() - b.size() + 1, 0);
        const std::uint32_t inv_lead = field_->inv(b.back());
        const std::size_t db = b.size() - 1;
        for (std::size_t top = r.size(); top-- > db;) {
            std::uint32_t c = r[top];
            if (c == 0)
                continue;
            c = field_->mul(c, inv_lead);
            q[top - db] = c;
            for (std::size_t i = 0; i <= db; ++i)
                r[top - db + i] = field_->sub(r[top - db + i], field_->mul(c, b[i]));
        }
        r.resize(db);
        trim(r);
        trim(q);
        return {std::move(q), std::move(r)};
    }

    element rem(const element& a, const element& b) const { return divmod(a, b).second; }

    element divexact(const element& a, const element& b) const
    {
        auto [q, r] = divmod(a, b);
        if (!r.empty())
            throw std::logic_error("inexact polynomial division");
        return q;
    }

    bool divides(const element& d, const element& a) const
    {
        if (d.empty())
            return a.empty();
        return rem(a, d).empty();
    }

    /// q^deg a, and 0 for the zero polynomial.
    Integer norm(const element& a) const
    {
        if (a.empty())
            return 0;
        return ipow(Integer(q()), a.size() - 1);
    }

    bool is_unit(const element& a) const { return a.size() == 1; }
    element unit_part(const element& a) const { return a.empty() ? one() : element{a.back()}; }
    element unit_inverse(const element& u) const { return {field_->inv(u.at(0))}; }

    element canonical(const element& a) const
    {
        if (a.empty() || a.back() == 1)
            return a;
        return scale(a, field_->inv(a.back()));
    }

    std::vector<element> units() const
    {
        std::vector<element> out;
        for (std::uint32_t c = 1; c < q(); ++c)
            out.push_back({c});
        return out;
    }

    XGcd<element> xgcd(const element& a, const element& b) const
    {
        element r0 = a, r1 = b, s0 = one(), s1 = {}, t0 = {}, t1 = one();
        while (!r1.empty()) {
            auto [qt, rr] = divmod(r0, r1);
            element tmp = sub(s0, mul(qt, s1));
            s0 = std::move(s1);
            s1 = std::move(tmp);
            tmp = sub(t0, mul(qt, t1));
            t0 = std::move(t1);
            t1 = std::move(tmp);
            r0 = std::move(r1);
            r1 = std::move(rr);
        }
        if (!r0.empty() && r0.back() != 1) {
            std::uint32_t inv = field_->inv(r0.back());
            r0 = scale(r0, inv);
            s0 = scale(s0, inv);
            t0 = scale(t0, inv);
        }
        return {r0, s0, t0};
    }

    element gcd(element a, element b) const
    {
        while (!b.empty()) {
            element r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return canonical(a);
    }

    /// Graded order, then lexicographic from the leading coefficient down.
    /// Equivalently: order by the q-adic code of the coefficient sequence.
    int compare(const element& a, const element& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    /// The polynomial whose coefficients are the base-q digits of code.
    element from_code(std::uint64_t code) const
    {
        element r;
        while (code) {
            r.push_back(static_cast<std::uint32_t>(code % q()));
            code /= q();
        }
        return r;
    }

    /// Largest d with q^d <= bound (bound >= 1).
    int max_degree_for_norm(const Integer& bound) const
    {
        int d = -1;
        Integer v = 1;
        while (v <= bound) {
            ++d;
            v *= q();
        }
        return d;
    }

    /// {f : q^deg f <= bound} (plus 0), graded then lexicographic.
    std::vector<element> enumerate_small(const Integer& bound) const
    {
        if (bound < 1)
            return {zero()};
        int d = max_degree_for_norm(bound);
        Integer count = ipow(Integer(q()), static_cast<unsigned long>(d + 1));
        if (count > Integer(enumeration_cap))
            throw resource_limit("enumerate_small: bound too large");
        auto n = count.convert_to<std::uint64_t>();
        std::vector<element> out;
        out.reserve(n);
        for (std::uint64_t c = 0; c < n; ++c)
            out.push_back(from_code(c));
        return out;
    }

    /// All polynomials of degree < deg m.
    std::vector<element> residues(const element& m) const
    {
        if (m.empty())
            throw std::domain_error("residues modulo zero");
        Integer count = norm(m);
        if (count > Integer(enumeration_cap))
            throw resource_limit("residue enumeration too large");
        auto n = count.convert_to<std::uint64_t>();
        std::vector<element> out;
        out.reserve(n);
        for (std::uint64_t c = 0; c < n; ++c)
            out.push_back(from_code(c));
        return out;
    }

    element powmod(element base, Integer e, const element& m) const
    {
        element r = rem(one(), m);
        base = rem(base, m);
        while (e > 0) {
            if ((e & 1) != 0)
                r = rem(mul(r, base), m);
            e >>= 1;
            if (e > 0)
                base = rem(mul(base, base), m);
        }
        return r;
    }

    element derivative(const element& a) const
    {
        if (a.size() <= 1)
            return {};
        element r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i)
            r[i - 1] = field_->mul(a[i], field_->from_integer(Integer(i)));
        trim(r);
        return r;
    }

    std::uint32_t eval(const element& a, std::uint32_t x) const
    {
        std::uint32_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;)
            v = field_->add(field_->mul(v, x), a[i]);
        return v;
    }

    /// Rabin's test for monic f.
    bool is_irreducible(const element& f) const
    {
        int d = degree(f);
        if (d <= 0)
            return false;
        if (d == 1)
            return true;
        const element x = variable();
        // x^{q^i} mod f for i = 1..d
        std::vector<element> frob(static_cast<std::size_t>(d) + 1);
        frob[0] = rem(x, f);
        for (int i = 1; i <= d; ++i)
            frob[i] = powmod(frob[i - 1], Integer(q()), f);
        if (sub(frob[d], rem(x, f)) != element{})
            return false;
        for (int r = 2; r <= d; ++r) {
            if (d % r != 0)
                continue;
            bool prime = true;
            for (int s = 2; s * s <= r; ++s)
                if (r % s == 0)
                    prime = false;
            if (!prime)
                continue;
            element g = gcd(sub(frob[d / r], x), f);
            if (g.size() != 1)
                return false;
        }
        return true;
    }

    /// Monic irreducibles with q^deg <= bound, graded then lexicographic.
    std::vector<element> primes_up_to(const Integer& bound) const
    {
        std::vector<element> out;
        int dmax = bound < 1 ? -1 : max_degree_for_norm(bound);
        for (int d = 1; d <= dmax; ++d) {
            Integer count = ipow(Integer(q()), static_cast<unsigned long>(d));
            if (count > Integer(enumeration_cap))
                throw resource_limit("prime enumeration too large");
            auto n = count.convert_to<std::uint64_t>();
            for (std::uint64_t low = 0; low < n; ++low) {
                element f = from_code(low);
                f.resize(static_cast<std::size_t>(d) + 1, 0);
                f[d] = 1;
                if (is_irreducible(f))
                    out.push_back(std::move(f));
            }
        }
        return out;
    }

    /// Uniform polynomial with q^deg <= bound.
    element sample(std::mt19937_64& rng, const Integer& bound) const
    {
        if (bound < 1)
            return {};
        int d = max_degree_for_norm(bound);
        Integer code = random_below(rng, ipow(Integer(q()), static_cast<unsigned long>(d + 1)));
        element r;
        while (code > 0) {
            r.push_back(static_cast<std::uint32_t>(code % q()));
            code /= q();
        }
        return r;
    }

    Integer characteristic() const { return field_->characteristic(); }
    Integer small_norm_constant() const { return 1; }
    Integer quasi_triangle_constant() const { return 1; }

    std::string coefficient_string(std::uint32_t c) const
    {
        if (field_->is_prime_field())
            return std::to_string(c);
        auto d = field_->digits(c);
        std::string s;
        int terms = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] == 0)
                continue;
            if (terms++)
                s += "+";
            if (i == 0) {
                s += std::to_string(d[i]);
                continue;
            }
            if (d[i] != 1)
                s += std::to_string(d[i]) + "*";
            s += i == 1 ? "g" : "g^" + std::to_string(i);
        }
        return terms > 1 ? "(" + s + ")" : s;
    }

    std::string to_string(const element& a) const
    {
        if (a.empty())
            return "0";
        std::string s;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] == 0)
                continue;
            if (!s.empty())
                s += "+";
            std::string coeff = coefficient_string(a[i]);
            if (i == 0)
                s += coeff;
            else {
                if (a[i] != 1)
                    s += coeff + "*";
                s += i == 1 ? "t" : "t^" + std::to_string(i);
            }
        }
        return s;
    }

    std::size_t hash(const element& a) const
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto c : a) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return h;
    }

  private:
    std::shared_ptr<const FiniteField> field_;

    static void trim(element& a)
    {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
};

} // namespace dedekind
