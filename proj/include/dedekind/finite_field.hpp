#pragma once

#include "dedekind/errors.hpp"
#include "dedekind/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dedekind {

/// The finite field with q = p^k elements.
///
/// Elements are encoded as integers 0..q-1: the code sum c_i p^i stands for
/// sum c_i g^i, where g is a root of the lexicographically least monic
/// irreducible polynomial of degree k over F_p. For k = 1 the code is the
/// residue itself. Multiplication in the non-prime case goes through
/// discrete log tables built at construction.
class FiniteField {
  public:
    using value_type = std::uint32_t;

    static constexpr std::uint32_t max_order = 1U << 16;

    explicit FiniteField(std::uint32_t q)
        : q_(q)
    {
        if (q < 2)
            throw domain_rejection("field order must be at least 2");
        if (q > max_order)
            throw resource_limit("field order exceeds 65536");
        p_ = 0;
        for (std::uint32_t d = 2; d <= q; ++d)
            if (q % d == 0) {
                p_ = d;
                break;
            }
        std::uint32_t rest = q;
        k_ = 0;
        while (rest % p_ == 0) {
            rest /= p_;
            ++k_;
        }
        if (rest != 1)
            throw domain_rejection("field order " + std::to_string(q) + " is not a prime power");
        if (k_ > 1)
            build_tables();
    }

    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    bool is_prime_field() const { return k_ == 1; }

    /// Coefficients (low to high, monic, length k+1) of the defining polynomial.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    value_type add(value_type a, value_type b) const
    {
        if (k_ == 1) {
            std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        value_type r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            std::uint32_t da = a % p_, db = b % p_;
            a /= p_;
            b /= p_;
            std::uint32_t s = da + db;
            if (s >= p_)
                s -= p_;
            r += s * scale;
            scale *= p_;
        }
        return r;
    }

    value_type neg(value_type a) const
    {
        if (k_ == 1)
            return a == 0 ? 0 : p_ - a;
        value_type r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            std::uint32_t d = a % p_;
            a /= p_;
            r += (d == 0 ? 0 : p_ - d) * scale;
            scale *= p_;
        }
        return r;
    }

    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }

    value_type mul(value_type a, value_type b) const
    {
        if (k_ == 1)
            return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1)
            e -= q_ - 1;
        return exp_[e];
    }

    value_type inv(value_type a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero in finite field");
        if (k_ == 1) {
            // extended Euclid on small integers
            std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
            while (r1 != 0) {
                std::int64_t qt = r0 / r1;
                std::int64_t t = r0 - qt * r1;
                r0 = r1;
                r1 = t;
                t = s0 - qt * s1;
                s0 = s1;
                s1 = t;
            }
            std::int64_t v = s0 % static_cast<std::int64_t>(p_);
            if (v < 0)
                v += p_;
            return static_cast<value_type>(v);
        }
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    value_type pow(value_type a, std::uint64_t e) const
    {
        value_type r = 1;
        while (e) {
            if (e & 1U)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }

    /// Image of an integer in the prime subfield.
    value_type from_integer(const Integer& n) const
    {
        Integer r = n % p_;
        if (r < 0)
            r += p_;
        return static_cast<value_type>(r);
    }

    /// The adjoined root g (code p); only meaningful when degree() > 1.
    value_type generator() const { return k_ > 1 ? p_ : 1; }

    /// Digits of a code as a polynomial in g over F_p (low to high).
    std::vector<std::uint32_t> digits(value_type a) const
    {
        std::vector<std::uint32_t> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    bool operator==(const FiniteField& o) const { return q_ == o.q_; }

  private:
    std::uint32_t q_{}, p_{};
    unsigned k_{};
    std::vector<std::uint32_t> modulus_;
    std::vector<value_type> exp_, log_;

    // product of two codes as polynomials in g, reduced by modulus_
    value_type slow_mul(value_type a, value_type b) const
    {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint64_t> prod(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j)
                prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
        for (unsigned top = 2 * k_ - 1; top >= k_; --top) {
            std::uint64_t c = prod[top];
            if (c == 0)
                continue;
            for (unsigned i = 0; i <= k_; ++i)
                prod[top - k_ + i] = (prod[top - k_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        value_type r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += static_cast<value_type>(prod[i]) * scale;
            scale *= p_;
        }
        return r;
    }

    static bool divides_mod_p(const std::vector<std::uint32_t>& d, std::vector<std::uint32_t> f, std::uint32_t p)
    {
        // d monic
        std::size_t dd = d.size() - 1;
        for (std::size_t top = f.size(); top-- > dd;) {
            std::uint64_t c = f[top];
            if (c == 0)
                continue;
            for (std::size_t i = 0; i <= dd; ++i)
                f[top - dd + i] = static_cast<std::uint32_t>((f[top - dd + i] + (p - c) * d[i]) % p);
        }
        for (std::size_t i = 0; i < dd; ++i)
            if (f[i] != 0)
                return false;
        return true;
    }

    void build_tables()
    {
        // least monic irreducible of degree k_, ordered by the code of its lower coefficients
        std::uint32_t lower_count = q_;
        for (std::uint32_t code = 0; code < lower_count; ++code) {
            std::vector<std::uint32_t> f(k_ + 1);
            std::uint32_t c = code;
            for (unsigned i = 0; i < k_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[k_] = 1;
            bool irreducible = f[0] != 0;
            for (unsigned deg = 1; irreducible && deg <= k_ / 2; ++deg) {
                std::uint32_t count = 1;
                for (unsigned i = 0; i < deg; ++i)
                    count *= p_;
                for (std::uint32_t dc = 0; dc < count; ++dc) {
                    std::vector<std::uint32_t> d(deg + 1);
                    std::uint32_t x = dc;
                    for (unsigned i = 0; i < deg; ++i) {
                        d[i] = x % p_;
                        x /= p_;
                    }
                    d[deg] = 1;
                    if (divides_mod_p(d, f, p_)) {
                        irreducible = false;
                        break;
                    }
                }
            }
            if (irreducible) {
                modulus_ = f;
                break;
            }
        }
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        for (value_type g = 2; g < q_; ++g) {
            value_type x = 1;
            std::uint32_t ord = 0;
            do {
                x = slow_mul(x, g);
                ++ord;
            } while (x != 1 && ord < q_);
            if (ord != q_ - 1)
                continue;
            x = 1;
            for (std::uint32_t e = 0; e < q_ - 1; ++e) {
                exp_[e] = x;
                log_[x] = e;
                x = slow_mul(x, g);
            }
            return;
        }
        throw std::logic_error("no primitive element found");
    }
};

} // namespace dedekind
