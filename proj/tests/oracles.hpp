#pragma once

// Brute-force reference computations. None of these call into the
// library's linear algebra, ideal or class-group code.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;

/// Field discriminant of Q(sqrt d), d squarefree.
inline long quadratic_discriminant(long d)
{
    long m = ((d % 4) + 4) % 4;
    return m == 1 ? d : 4 * d;
}

/// Reduced primitive positive definite forms (a, b, c) of discriminant D < 0:
/// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
inline long reduced_form_count(long D)
{
    long count = 0;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a)
                continue;
            if (a == c && b < 0)
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            ++count;
        }
    return count;
}

/// Projective points on y^2 = f(t) over F_p, p odd prime, f of odd degree
/// (one point at infinity). f is given low to high.
inline long curve_point_count(long p, const std::vector<long>& f)
{
    long affine = 0;
    for (long t = 0; t < p; ++t) {
        long v = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it)
            v = ((v * t + *it) % p + p) % p;
        for (long y = 0; y < p; ++y)
            if ((y * y) % p == v)
                ++affine;
    }
    return affine + 1;
}

/// Dense polynomials over F_p, low to high, trimmed.
struct PolyP {
    long p;
    using P = std::vector<long>;

    void trim(P& a) const
    {
        while (!a.empty() && a.back() % p == 0)
            a.pop_back();
    }
    P norm(P a) const
    {
        for (auto& c : a)
            c = ((c % p) + p) % p;
        trim(a);
        return a;
    }
    P add(const P& a, const P& b) const
    {
        P r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] += b[i];
        return norm(r);
    }
    P neg(const P& a) const
    {
        P r = a;
        for (auto& c : r)
            c = -c;
        return norm(r);
    }
    P sub(const P& a, const P& b) const { return add(a, neg(b)); }
    P mul(const P& a, const P& b) const
    {
        if (a.empty() || b.empty())
            return {};
        P r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return norm(r);
    }
    long inv(long a) const
    {
        a = ((a % p) + p) % p;
        for (long x = 1; x < p; ++x)
            if (a * x % p == 1)
                return x;
        std::abort();
    }
    /// Remainder of a modulo b (b nonzero).
    P rem(P a, const P& b) const
    {
        a = norm(a);
        const long lead = inv(b.back());
        while (a.size() >= b.size()) {
            long f = a.back() * lead % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
            trim(a);
        }
        return a;
    }
    int degree(const P& a) const { return static_cast<int>(a.size()) - 1; }
};

/// Determinant by cofactor expansion over a commutative ring given by
/// add/sub/mul callables.
template <class E, class Ops>
E cofactor_det(const std::vector<std::vector<E>>& m, const Ops& ops, const E& zero, const E& one)
{
    const std::size_t n = m.size();
    if (n == 0)
        return one;
    if (n == 1)
        return m[0][0];
    E total = zero;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<E>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<E> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        E term = ops.mul(m[0][c], cofactor_det(minor, ops, zero, one));
        total = (c % 2 == 0) ? ops.add(total, term) : ops.sub(total, term);
    }
    return total;
}

/// Adjugate: adj(m)[j][i] = (-1)^{i+j} det(minor_{i,j}).
template <class E, class Ops>
std::vector<std::vector<E>> adjugate(const std::vector<std::vector<E>>& m, const Ops& ops, const E& zero, const E& one)
{
    const std::size_t n = m.size();
    std::vector<std::vector<E>> adj(n, std::vector<E>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<E>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i)
                    continue;
                std::vector<E> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j)
                        row.push_back(m[r][k]);
                minor.push_back(row);
            }
            E d = cofactor_det(minor, ops, zero, one);
            adj[j][i] = ((i + j) % 2 == 0) ? d : ops.sub(zero, d);
        }
    return adj;
}

struct IntOps {
    cpp_int add(const cpp_int& a, const cpp_int& b) const { return a + b; }
    cpp_int sub(const cpp_int& a, const cpp_int& b) const { return a - b; }
    cpp_int mul(const cpp_int& a, const cpp_int& b) const { return a * b; }
};

/// |Z^n / rows(T)| by breadth-first search over cosets, testing
/// v - w in rows(T) through v adj(T) = 0 mod det(T).
inline long coset_count_integer(const std::vector<std::vector<cpp_int>>& t, long cap = 100000)
{
    IntOps ops;
    const std::size_t n = t.size();
    cpp_int d = cofactor_det(t, ops, cpp_int(0), cpp_int(1));
    if (d == 0)
        return -1;
    auto adj = adjugate(t, ops, cpp_int(0), cpp_int(1));
    auto same = [&](const std::vector<cpp_int>& v, const std::vector<cpp_int>& w) {
        for (std::size_t k = 0; k < n; ++k) {
            cpp_int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += (v[i] - w[i]) * adj[i][k];
            if (s % d != 0)
                return false;
        }
        return true;
    };
    std::vector<std::vector<cpp_int>> reps{std::vector<cpp_int>(n, 0)};
    for (std::size_t head = 0; head < reps.size(); ++head)
        for (std::size_t i = 0; i < n; ++i) {
            auto u = reps[head];
            u[i] += 1;
            bool fresh = true;
            for (const auto& r : reps)
                if (same(u, r)) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                reps.push_back(u);
                if (static_cast<long>(reps.size()) > cap)
                    return -1;
            }
        }
    return static_cast<long>(reps.size());
}

struct PolyOps {
    const PolyP* f;
    PolyP::P add(const PolyP::P& a, const PolyP::P& b) const { return f->add(a, b); }
    PolyP::P sub(const PolyP::P& a, const PolyP::P& b) const { return f->sub(a, b); }
    PolyP::P mul(const PolyP::P& a, const PolyP::P& b) const { return f->mul(a, b); }
};

/// |F_p[t]^n / rows(T)| by breadth-first search: B/TB is spanned over F_p
/// by t^j e_i with j <= deg det(T).
inline long coset_count_poly(long p, const std::vector<std::vector<PolyP::P>>& t, long cap = 100000)
{
    PolyP f{p};
    PolyOps ops{&f};
    const std::size_t n = t.size();
    auto d = cofactor_det(t, ops, PolyP::P{}, PolyP::P{1});
    if (d.empty())
        return -1;
    auto adj = adjugate(t, ops, PolyP::P{}, PolyP::P{1});
    auto same = [&](const std::vector<PolyP::P>& v, const std::vector<PolyP::P>& w) {
        for (std::size_t k = 0; k < n; ++k) {
            PolyP::P s;
            for (std::size_t i = 0; i < n; ++i)
                s = f.add(s, f.mul(f.sub(v[i], w[i]), adj[i][k]));
            if (!f.rem(s, d).empty())
                return false;
        }
        return true;
    };
    std::vector<std::vector<PolyP::P>> reps{std::vector<PolyP::P>(n)};
    const int top = f.degree(d);
    for (std::size_t head = 0; head < reps.size(); ++head)
        for (std::size_t i = 0; i < n; ++i)
            for (int j = 0; j <= top; ++j) {
                auto u = reps[head];
                PolyP::P mono(static_cast<std::size_t>(j) + 1, 0);
                mono[j] = 1;
                u[i] = f.add(u[i], mono);
                bool fresh = true;
                for (const auto& r : reps)
                    if (same(u, r)) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    reps.push_back(u);
                    if (static_cast<long>(reps.size()) > cap)
                        return -1;
                }
            }
    return static_cast<long>(reps.size());
}

/// Least positive value of a x^2 + b x y + c y^2 over a box, for a
/// positive definite form.
inline long min_form_value(long a, long b, long c, long box = 30)
{
    long best = -1;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y) {
            if (x == 0 && y == 0)
                continue;
            long v = a * x * x + b * x * y + c * y * y;
            if (v > 0 && (best < 0 || v < best))
                best = v;
        }
    return best;
}

} // namespace oracle
