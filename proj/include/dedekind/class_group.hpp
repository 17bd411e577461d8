#pragma once

#include "dedekind/errors.hpp"
#include "dedekind/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace dedekind {

struct EffectiveBound {
    Integer c;
    Integer C0;
    Integer C1;
    std::size_t n = 0;
    Integer C;
};

/// C = C1 * (C0 * 4 * c)^n.
template <BasicPid R>
EffectiveBound effective_bound(const Order<R>& order)
{
    EffectiveBound b;
    b.c = order.ring().small_norm_constant();
    b.C0 = order.ring().quasi_triangle_constant();
    b.C1 = norm_form_bound(order);
    b.n = order.rank();
    b.C = b.C1 * ipow(b.C0 * 4 * b.c, static_cast<unsigned>(b.n));
    return b;
}

template <BasicPid R>
struct SmallElementResult {
    typename Order<R>::element element;
    Integer norm;
    Integer m;
    Integer bound;
    std::size_t candidates = 0;
};

/// Finds two sums from S_m x_1 + ... + S_m x_n in the same coset of I,
/// where S_m holds m+1 elements of norm <= 2cm and m^n <= N(I) < (m+1)^n.
/// Their difference is a nonzero element of I.
template <BasicPid R>
SmallElementResult<R> small_element(const Ideal<R>& ideal, const EffectiveBound& bound)
{
    const Order<R>& order = ideal.order();
    const R& ring = order.ring();
    const std::size_t n = order.rank();
    const Integer norm = ideal_norm(ideal);
    if (norm > Integer(enumeration_cap))
        throw resource_limit("small_element: ideal norm exceeds the search cap");
    Integer m = iroot(norm, static_cast<unsigned>(n));
    auto pool = ring.enumerate_small(2 * bound.c * m);
    if (Integer(pool.size()) < m + 1)
        throw certification_error("small_element: fewer than m+1 elements of norm <= 2cm");
    pool.resize(static_cast<std::size_t>(m + 1));

    std::map<std::vector<typename R::element>, std::vector<typename R::element>> seen;
    std::vector<std::size_t> idx(n, 0);
    SmallElementResult<R> out;
    out.m = m;
    out.bound = bound.C * norm;
    for (;;) {
        typename Order<R>::element s(n);
        for (std::size_t i = 0; i < n; ++i)
            s[i] = pool[idx[i]];
        ++out.candidates;
        auto key = reduce_mod_lattice(ring, ideal.basis(), s);
        auto [it, fresh] = seen.emplace(std::move(key), s);
        if (!fresh) {
            out.element = order.sub(s, it->second);
            break;
        }
        std::size_t i = 0;
        while (i < n && ++idx[i] == pool.size())
            idx[i++] = 0;
        if (i == n)
            throw certification_error("small_element: no collision among (m+1)^n sums");
    }
    out.norm = order.element_norm(out.element);
    if (order.is_zero(out.element) || !member(ideal, out.element))
        throw certification_error("small_element: difference is not a nonzero member");
    if (out.norm > out.bound)
        throw certification_error("small_element: norm exceeds C * N(I)");
    return out;
}

template <BasicPid R>
SmallElementResult<R> small_element(const Ideal<R>& ideal)
{
    return small_element(ideal, effective_bound(ideal.order()));
}

namespace detail {

/// x2^2 = r + s*x2 for a rank-2 order with x1 = 1.
template <BasicPid R>
std::pair<typename R::element, typename R::element> rank2_relation(const Order<R>& order)
{
    return {order.constant(1, 1, 0), order.constant(1, 1, 1)};
}

template <BasicPid R>
bool is_definite(const Order<R>& order)
{
    const R& ring = order.ring();
    if (order.rank() == 1)
        return true;
    if (order.rank() != 2)
        return false;
    auto [r, s] = rank2_relation(order);
    auto disc = ring.add(ring.mul(s, s), ring.mul(ring.from_integer(4), r));
    if constexpr (R::kind == RingKind::integers)
        return disc < 0;
    else
        return ring.characteristic() != 2 && R::degree(disc) % 2 == 1;
}

template <BasicPid R>
std::optional<typename Order<R>::element> definite_rank2_generator(const Ideal<R>& ideal)
{
    using E = typename Order<R>::element;
    const Order<R>& order = ideal.order();
    const R& ring = order.ring();
    E g1 = ideal.generator(0), g2 = ideal.generator(1);
    const auto target = ideal.numerator_det();

    auto form = [&](const E& a, const E& b) {
        auto A = order.field_norm(a);
        auto C = order.field_norm(b);
        auto B = ring.sub(ring.sub(order.field_norm(order.add(a, b)), A), C);
        return std::array<typename R::element, 3>{A, B, C};
    };
    auto smaller = [&](const typename R::element& x, const typename R::element& y) { return ring.norm(x) < ring.norm(y); };

    // Reduce the binary form N(x g1 + y g2).
    std::array<typename R::element, 3> q;
    for (;;) {
        q = form(g1, g2);
        if (smaller(q[2], q[0])) {
            std::swap(g1, g2);
            continue;
        }
        typename R::element k;
        auto twoA = ring.mul(ring.from_integer(2), q[0]);
        if constexpr (R::kind == RingKind::integers)
            k = ring.divmod(ring.add(q[1], q[0]), twoA).first;
        else
            k = ring.divmod(q[1], twoA).first;
        if (ring.is_zero(k))
            break;
        g2 = order.sub(g2, order.scale(g1, k));
    }
    const auto& [A, B, C] = q;
    auto candidate = [&](const typename R::element& x, const typename R::element& y) -> std::optional<E> {
        E alpha = order.add(order.scale(g1, x), order.scale(g2, y));
        if (order.is_zero(alpha) || ring.norm(order.field_norm(alpha)) != ring.norm(target))
            return std::nullopt;
        return alpha;
    };

    if constexpr (R::kind == RingKind::integers) {
        // 4A N = (2Ax + By)^2 + |disc| y^2.
        const Integer N = ring.norm(target);
        const Integer delta = 4 * A * C - B * B;
        if (A <= 0 || delta <= 0)
            throw certification_error("reduced form is not positive definite");
        const Integer ymax = isqrt(4 * A * N / delta);
        for (Integer ya = 0; ya <= ymax; ++ya)
            for (int sy : {1, -1}) {
                if (ya == 0 && sy < 0)
                    continue;
                Integer y = sy * ya;
                Integer rhs = 4 * A * N - delta * y * y;
                Integer root;
                if (rhs < 0 || !is_square(rhs, &root))
                    continue;
                for (int sr : {1, -1}) {
                    Integer num = sr * root - B * y;
                    if (num % (2 * A) != 0)
                        continue;
                    if (auto alpha = candidate(num / (2 * A), y))
                        return alpha;
                }
            }
        return std::nullopt;
    } else {
        // 4A Q = (2Ax + By)^2 - disc y^2 with deg disc odd, so neither
        // summand can cancel the other's leading term.
        const long e = R::degree(target);
        const long dA = R::degree(A);
        const auto disc = ring.sub(ring.mul(B, B), ring.mul(ring.from_integer(4), ring.mul(A, C)));
        const long dD = R::degree(disc);
        const long ybound = (e + dA - dD) >= 0 ? (e + dA - dD) / 2 : -1;
        const long wbound = (e + dA) / 2;
        const auto twoA = ring.mul(ring.from_integer(2), A);
        std::vector<typename R::element> ys{ring.zero()};
        if (ybound >= 0)
            ys = ring.enumerate_small(ipow(Integer(ring.q()), static_cast<unsigned>(ybound)));
        for (const auto& y : ys) {
            auto [x0, rem] = ring.divmod(ring.mul(B, y), twoA);
            std::vector<typename R::element> zs;
            if (wbound >= dA)
                zs = ring.enumerate_small(ipow(Integer(ring.q()), static_cast<unsigned>(wbound - dA)));
            else if (R::degree(rem) <= wbound)
                zs = {ring.zero()};
            for (const auto& z : zs)
                if (auto alpha = candidate(ring.sub(z, x0), y))
                    return alpha;
        }
        return std::nullopt;
    }
}

} // namespace detail

/// A generator of the integral numerator of I, or none. Exact for definite
/// orders: every element of norm N(I) is found from the reduced basis.
template <BasicPid R>
std::optional<typename Order<R>::element> principal_generator(const Ideal<R>& ideal)
{
    const Order<R>& order = ideal.order();
    if (!detail::is_definite(order))
        throw domain_rejection("indefinite order: principality test needs a definite rank-2 order");
    std::optional<typename Order<R>::element> alpha;
    if (order.rank() == 1)
        alpha = ideal.generator(0);
    else
        alpha = detail::definite_rank2_generator(ideal);
    if (!alpha)
        return std::nullopt;
    Ideal<R> numerator(ideal.order_ptr(), ideal.basis(), order.ring().one());
    if (!(principal(ideal.order_ptr(), *alpha) == numerator))
        throw certification_error("generator of the ideal norm does not generate the ideal");
    return alpha;
}

template <BasicPid R>
bool is_principal(const Ideal<R>& ideal)
{
    return principal_generator(ideal).has_value();
}

template <BasicPid R>
bool class_equal(const Ideal<R>& a, const Ideal<R>& b)
{
    return is_principal(mul(a, invert(b)));
}

struct ClassGroupOptions {
    unsigned threads = 0; // 0: DEDEKIND_G_THREADS or 1
    bool reversed = false;
};

inline unsigned default_threads()
{
    if (const char* env = std::getenv("DEDEKIND_G_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(std::min<long>(v, 256));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

template <BasicPid R>
struct ClassGroup {
    EffectiveBound bound;
    std::vector<Ideal<R>> representatives;
    std::vector<std::vector<std::size_t>> cayley;
    std::vector<Integer> invariants;
    std::size_t ideal_count = 0;
    std::vector<std::size_t> class_sizes;
    std::size_t h() const { return representatives.size(); }
};

/// Invariant factors d1 | d2 | ... of a finite abelian group given by its
/// table, from the counts of elements killed by each prime power.
inline std::vector<Integer> abelian_invariants(const std::vector<std::vector<std::size_t>>& table, std::size_t identity)
{
    const std::size_t h = table.size();
    auto power = [&](std::size_t g, std::size_t e) {
        std::size_t r = identity;
        for (std::size_t i = 0; i < e; ++i)
            r = table[r][g];
        return r;
    };
    std::vector<std::vector<Integer>> columns; // per prime: cyclic factor orders, descending
    std::size_t rest = h;
    for (std::size_t p = 2; p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        while (rest % p == 0)
            rest /= p;
        std::vector<std::size_t> exps; // s_k: log_p #{g : g^{p^k} = 1}
        std::size_t pk = 1;
        for (;;) {
            pk *= p;
            std::size_t count = 0;
            for (std::size_t g = 0; g < h; ++g)
                if (power(g, pk) == identity)
                    ++count;
            std::size_t s = 0;
            while (count > 1) {
                count /= p;
                ++s;
            }
            exps.push_back(s);
            if (exps.size() >= 2 && exps[exps.size() - 1] == exps[exps.size() - 2])
                break;
        }
        // lambda_k = s_k - s_{k-1} = number of factors of order >= p^k.
        std::vector<std::size_t> at_least;
        std::size_t prev = 0;
        for (auto s : exps) {
            at_least.push_back(s - prev);
            prev = s;
        }
        std::vector<Integer> factors;
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            std::size_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            for (std::size_t j = 0; j < exact; ++j)
                factors.push_back(ipow(Integer(p), static_cast<unsigned>(k + 1)));
        }
        std::sort(factors.rbegin(), factors.rend());
        columns.push_back(factors);
    }
    std::vector<Integer> out;
    for (std::size_t i = 0;; ++i) {
        Integer d = 1;
        bool any = false;
        for (const auto& col : columns)
            if (i < col.size()) {
                d *= col[i];
                any = true;
            }
        if (!any)
            break;
        out.push_back(d);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

/// The class group of a definite order: ideals of norm <= C partitioned by
/// class_equal, each class represented by its least member.
template <BasicPid R>
ClassGroup<R> class_group(const OrderPtr<R>& order, ClassGroupOptions options = {})
{
    if (!detail::is_definite(*order))
        throw domain_rejection("indefinite order: class group computation needs a definite rank-2 order");
    ClassGroup<R> out;
    out.bound = effective_bound(*order);
    auto ideals = enumerate_ideals(order, out.bound.C);
    out.ideal_count = ideals.size();
    if (options.reversed)
        std::reverse(ideals.begin(), ideals.end());
    const unsigned threads = options.threads ? options.threads : default_threads();

    std::vector<Ideal<R>> reps;
    std::vector<Ideal<R>> rep_inverse;
    std::vector<std::size_t> assignment(ideals.size());
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    auto first_match = [&](const Ideal<R>& ideal, std::size_t from, std::size_t to) {
        for (std::size_t r = from; r < to; ++r)
            if (is_principal(mul(ideal, rep_inverse[r])))
                return r;
        return none;
    };
    const std::size_t batch = std::max<std::size_t>(64, 16 * threads);
    for (std::size_t start = 0; start < ideals.size(); start += batch) {
        const std::size_t end = std::min(ideals.size(), start + batch);
        const std::size_t known = reps.size();
        std::vector<std::size_t> match(end - start, none);
        auto work = [&](unsigned tid) {
            for (std::size_t i = start + tid; i < end; i += threads)
                match[i - start] = first_match(ideals[i], 0, known);
        };
        if (threads > 1 && known > 0) {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(threads);
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    try {
                        work(t);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            for (auto& th : pool)
                th.join();
            for (auto& e : errors)
                if (e)
                    std::rethrow_exception(e);
        } else if (known > 0) {
            work(0);
            for (unsigned t = 1; t < threads; ++t)
                work(t);
        }
        for (std::size_t i = start; i < end; ++i) {
            std::size_t r = match[i - start];
            if (r == none)
                r = first_match(ideals[i], known, reps.size());
            if (r == none) {
                r = reps.size();
                reps.push_back(ideals[i]);
                rep_inverse.push_back(invert(ideals[i]));
            }
            assignment[i] = r;
        }
    }

    // Least member of each class: minimal norm, then basis order.
    const std::size_t h = reps.size();
    std::vector<std::size_t> best(h, none);
    out.class_sizes.assign(h, 0);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        auto r = assignment[i];
        ++out.class_sizes[r];
        if (best[r] == none || compare_ideals(ideals[i], ideals[best[r]]) < 0)
            best[r] = i;
    }
    std::vector<std::size_t> perm(h);
    for (std::size_t r = 0; r < h; ++r)
        perm[r] = r;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return compare_ideals(ideals[best[a]], ideals[best[b]]) < 0; });
    std::vector<std::size_t> sizes(h);
    for (std::size_t k = 0; k < h; ++k) {
        out.representatives.push_back(ideals[best[perm[k]]]);
        sizes[k] = out.class_sizes[perm[k]];
    }
    out.class_sizes = sizes;
    std::vector<Ideal<R>> inverses;
    for (const auto& rep : out.representatives)
        inverses.push_back(invert(rep));

    auto classify = [&](const Ideal<R>& ideal) {
        for (std::size_t k = 0; k < h; ++k)
            if (is_principal(mul(ideal, inverses[k])))
                return k;
        throw certification_error("product lies in no enumerated class");
    };
    out.cayley.assign(h, std::vector<std::size_t>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            auto k = classify(mul(out.representatives[i], out.representatives[j]));
            out.cayley[i][j] = out.cayley[j][i] = k;
        }

    // The whole ring has norm 1, so it represents class 0.
    if (!(out.representatives.front() == whole_ring(order)))
        throw certification_error("class 0 is not the class of the whole ring");
    for (std::size_t i = 0; i < h; ++i) {
        if (out.cayley[0][i] != i)
            throw certification_error("class of the whole ring is not the identity");
        std::vector<bool> hit(h, false);
        for (std::size_t j = 0; j < h; ++j)
            hit[out.cayley[i][j]] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            throw certification_error("Cayley table row is not a permutation");
        for (std::size_t j = 0; j < h; ++j)
            for (std::size_t k = 0; k < h; ++k)
                if (out.cayley[out.cayley[i][j]][k] != out.cayley[i][out.cayley[j][k]])
                    throw certification_error("Cayley table is not associative");
    }
    out.invariants = abelian_invariants(out.cayley, 0);
    Integer product = 1;
    for (const auto& d : out.invariants)
        product *= d;
    if (product != Integer(h))
        throw certification_error("invariant factors do not multiply to h");
    return out;
}

} // namespace dedekind
