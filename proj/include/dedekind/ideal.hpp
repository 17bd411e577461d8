#pragma once

#include "dedekind/errors.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/order.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dedekind {

template <BasicPid R>
using OrderPtr = std::shared_ptr<const Order<R>>;

template <BasicPid R>
OrderPtr<R> share(Order<R> order)
{
    return std::make_shared<const Order<R>>(std::move(order));
}

/// Reduces v modulo the row span of an upper-triangular basis with
/// nonzero pivots. The result is a canonical coset representative; it is
/// zero exactly when v lies in the span.
template <BasicPid R>
std::vector<typename R::element> reduce_mod_lattice(const R& ring, const Matrix<R>& h, std::vector<typename R::element> v)
{
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (ring.is_zero(v[i]))
            continue;
        auto [q, r] = ring.divmod(v[i], h(i, i));
        if (ring.is_zero(q))
            continue;
        for (std::size_t j = i; j < h.cols(); ++j)
            if (!ring.is_zero(h(i, j)))
                v[j] = ring.sub(v[j], ring.mul(q, h(i, j)));
    }
    return v;
}

template <BasicPid R>
bool in_lattice(const R& ring, const Matrix<R>& h, const std::vector<typename R::element>& v)
{
    auto r = reduce_mod_lattice(ring, h, v);
    return std::all_of(r.begin(), r.end(), [&](const auto& c) { return ring.is_zero(c); });
}

/// True when the row span of the square upper-triangular h is closed under
/// multiplication by every basis element of the order.
template <BasicPid R>
bool is_ideal_lattice(const Order<R>& order, const Matrix<R>& h)
{
    const R& ring = order.ring();
    const std::size_t n = order.rank();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t g = 0; g < h.rows(); ++g) {
            std::vector<typename R::element> v(n, ring.zero());
            for (std::size_t j = 0; j < n; ++j) {
                if (ring.is_zero(h(g, j)))
                    continue;
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& c = order.constant(j, i, k);
                    if (!ring.is_zero(c))
                        v[k] = ring.add(v[k], ring.mul(h(g, j), c));
                }
            }
            if (!in_lattice(ring, h, v))
                return false;
        }
    return true;
}

/// A nonzero fractional ideal (1/denominator) * span(basis rows).
/// The basis is a full-rank HNF and gcd(denominator, entries) = 1.
template <BasicPid R>
class Ideal {
  public:
    using base_element = typename R::element;
    using element = typename Order<R>::element;

    Ideal(OrderPtr<R> order, const Matrix<R>& generators, base_element denominator)
        : order_(std::move(order))
    {
        const R& ring = order_->ring();
        if (generators.cols() != order_->rank())
            throw std::invalid_argument("ideal generators have the wrong width");
        if (ring.is_zero(denominator))
            throw domain_rejection("zero denominator");
        basis_ = hnf(ring, generators);
        if (basis_.rows() != order_->rank())
            throw domain_rejection("generators do not span a full-rank ideal");
        denominator_ = ring.canonical(denominator);
        auto g = denominator_;
        for (std::size_t i = 0; i < basis_.rows() && !ring.is_unit(g); ++i)
            for (std::size_t j = i; j < basis_.cols(); ++j)
                if (!ring.is_zero(basis_(i, j)))
                    g = ring.canonical(ring.xgcd(g, basis_(i, j)).g);
        if (!ring.is_unit(g)) {
            denominator_ = ring.divexact(denominator_, g);
            for (std::size_t i = 0; i < basis_.rows(); ++i)
                for (std::size_t j = i; j < basis_.cols(); ++j)
                    basis_(i, j) = ring.divexact(basis_(i, j), g);
        }
    }

    const Order<R>& order() const { return *order_; }
    const OrderPtr<R>& order_ptr() const { return order_; }
    const Matrix<R>& basis() const { return basis_; }
    const base_element& denominator() const { return denominator_; }
    bool is_integral() const { return denominator_ == order_->ring().one(); }

    /// Row i of the integral numerator, as an order element.
    element generator(std::size_t i) const { return basis_.row(i); }

    /// Product of the pivots: det of the numerator basis, canonical.
    base_element numerator_det() const
    {
        const R& ring = order_->ring();
        auto d = ring.one();
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            d = ring.mul(d, basis_(i, i));
        return d;
    }

    bool operator==(const Ideal& o) const
    {
        return (order_ == o.order_ || order_->label() == o.order_->label()) && denominator_ == o.denominator_ && basis_ == o.basis_;
    }

  private:
    OrderPtr<R> order_;
    Matrix<R> basis_;
    base_element denominator_;
};

template <BasicPid R>
Ideal<R> whole_ring(const OrderPtr<R>& order)
{
    return Ideal<R>(order, Matrix<R>::identity(order->ring(), order->rank()), order->ring().one());
}

/// alpha * B.
template <BasicPid R>
Ideal<R> principal(const OrderPtr<R>& order, const typename Order<R>::element& alpha)
{
    if (order->is_zero(alpha))
        throw domain_rejection("principal ideal of zero");
    return Ideal<R>(order, order->mult_matrix(alpha), order->ring().one());
}

/// The ideal generated by the given elements.
template <BasicPid R>
Ideal<R> ideal_from_generators(const OrderPtr<R>& order, const std::vector<typename Order<R>::element>& gens)
{
    Matrix<R> rows(0, order->rank());
    for (const auto& g : gens) {
        auto t = order->mult_matrix(g);
        for (std::size_t i = 0; i < t.rows(); ++i)
            rows.append_row(t.row(i));
    }
    if (rows.rows() == 0)
        throw domain_rejection("ideal needs at least one generator");
    return Ideal<R>(order, rows, order->ring().one());
}

/// |B / I| for an integral ideal.
template <BasicPid R>
Integer ideal_norm(const Ideal<R>& ideal)
{
    if (!ideal.is_integral())
        throw domain_rejection("ideal_norm needs an integral ideal");
    return ideal.order().ring().norm(ideal.numerator_det());
}

template <BasicPid R>
Ideal<R> add(const Ideal<R>& a, const Ideal<R>& b)
{
    const R& ring = a.order().ring();
    auto g = ring.canonical(ring.xgcd(a.denominator(), b.denominator()).g);
    auto fa = ring.divexact(b.denominator(), g);
    auto fb = ring.divexact(a.denominator(), g);
    Matrix<R> rows(0, a.order().rank());
    for (std::size_t i = 0; i < a.basis().rows(); ++i) {
        auto r = a.basis().row(i);
        for (auto& c : r)
            c = ring.mul(c, fa);
        rows.append_row(r);
    }
    for (std::size_t i = 0; i < b.basis().rows(); ++i) {
        auto r = b.basis().row(i);
        for (auto& c : r)
            c = ring.mul(c, fb);
        rows.append_row(r);
    }
    return Ideal<R>(a.order_ptr(), rows, ring.mul(a.denominator(), fa));
}

template <BasicPid R>
Ideal<R> mul(const Ideal<R>& a, const Ideal<R>& b)
{
    const Order<R>& order = a.order();
    const R& ring = order.ring();
    Matrix<R> rows(0, order.rank());
    for (std::size_t i = 0; i < a.basis().rows(); ++i)
        for (std::size_t j = 0; j < b.basis().rows(); ++j)
            rows.append_row(order.mul(a.generator(i), b.generator(j)));
    return Ideal<R>(a.order_ptr(), rows, ring.mul(a.denominator(), b.denominator()));
}

/// alpha in I, for alpha in B.
template <BasicPid R>
bool member(const Ideal<R>& ideal, const typename Order<R>::element& alpha)
{
    const R& ring = ideal.order().ring();
    return in_lattice(ring, ideal.basis(), ideal.order().scale(alpha, ideal.denominator()));
}

/// inner is contained in outer.
template <BasicPid R>
bool contains(const Ideal<R>& outer, const Ideal<R>& inner)
{
    const R& ring = outer.order().ring();
    Matrix<R> scaled = scale(ring, outer.basis(), inner.denominator());
    for (std::size_t i = 0; i < inner.basis().rows(); ++i)
        if (!in_lattice(ring, scaled, inner.order().scale(inner.generator(i), outer.denominator())))
            return false;
    return true;
}

/// I^{-1} = (1/d) {z in B : z I subset d B} where d is the numerator
/// determinant, certified by I * I^{-1} = B.
template <BasicPid R>
Ideal<R> invert(const Ideal<R>& ideal)
{
    const Order<R>& order = ideal.order();
    const R& ring = order.ring();
    const std::size_t n = order.rank();
    const auto d = ideal.numerator_det();
    Matrix<R> z(n, n * n);
    for (std::size_t b = 0; b < n; ++b) {
        auto t = order.mult_matrix(ideal.generator(b));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < n; ++c)
                z(k, b * n + c) = t(k, c);
    }
    Matrix<R> kernel = solve_mod(ring, z, d);
    Ideal<R> integral_part(ideal.order_ptr(), ideal.basis(), ring.one());
    Ideal<R> inverse(ideal.order_ptr(), kernel, d);
    if (!(mul(integral_part, inverse) == whole_ring(ideal.order_ptr())))
        throw certification_error("ideal is not invertible (order " + order.label() + " is not Dedekind?)");
    if (ideal.is_integral())
        return inverse;
    return Ideal<R>(ideal.order_ptr(), scale(ring, inverse.basis(), ideal.denominator()), inverse.denominator());
}

/// Total order: integral before fractional by denominator, then norm of
/// the numerator determinant, then basis entries row-major.
template <BasicPid R>
int compare_ideals(const Ideal<R>& a, const Ideal<R>& b)
{
    const R& ring = a.order().ring();
    if (int c = ring.compare(a.denominator(), b.denominator()))
        return c;
    Integer na = ring.norm(a.numerator_det()), nb = ring.norm(b.numerator_det());
    if (na != nb)
        return na < nb ? -1 : 1;
    for (std::size_t i = 0; i < a.basis().rows(); ++i)
        for (std::size_t j = 0; j < a.basis().cols(); ++j)
            if (int c = ring.compare(a.basis()(i, j), b.basis()(i, j)))
                return c;
    return 0;
}

template <BasicPid R>
std::string ideal_to_string(const Ideal<R>& ideal)
{
    const R& ring = ideal.order().ring();
    std::string s;
    if (!ideal.is_integral())
        s += "(1/" + ring.to_string(ideal.denominator()) + ")";
    s += "[";
    for (std::size_t i = 0; i < ideal.basis().rows(); ++i) {
        if (i)
            s += "; ";
        for (std::size_t j = 0; j < ideal.basis().cols(); ++j) {
            if (j)
                s += ", ";
            s += ring.to_string(ideal.basis()(i, j));
        }
    }
    return s + "]";
}

namespace detail {

template <BasicPid R>
typename R::element mulmod(const R& ring, const typename R::element& a, const typename R::element& b, const typename R::element& m)
{
    return ring.rem(ring.mul(a, b), m);
}

template <BasicPid R>
typename R::element powmod(const R& ring, typename R::element base, Integer e, const typename R::element& m)
{
    auto r = ring.rem(ring.one(), m);
    base = ring.rem(base, m);
    while (e > 0) {
        if ((e & 1) != 0)
            r = mulmod(ring, r, base, m);
        e >>= 1;
        if (e > 0)
            base = mulmod(ring, base, base, m);
    }
    return r;
}

template <BasicPid R>
typename R::element inverse_mod(const R& ring, const typename R::element& a, const typename R::element& p)
{
    auto x = ring.xgcd(ring.rem(a, p), p);
    if (!ring.is_unit(x.g))
        throw std::domain_error("not invertible modulo p");
    return ring.rem(x.s, p);
}

template <BasicPid R>
typename R::element nth_residue(const R& ring, std::uint64_t k)
{
    if constexpr (R::kind == RingKind::integers)
        return Integer(k);
    else
        return ring.from_code(k);
}

/// Square roots of a in the residue field A/p of odd order (Tonelli-Shanks).
template <BasicPid R>
std::optional<typename R::element> sqrt_mod_prime(const R& ring, const typename R::element& a, const typename R::element& p)
{
    auto x = ring.rem(a, p);
    if (ring.is_zero(x))
        return x;
    const Integer order = ring.norm(p);
    const Integer half = (order - 1) / 2;
    const auto one = ring.rem(ring.one(), p);
    if (powmod(ring, x, half, p) != one)
        return std::nullopt;
    Integer odd = order - 1;
    unsigned s = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++s;
    }
    typename R::element z;
    for (std::uint64_t k = 2;; ++k) {
        z = ring.rem(nth_residue(ring, k), p);
        if (!ring.is_zero(z) && powmod(ring, z, half, p) != one)
            break;
    }
    auto c = powmod(ring, z, odd, p);
    auto t = powmod(ring, x, odd, p);
    auto root = powmod(ring, x, (odd + 1) / 2, p);
    unsigned m = s;
    while (t != one) {
        unsigned i = 0;
        auto tt = t;
        while (tt != one) {
            tt = mulmod(ring, tt, tt, p);
            ++i;
        }
        auto b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j)
            b = mulmod(ring, b, b, p);
        m = i;
        c = mulmod(ring, b, b, p);
        t = mulmod(ring, t, c, p);
        root = mulmod(ring, root, b, p);
    }
    return root;
}

/// For a rank-2 order with w^2 = r + s w, the lattices [[1, b], [0, p]]
/// closed under w are those with r b^2 - s b - 1 = 0 mod p.
template <BasicPid R>
std::vector<typename R::element> rank2_prime_candidates(const Order<R>& order, const typename R::element& p)
{
    const R& ring = order.ring();
    const auto r = ring.rem(order.constant(1, 1, 0), p);
    const auto s = ring.rem(order.constant(1, 1, 1), p);
    std::vector<typename R::element> out;
    if (ring.is_zero(r)) {
        if (!ring.is_zero(s))
            out.push_back(ring.rem(ring.neg(inverse_mod(ring, s, p)), p));
        return out;
    }
    auto disc = ring.rem(ring.add(ring.mul(s, s), ring.mul(ring.from_integer(4), r)), p);
    auto root = sqrt_mod_prime(ring, disc, p);
    if (!root)
        return out;
    auto inv2r = inverse_mod(ring, ring.mul(ring.from_integer(2), r), p);
    out.push_back(mulmod(ring, ring.add(s, *root), inv2r, p));
    auto other = mulmod(ring, ring.sub(s, *root), inv2r, p);
    if (other != out.front())
        out.push_back(other);
    return out;
}

// Calls visit(h) for every square upper-triangular matrix with the given
// pivots and entries above each pivot ranging over residues modulo it.
template <BasicPid R>
void for_each_hnf_with_pivots(const R& ring, const std::vector<typename R::element>& pivots,
                              const std::function<void(const Matrix<R>&)>& visit)
{
    const std::size_t n = pivots.size();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::vector<typename R::element>> choices;
    Integer total = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (ring.is_unit(pivots[j]))
            continue;
        auto res = ring.residues(pivots[j]);
        for (std::size_t i = 0; i < j; ++i) {
            slots.emplace_back(i, j);
            choices.push_back(res);
            total *= res.size();
        }
    }
    if (total > Integer(enumeration_cap))
        throw resource_limit("ideal enumeration exceeds the candidate cap");
    Matrix<R> h(n, n);
    for (std::size_t j = 0; j < n; ++j)
        h(j, j) = pivots[j];
    std::vector<std::size_t> idx(slots.size(), 0);
    for (;;) {
        for (std::size_t s = 0; s < slots.size(); ++s)
            h(slots[s].first, slots[s].second) = choices[s][idx[s]];
        visit(h);
        std::size_t s = 0;
        while (s < slots.size() && ++idx[s] == choices[s].size())
            idx[s++] = 0;
        if (s == slots.size())
            break;
    }
}

template <BasicPid R>
void compositions(std::size_t parts, unsigned total, std::vector<unsigned>& cur, const std::function<void(const std::vector<unsigned>&)>& f)
{
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        f(cur);
        cur.pop_back();
        return;
    }
    for (unsigned e = 0; e <= total; ++e) {
        cur.push_back(e);
        compositions<R>(parts, total - e, cur, f);
        cur.pop_back();
    }
}

/// Integral ideals of norm N(p)^k, p prime in A.
template <BasicPid R>
std::vector<Ideal<R>> primary_ideals(const OrderPtr<R>& order, const typename R::element& p, unsigned k)
{
    const R& ring = order->ring();
    const std::size_t n = order->rank();
    std::vector<typename R::element> powers{ring.one()};
    for (unsigned e = 1; e <= k; ++e)
        powers.push_back(ring.mul(powers.back(), p));
    const bool odd_residue_field = ring.norm(p) % 2 == 1;
    std::vector<Ideal<R>> out;
    std::vector<unsigned> cur;
    compositions<R>(n, k, cur, [&](const std::vector<unsigned>& e) {
        std::vector<typename R::element> pivots;
        for (unsigned x : e)
            pivots.push_back(powers[x]);
        if (n == 2 && k == 1 && e[0] == 0 && odd_residue_field) {
            Matrix<R> h(2, 2);
            h(0, 0) = ring.one();
            h(1, 1) = p;
            for (auto& b : rank2_prime_candidates(*order, p)) {
                h(0, 1) = b;
                if (is_ideal_lattice(*order, h))
                    out.emplace_back(order, h, ring.one());
            }
            return;
        }
        for_each_hnf_with_pivots<R>(ring, pivots, [&](const Matrix<R>& h) {
            if (is_ideal_lattice(*order, h))
                out.emplace_back(order, h, ring.one());
        });
    });
    return out;
}

} // namespace detail

template <BasicPid R>
void sort_ideals(std::vector<Ideal<R>>& ideals)
{
    std::sort(ideals.begin(), ideals.end(), [](const Ideal<R>& a, const Ideal<R>& b) { return compare_ideals(a, b) < 0; });
}

/// All integral ideals of norm <= bound, sorted by norm then basis.
///
/// Each ideal is the product of its p-primary parts I + p^e B, so the
/// candidates are HNF lattices with prime-power pivots, filtered by
/// closure, then multiplied together across distinct primes.
template <BasicPid R>
std::vector<Ideal<R>> enumerate_ideals(const OrderPtr<R>& order, const Integer& bound)
{
    std::vector<Ideal<R>> out;
    if (bound < 1)
        return out;
    const R& ring = order->ring();
    auto primes = ring.primes_up_to(bound);
    std::vector<std::vector<Ideal<R>>> primary(primes.size());
    std::vector<Integer> prime_norm(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        prime_norm[i] = ring.norm(primes[i]);
        Integer nk = prime_norm[i];
        for (unsigned k = 1; nk <= bound; ++k, nk *= prime_norm[i]) {
            auto part = detail::primary_ideals(order, primes[i], k);
            primary[i].insert(primary[i].end(), part.begin(), part.end());
        }
    }
    std::function<void(std::size_t, const Ideal<R>&, const Integer&)> extend = [&](std::size_t start, const Ideal<R>& cur, const Integer& norm) {
        out.push_back(cur);
        for (std::size_t i = start; i < primes.size(); ++i) {
            if (norm * prime_norm[i] > bound)
                break;
            for (const auto& part : primary[i]) {
                Integer nn = norm * ideal_norm(part);
                if (nn <= bound)
                    extend(i + 1, mul(cur, part), nn);
            }
        }
    };
    extend(0, whole_ring(order), Integer(1));
    sort_ideals(out);
    return out;
}

/// Reference enumeration: every HNF with pivot-product norm <= bound,
/// filtered by closure. Quadratically slower; kept as a cross-check.
template <BasicPid R>
std::vector<Ideal<R>> enumerate_ideals_by_filter(const OrderPtr<R>& order, const Integer& bound)
{
    std::vector<Ideal<R>> out;
    if (bound < 1)
        return out;
    const R& ring = order->ring();
    const std::size_t n = order->rank();
    std::vector<typename R::element> canon;
    for (auto& x : ring.enumerate_small(bound))
        if (!ring.is_zero(x) && ring.canonical(x) == x)
            canon.push_back(x);
    std::vector<typename R::element> pivots;
    std::function<void(const Integer&)> choose = [&](const Integer& norm) {
        if (pivots.size() == n) {
            detail::for_each_hnf_with_pivots<R>(ring, pivots, [&](const Matrix<R>& h) {
                if (is_ideal_lattice(*order, h))
                    out.emplace_back(order, h, ring.one());
            });
            return;
        }
        for (const auto& c : canon) {
            Integer nn = norm * ring.norm(c);
            if (nn > bound)
                continue;
            pivots.push_back(c);
            choose(nn);
            pivots.pop_back();
        }
    };
    choose(Integer(1));
    sort_ideals(out);
    return out;
}

} // namespace dedekind
