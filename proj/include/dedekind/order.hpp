#pragma once

#include "dedekind/base_pid.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace dedekind {

/// A commutative ring that is free of rank n over a basic PID, given by
/// structure constants x_i x_j = sum_k r_ij^(k) x_k with x_1 = 1.
///
/// Construction checks commutativity, the unit axiom and associativity.
/// Whether the algebra is a Dedekind domain (integrally closed) is NOT
/// checked; ideal inversion certifies it a posteriori for the ideals it
/// actually touches.
template <BasicPid R>
class Order {
  public:
    using base_element = typename R::element;
    using element = std::vector<base_element>;

    Order(R ring, std::size_t n, std::vector<base_element> constants, std::string label)
        : ring_(std::move(ring)), n_(n), constants_(std::move(constants)), label_(std::move(label))
    {
        validate();
    }

    const R& ring() const { return ring_; }
    std::size_t rank() const { return n_; }
    const std::string& label() const { return label_; }
    const std::vector<base_element>& constants() const { return constants_; }

    /// r_ij^(k), zero-based indices.
    const base_element& constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return constants_[(i * n_ + j) * n_ + k];
    }

    element zero() const { return element(n_, ring_.zero()); }
    element basis(std::size_t i) const
    {
        element e = zero();
        e.at(i) = ring_.one();
        return e;
    }
    element one() const { return basis(0); }
    element from_base(const base_element& a) const
    {
        element e = zero();
        e[0] = a;
        return e;
    }

    bool is_zero(const element& a) const
    {
        return std::all_of(a.begin(), a.end(), [&](const base_element& c) { return ring_.is_zero(c); });
    }

    element add(const element& a, const element& b) const
    {
        check(a);
        check(b);
        element r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            r[i] = ring_.add(a[i], b[i]);
        return r;
    }
    element sub(const element& a, const element& b) const
    {
        check(a);
        check(b);
        element r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            r[i] = ring_.sub(a[i], b[i]);
        return r;
    }
    element neg(const element& a) const
    {
        element r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            r[i] = ring_.neg(a.at(i));
        return r;
    }
    element scale(const element& a, const base_element& s) const
    {
        element r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            r[i] = ring_.mul(a.at(i), s);
        return r;
    }

    /// Bilinear product through the structure constants.
    element mul(const element& a, const element& b) const
    {
        check(a);
        check(b);
        element r = zero();
        for (std::size_t i = 0; i < n_; ++i) {
            if (ring_.is_zero(a[i]))
                continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (ring_.is_zero(b[j]))
                    continue;
                base_element ab = ring_.mul(a[i], b[j]);
                for (std::size_t k = 0; k < n_; ++k) {
                    const auto& c = constant(i, j, k);
                    if (!ring_.is_zero(c))
                        r[k] = ring_.add(r[k], ring_.mul(ab, c));
                }
            }
        }
        return r;
    }

    /// Matrix of x -> alpha*x: row i holds the coordinates of alpha*x_i,
    /// i.e. entry (i,k) = sum_j c_j r_ij^(k).
    Matrix<R> mult_matrix(const element& alpha) const
    {
        check(alpha);
        Matrix<R> m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (ring_.is_zero(alpha[j]))
                    continue;
                for (std::size_t k = 0; k < n_; ++k) {
                    const auto& c = constant(i, j, k);
                    if (!ring_.is_zero(c))
                        m(i, k) = ring_.add(m(i, k), ring_.mul(alpha[j], c));
                }
            }
        return m;
    }

    /// N_{L/K}(alpha) = det(T_alpha).
    base_element field_norm(const element& alpha) const { return det(ring_, mult_matrix(alpha)); }

    /// |B / alpha B| = N_A(N_{L/K}(alpha)).
    Integer element_norm(const element& alpha) const { return ring_.norm(field_norm(alpha)); }

    std::string element_to_string(const element& a) const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i)
                s += ", ";
            s += ring_.to_string(a[i]);
        }
        return s + "]";
    }

  private:
    R ring_;
    std::size_t n_;
    std::vector<base_element> constants_;
    std::string label_;

    void check(const element& a) const
    {
        if (a.size() != n_)
            throw std::invalid_argument("order element has length " + std::to_string(a.size()) + ", expected " + std::to_string(n_));
    }

    void validate() const
    {
        if (n_ == 0)
            throw std::invalid_argument("order rank must be positive");
        if (constants_.size() != n_ * n_ * n_)
            throw std::invalid_argument("expected n^3 structure constants");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    if (constant(i, j, k) != constant(j, i, k))
                        throw std::invalid_argument("structure constants are not commutative");
                    base_element delta = j == k ? ring_.one() : ring_.zero();
                    if (constant(0, j, k) != delta)
                        throw std::invalid_argument("first basis element must act as the identity");
                }
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t l = 0; l < n_; ++l) {
                    auto left = mul(mul(basis(i), basis(j)), basis(l));
                    auto right = mul(basis(i), mul(basis(j), basis(l)));
                    if (left != right)
                        throw std::invalid_argument("structure constants are not associative");
                }
    }
};

/// Rank-2 order with basis {1, w}, w^2 = r + s*w.
template <BasicPid R>
Order<R> make_rank2_order(const R& ring, const typename R::element& r, const typename R::element& s, std::string label)
{
    std::vector<typename R::element> c(8, ring.zero());
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> typename R::element& { return c[(i * 2 + j) * 2 + k]; };
    at(0, 0, 0) = ring.one();
    at(0, 1, 1) = ring.one();
    at(1, 0, 1) = ring.one();
    at(1, 1, 0) = r;
    at(1, 1, 1) = s;
    return Order<R>(ring, 2, std::move(c), std::move(label));
}

inline bool is_squarefree_integer(const Integer& d)
{
    Integer n = boost::multiprecision::abs(d);
    if (n > Integer(1) << 80)
        throw resource_limit("squarefree test limited to |d| < 2^80");
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0)
            return false;
        if (p > 1000000 && p * p * p > n)
            break;
    }
    return true;
}

/// Maximal order of Q(sqrt d): basis {1, sqrt d} when d = 2, 3 mod 4,
/// basis {1, (1 + sqrt d)/2} when d = 1 mod 4.
inline Order<IntegerRing> make_quadratic_order(const Integer& d)
{
    if (d == 0 || d == 1)
        throw domain_rejection("quadratic order needs d != 0, 1");
    if (!is_squarefree_integer(d))
        throw domain_rejection("d = " + d.str() + " is not squarefree");
    IntegerRing z;
    std::string label = "quad:" + d.str();
    Integer m4 = d % 4;
    if (m4 < 0)
        m4 += 4;
    if (m4 == 1)
        return make_rank2_order(z, Integer((d - 1) / 4), Integer(1), label);
    return make_rank2_order(z, d, Integer(0), label);
}

/// F_q[t][y] / (y^2 - f) for odd q and monic squarefree f of odd degree.
inline Order<PolyRing> make_hyperelliptic_order(const PolyRing& ring, const Poly& f)
{
    if (ring.characteristic() == 2)
        throw domain_rejection("hyperelliptic orders need odd characteristic");
    if (PolyRing::degree(f) < 1 || PolyRing::degree(f) % 2 == 0)
        throw domain_rejection("f must have odd degree");
    if (PolyRing::leading(f) != 1)
        throw domain_rejection("f must be monic");
    Poly g = ring.gcd(f, ring.derivative(f));
    if (PolyRing::degree(g) != 0)
        throw domain_rejection("f = " + ring.to_string(f) + " is not squarefree");
    std::string label = "hyp:q=" + std::to_string(ring.q()) + ",f=" + ring.to_string(f);
    return make_rank2_order(ring, f, Poly{}, label);
}

template <BasicPid R>
struct NormTerm {
    typename R::element coefficient;
    std::vector<unsigned> exponents;
};

/// Homogeneous polynomial f with N_{L/K}(sum c_i x_i) = f(c_1..c_n).
template <BasicPid R>
struct NormForm {
    std::vector<NormTerm<R>> terms; // sorted by exponent vector, descending
    std::size_t degree = 0;

    std::size_t term_count() const { return terms.size(); }
};

/// Expands det of the symbolic multiplication matrix by the Leibniz formula.
template <BasicPid R>
NormForm<R> norm_form(const Order<R>& order)
{
    const R& ring = order.ring();
    const std::size_t n = order.rank();
    using Monomials = std::map<std::vector<unsigned>, typename R::element>;
    // entry (i,k) is the linear form sum_j T_j r_ij^(k)
    auto entry = [&](std::size_t i, std::size_t k) {
        Monomials lin;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = order.constant(i, j, k);
            if (ring.is_zero(c))
                continue;
            std::vector<unsigned> e(n, 0);
            e[j] = 1;
            lin[e] = c;
        }
        return lin;
    };
    auto multiply = [&](const Monomials& a, const Monomials& b) {
        Monomials r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                std::vector<unsigned> e(n);
                for (std::size_t t = 0; t < n; ++t)
                    e[t] = ea[t] + eb[t];
                auto it = r.find(e);
                auto v = ring.mul(ca, cb);
                if (it == r.end())
                    r.emplace(std::move(e), std::move(v));
                else
                    it->second = ring.add(it->second, v);
            }
        return r;
    };
    Monomials total;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Monomials prod{{std::vector<unsigned>(n, 0), ring.one()}};
        for (std::size_t i = 0; i < n && !prod.empty(); ++i)
            prod = multiply(prod, entry(i, perm[i]));
        for (auto& [e, c] : prod) {
            auto v = inversions % 2 ? ring.neg(c) : c;
            auto it = total.find(e);
            if (it == total.end())
                total.emplace(e, std::move(v));
            else
                it->second = ring.add(it->second, v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    NormForm<R> form;
    form.degree = n;
    for (auto it = total.rbegin(); it != total.rend(); ++it)
        if (!ring.is_zero(it->second))
            form.terms.push_back({it->second, it->first});
    return form;
}

template <BasicPid R>
typename R::element evaluate(const R& ring, const NormForm<R>& form, const std::vector<typename R::element>& c)
{
    auto v = ring.zero();
    for (const auto& term : form.terms) {
        auto m = term.coefficient;
        for (std::size_t i = 0; i < term.exponents.size(); ++i)
            for (unsigned e = 0; e < term.exponents[i]; ++e)
                m = ring.mul(m, c.at(i));
        v = ring.add(v, m);
    }
    return v;
}

/// C1 = C0 * k * max_i N_A(a_i) over the k monomial coefficients a_i.
template <BasicPid R>
Integer norm_form_bound(const Order<R>& order, const NormForm<R>& form)
{
    const R& ring = order.ring();
    Integer max_norm = 0;
    for (const auto& t : form.terms)
        max_norm = std::max(max_norm, ring.norm(t.coefficient));
    return ring.quasi_triangle_constant() * Integer(form.term_count()) * max_norm;
}

template <BasicPid R>
Integer norm_form_bound(const Order<R>& order)
{
    return norm_form_bound(order, norm_form(order));
}

template <BasicPid R>
std::string norm_form_to_string(const R& ring, const NormForm<R>& form)
{
    std::string s;
    for (const auto& t : form.terms) {
        std::string c = ring.to_string(t.coefficient);
        if (c.find_first_of("+-", 1) != std::string::npos)
            c = "(" + c + ")";
        std::string mono;
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "T" + std::to_string(i + 1);
            if (t.exponents[i] > 1)
                mono += "^" + std::to_string(t.exponents[i]);
        }
        std::string piece = c == "1" ? mono : (mono.empty() ? c : c + "*" + mono);
        if (!s.empty() && piece[0] != '-')
            s += " + ";
        else if (!s.empty())
            s += " ";
        s += piece;
    }
    return s.empty() ? "0" : s;
}

} // namespace dedekind
