#pragma once

#include "dedekind/base_pid.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dedekind {

/// Dense row-major matrix over a basic PID. Default-constructed entries
/// are zero for both built-in rings.
template <BasicPid R>
class Matrix {
  public:
    using element = typename R::element;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols)
    {
    }

    static Matrix from_rows(const std::vector<std::vector<element>>& rows)
    {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(const R& ring, std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = ring.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<element> row(std::size_t i) const
    {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /// Keeps rows [0, n).
    void truncate_rows(std::size_t n)
    {
        rows_ = n;
        data_.resize(n * cols_);
    }

    void append_row(const std::vector<element>& r)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        if (r.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    bool operator==(const Matrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<element> data_;
};

template <BasicPid R>
Matrix<R> matmul(const R& ring, const Matrix<R>& a, const Matrix<R>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: shape mismatch");
    Matrix<R> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ring.is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
        }
    return c;
}

template <BasicPid R>
Matrix<R> scale(const R& ring, const Matrix<R>& m, const typename R::element& s)
{
    Matrix<R> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = ring.mul(m(i, j), s);
    return r;
}

namespace detail {

// rows a, b <- (s*a + t*b, u*a + v*b) for a unimodular [[s,t],[u,v]]
template <BasicPid R>
void combine_rows(const R& ring, Matrix<R>& m, std::size_t a, std::size_t b, const typename R::element& s,
                  const typename R::element& t, const typename R::element& u, const typename R::element& v)
{
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto x = m(a, j), y = m(b, j);
        if (ring.is_zero(x) && ring.is_zero(y))
            continue;
        m(a, j) = ring.add(ring.mul(s, x), ring.mul(t, y));
        m(b, j) = ring.add(ring.mul(u, x), ring.mul(v, y));
    }
}

template <BasicPid R>
void combine_cols(const R& ring, Matrix<R>& m, std::size_t a, std::size_t b, const typename R::element& s,
                  const typename R::element& t, const typename R::element& u, const typename R::element& v)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto x = m(i, a), y = m(i, b);
        if (ring.is_zero(x) && ring.is_zero(y))
            continue;
        m(i, a) = ring.add(ring.mul(s, x), ring.mul(t, y));
        m(i, b) = ring.add(ring.mul(u, x), ring.mul(v, y));
    }
}

// row a -= q * row b
template <BasicPid R>
void subtract_row(const R& ring, Matrix<R>& m, std::size_t a, std::size_t b, const typename R::element& q)
{
    if (ring.is_zero(q))
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!ring.is_zero(m(b, j)))
            m(a, j) = ring.sub(m(a, j), ring.mul(q, m(b, j)));
}

template <BasicPid R>
void scale_row(const R& ring, Matrix<R>& m, std::size_t a, const typename R::element& u)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(a, j) = ring.mul(m(a, j), u);
}

} // namespace detail

/// Row Hermite normal form. The result is upper-triangular with canonical
/// pivots, entries above each pivot reduced modulo it, and zero rows
/// dropped; its row span equals that of the input.
template <BasicPid R>
Matrix<R> hnf(const R& ring, Matrix<R> h)
{
    std::size_t r = 0;
    for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (ring.is_zero(h(i, j)))
                continue;
            if (ring.is_zero(h(r, j))) {
                h.swap_rows(r, i);
                continue;
            }
            if (ring.divides(h(r, j), h(i, j))) {
                detail::subtract_row(ring, h, i, r, ring.divexact(h(i, j), h(r, j)));
                continue;
            }
            auto x = ring.xgcd(h(r, j), h(i, j));
            auto a = ring.divexact(h(r, j), x.g);
            auto b = ring.divexact(h(i, j), x.g);
            detail::combine_rows(ring, h, r, i, x.s, x.t, ring.neg(b), a);
        }
        if (ring.is_zero(h(r, j)))
            continue;
        auto u = ring.unit_inverse(ring.unit_part(h(r, j)));
        if (u != ring.one())
            detail::scale_row(ring, h, r, u);
        for (std::size_t i = 0; i < r; ++i)
            detail::subtract_row(ring, h, i, r, ring.divmod(h(i, j), h(r, j)).first);
        ++r;
    }
    h.truncate_rows(r);
    return h;
}

template <BasicPid R>
struct SnfResult {
    std::vector<typename R::element> diagonal;
    Matrix<R> left, right; // left * input * right = diag
};

/// Smith normal form with unimodular transforms.
template <BasicPid R>
SnfResult<R> snf(const R& ring, const Matrix<R>& input)
{
    Matrix<R> a = input;
    const std::size_t m = a.rows(), n = a.cols();
    Matrix<R> left = Matrix<R>::identity(ring, m), right = Matrix<R>::identity(ring, n);
    const std::size_t steps = std::min(m, n);
    std::vector<typename R::element> diag;
    for (std::size_t t = 0; t < steps; ++t) {
        bool finished = false;
        for (;;) {
            // smallest-norm nonzero entry of the trailing block
            std::size_t pi = m, pj = n;
            Integer best = -1;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!ring.is_zero(a(i, j))) {
                        Integer nv = ring.norm(a(i, j));
                        if (best < 0 || nv < best) {
                            best = nv;
                            pi = i;
                            pj = j;
                        }
                    }
            if (pi == m) {
                finished = true;
                break;
            }
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (ring.is_zero(a(i, t)))
                    continue;
                if (ring.divides(a(t, t), a(i, t))) {
                    auto q = ring.divexact(a(i, t), a(t, t));
                    detail::combine_rows(ring, a, t, i, ring.one(), ring.zero(), ring.neg(q), ring.one());
                    detail::combine_rows(ring, left, t, i, ring.one(), ring.zero(), ring.neg(q), ring.one());
                    continue;
                }
                auto x = ring.xgcd(a(t, t), a(i, t));
                auto p = ring.divexact(a(t, t), x.g), q = ring.divexact(a(i, t), x.g);
                detail::combine_rows(ring, a, t, i, x.s, x.t, ring.neg(q), p);
                detail::combine_rows(ring, left, t, i, x.s, x.t, ring.neg(q), p);
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (ring.is_zero(a(t, j)))
                    continue;
                if (ring.divides(a(t, t), a(t, j))) {
                    auto q = ring.divexact(a(t, j), a(t, t));
                    detail::combine_cols(ring, a, t, j, ring.one(), ring.zero(), ring.neg(q), ring.one());
                    detail::combine_cols(ring, right, t, j, ring.one(), ring.zero(), ring.neg(q), ring.one());
                    continue;
                }
                auto x = ring.xgcd(a(t, t), a(t, j));
                auto p = ring.divexact(a(t, t), x.g), q = ring.divexact(a(t, j), x.g);
                detail::combine_cols(ring, a, t, j, x.s, x.t, ring.neg(q), p);
                detail::combine_cols(ring, right, t, j, x.s, x.t, ring.neg(q), p);
            }
            for (std::size_t i = t + 1; i < m && clean; ++i)
                if (!ring.is_zero(a(i, t)))
                    clean = false;
            if (!clean)
                continue;
            // divisibility: pivot must divide the trailing block
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!ring.divides(a(t, t), a(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            detail::combine_rows(ring, a, t, bad, ring.one(), ring.one(), ring.zero(), ring.one());
            detail::combine_rows(ring, left, t, bad, ring.one(), ring.one(), ring.zero(), ring.one());
        }
        if (finished) {
            for (std::size_t k = t; k < steps; ++k)
                diag.push_back(ring.zero());
            break;
        }
        auto u = ring.unit_inverse(ring.unit_part(a(t, t)));
        detail::scale_row(ring, a, t, u);
        detail::scale_row(ring, left, t, u);
        diag.push_back(a(t, t));
    }
    return {std::move(diag), std::move(left), std::move(right)};
}

/// Determinant by fraction-free (Bareiss) elimination.
template <BasicPid R>
typename R::element det(const R& ring, Matrix<R> m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return ring.one();
    bool negate = false;
    typename R::element prev = ring.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring.is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && ring.is_zero(m(p, k)))
                ++p;
            if (p == n)
                return ring.zero();
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = ring.divexact(ring.sub(ring.mul(m(i, j), m(k, k)), ring.mul(m(i, k), m(k, j))), prev);
            m(i, k) = ring.zero();
        }
        prev = m(k, k);
    }
    auto d = m(n - 1, n - 1);
    return negate ? ring.neg(d) : d;
}

/// Generators (as HNF rows) of {v : v * m == 0 mod modulus}.
/// The returned lattice always contains modulus * identity.
template <BasicPid R>
Matrix<R> solve_mod(const R& ring, const Matrix<R>& m, const typename R::element& modulus)
{
    if (ring.is_zero(modulus))
        throw std::domain_error("solve_mod: zero modulus");
    const std::size_t r = m.rows(), c = m.cols();
    // [[ m , I_r ], [ modulus*I_c , 0 ]]; rows of the HNF with zero left block span the kernel
    Matrix<R> k(r + c, c + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j)
            k(i, j) = ring.rem(m(i, j), modulus);
        k(i, c + i) = ring.one();
    }
    for (std::size_t j = 0; j < c; ++j)
        k(r + j, j) = modulus;
    Matrix<R> h = hnf(ring, std::move(k));
    Matrix<R> kernel(0, r);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < c && left_zero; ++j)
            left_zero = ring.is_zero(h(i, j));
        if (!left_zero)
            continue;
        auto full = h.row(i);
        kernel.append_row({full.begin() + static_cast<std::ptrdiff_t>(c), full.end()});
    }
    return hnf(ring, std::move(kernel));
}

} // namespace dedekind
