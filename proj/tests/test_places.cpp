#include "dedekind/places.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dedekind;

namespace {

template <class R>
Fraction<R> frac(const R& ring, const char* text)
{
    return parse_fraction(ring, text);
}

template <class R>
Fraction<R> random_nonzero(const R& ring, std::mt19937_64& rng, const Integer& bound)
{
    FractionField<R> K(ring);
    typename R::element a, b;
    do
        a = ring.sample(rng, bound);
    while (ring.is_zero(a));
    do
        b = ring.sample(rng, bound);
    while (ring.is_zero(b));
    return K.make(a, b);
}

} // namespace

TEST(Valuation, Examples)
{
    IntegerRing z;
    EXPECT_EQ(valuation(z, frac(z, "12"), finite_place(z, Integer(2))), 2);
    EXPECT_EQ(valuation(z, frac(z, "1/3"), finite_place(z, Integer(3))), -1);
    PolyRing f3(3);
    EXPECT_EQ(valuation(f3, frac(f3, "t^2*(t+1)"), finite_place(f3, parse_element(f3, "t"))), 2);
    EXPECT_THROW(valuation(z, frac(z, "0"), finite_place(z, Integer(2))), domain_rejection);
    EXPECT_THROW(valuation(z, frac(z, "5"), infinite_place(z)), domain_rejection);
}

TEST(Place, RequiresCanonicalPrime)
{
    IntegerRing z;
    EXPECT_THROW(finite_place(z, Integer(4)), domain_rejection);
    EXPECT_THROW(finite_place(z, Integer(-3)), domain_rejection);
    EXPECT_THROW(finite_place(z, Integer(1)), domain_rejection);
    PolyRing f3(3);
    EXPECT_THROW(finite_place(f3, parse_element(f3, "t^2-1")), domain_rejection);
    EXPECT_THROW(finite_place(f3, parse_element(f3, "2*t")), domain_rejection);
    EXPECT_EQ(finite_place(f3, parse_element(f3, "t^2+1")).residue_size, 9);
}

TEST(AbsValue, Examples)
{
    IntegerRing z;
    auto a = abs_value(z, frac(z, "12"), finite_place(z, Integer(2)));
    EXPECT_EQ(a.exponent, -2);
    EXPECT_EQ(a.value, Rational(1, 4));
    EXPECT_EQ(abs_value(z, frac(z, "12"), infinite_place(z)).value, Rational(12));
    for (int p : {2, 3, 5, 7})
        EXPECT_EQ(abs_value(z, frac(z, "-1"), finite_place(z, Integer(p))).value, Rational(1));
    EXPECT_THROW(abs_value(z, frac(z, "0"), infinite_place(z)), domain_rejection);
}

TEST(Support, Examples)
{
    IntegerRing z;
    auto s = support(z, frac(z, "12"));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].prime, 2);
    EXPECT_EQ(s[1].prime, 3);
    EXPECT_TRUE(support(z, frac(z, "1")).empty());
    PolyRing f3(3);
    auto t = support(f3, frac(f3, "t^2*(t+1)"));
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].prime, parse_element(f3, "t"));
    EXPECT_EQ(t[1].prime, parse_element(f3, "t+1"));
    EXPECT_THROW(support(z, frac(z, "0")), domain_rejection);
}

TEST(ProductFormula, Examples)
{
    IntegerRing z;
    auto r = product_formula(z, frac(z, "12"));
    EXPECT_EQ(r.product, 1);
    EXPECT_TRUE(r.holds);
    ASSERT_EQ(r.factors.size(), 3u);
    EXPECT_EQ(r.factors[0].value, Rational(1, 4));
    EXPECT_EQ(r.factors[1].value, Rational(1, 3));
    EXPECT_EQ(r.factors[2].value, Rational(12));
    PolyRing f3(3);
    auto p = product_formula(f3, frac(f3, "t^2*(t+1)"));
    EXPECT_TRUE(p.holds);
    EXPECT_EQ(p.factors[0].value, Rational(1, 9));
    EXPECT_EQ(p.factors[1].value, Rational(1, 3));
    EXPECT_EQ(p.factors[2].value, Rational(27));
    EXPECT_TRUE(product_formula(z, frac(z, "1")).holds);
}

TEST(ProductFormula, RandomElements)
{
    std::mt19937_64 rng(2024);
    IntegerRing z;
    for (int i = 0; i < 300; ++i)
        EXPECT_TRUE(product_formula(z, random_nonzero(z, rng, Integer(1000000))).holds);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        PolyRing f(q);
        for (int i = 0; i < 100; ++i)
            EXPECT_TRUE(product_formula(f, random_nonzero(f, rng, Integer(1000000))).holds) << q;
    }
}

TEST(Places, MultiplicativeAndUltrametric)
{
    std::mt19937_64 rng(77);
    IntegerRing z;
    FractionField<IntegerRing> Q(z);
    for (int i = 0; i < 200; ++i) {
        auto x = random_nonzero(z, rng, Integer(5000));
        auto y = random_nonzero(z, rng, Integer(5000));
        for (int p : {2, 3, 5, 7, 11}) {
            auto v = finite_place(z, Integer(p));
            EXPECT_EQ(abs_value(z, Q.mul(x, y), v).exponent, abs_value(z, x, v).exponent + abs_value(z, y, v).exponent);
            auto s = Q.add(x, y);
            if (!Q.is_zero(s))
                EXPECT_LE(abs_value(z, s, v).value, std::max(abs_value(z, x, v).value, abs_value(z, y, v).value));
        }
        auto inf = infinite_place(z);
        EXPECT_EQ(abs_value(z, Q.mul(x, y), inf).value, abs_value(z, x, inf).value * abs_value(z, y, inf).value);
        auto s = Q.add(x, y);
        Rational ns = Q.is_zero(s) ? Rational(0) : abs_value(z, s, inf).value;
        EXPECT_LE(ns, abs_value(z, x, inf).value + abs_value(z, y, inf).value);
    }
    PolyRing f5(5);
    FractionField<PolyRing> K(f5);
    for (int i = 0; i < 200; ++i) {
        auto x = random_nonzero(f5, rng, Integer(3125));
        auto y = random_nonzero(f5, rng, Integer(3125));
        auto s = K.add(x, y);
        if (K.is_zero(s))
            continue;
        auto inf = infinite_place(f5);
        EXPECT_LE(abs_value(f5, s, inf).value, abs_value(f5, x, inf).value + abs_value(f5, y, inf).value);
        for (auto& v : support(f5, K.mul(x, y)))
            EXPECT_EQ(abs_value(f5, K.mul(x, y), v).exponent, abs_value(f5, x, v).exponent + abs_value(f5, y, v).exponent);
    }
}

TEST(Places, InequivalenceWitness)
{
    IntegerRing z;
    for (auto& p : z.primes_up_to(100)) {
        auto x = Fraction<IntegerRing>{p, 1};
        EXPECT_LT(abs_value(z, x, finite_place(z, p)).value, 1);
        EXPECT_GT(abs_value(z, x, infinite_place(z)).value, 1);
    }
    PolyRing f3(3);
    for (auto& p : f3.primes_up_to(27)) {
        auto x = Fraction<PolyRing>{p, f3.one()};
        EXPECT_LT(abs_value(f3, x, finite_place(f3, p)).value, 1);
        EXPECT_GT(abs_value(f3, x, infinite_place(f3)).value, 1);
    }
}

TEST(Factor, IntegersIncludingLargeCofactors)
{
    auto f = factor_integer(Integer("1000000007") * Integer("998244353") * 48);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[0], (std::pair<Integer, unsigned>{2, 4}));
    EXPECT_EQ(f[1], (std::pair<Integer, unsigned>{3, 1}));
    EXPECT_EQ(f[2].first, Integer("998244353"));
    EXPECT_EQ(f[3].first, Integer("1000000007"));
    EXPECT_THROW(factor_integer(0), domain_rejection);
    EXPECT_THROW(factor_integer(Integer("170141183460469231731687303715884105727") * Integer("170141183460469231731687303715884105727")), resource_limit);
}

TEST(Factor, PolynomialsRecombine)
{
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {2u, 3u, 4u, 7u, 8u, 9u}) {
        PolyRing f(q);
        for (int i = 0; i < 100; ++i) {
            auto a = f.sample(rng, ipow(Integer(q), 1 + i % 9));
            if (f.is_zero(a))
                continue;
            Poly prod = f.unit_part(a);
            for (auto& [p, e] : factor_poly(f, a)) {
                EXPECT_TRUE(f.is_irreducible(p));
                EXPECT_EQ(PolyRing::leading(p), 1u);
                for (unsigned k = 0; k < e; ++k)
                    prod = f.mul(prod, p);
            }
            EXPECT_EQ(prod, a);
        }
    }
    PolyRing f3(3);
    auto r = factor_poly(f3, parse_element(f3, "(t^2+1)^3*t^9*(t+2)"));
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0], (std::pair<Poly, unsigned>{Poly{0, 1}, 9}));
    EXPECT_EQ(r[1], (std::pair<Poly, unsigned>{Poly{2, 1}, 1}));
    EXPECT_EQ(r[2], (std::pair<Poly, unsigned>{Poly{1, 0, 1}, 3}));
}
