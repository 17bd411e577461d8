#include "dedekind/axioms.hpp"
#include "dedekind/base_pid.hpp"
#include "dedekind/nonexample.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace dedekind;

TEST(IntegerRing, NormIsAbsoluteValue)
{
    IntegerRing z;
    EXPECT_EQ(z.norm(-6), 6);
    EXPECT_EQ(z.norm(0), 0);
    EXPECT_EQ(z.norm(Integer("123456789012345678901234567890")), Integer("123456789012345678901234567890"));
}

TEST(IntegerRing, EnumerateSmallOrderAndSize)
{
    IntegerRing z;
    auto one = z.enumerate_small(1);
    ASSERT_EQ(one.size(), 3u);
    EXPECT_EQ(one[0], 0);
    EXPECT_EQ(one[1], 1);
    EXPECT_EQ(one[2], -1);
    for (int m : {1, 2, 7, 100})
        EXPECT_EQ(z.enumerate_small(m).size(), static_cast<std::size_t>(2 * m + 1));
}

TEST(IntegerRing, DivmodAndGcd)
{
    IntegerRing z;
    for (int a = -20; a <= 20; ++a)
        for (int b : {-7, -3, 1, 4, 9}) {
            auto [q, r] = z.divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_GE(r, 0);
            EXPECT_LT(r, std::abs(b));
        }
    auto x = z.xgcd(240, 46);
    EXPECT_EQ(boost::multiprecision::abs(x.g), 2);
    EXPECT_EQ(x.s * 240 + x.t * 46, x.g);
}

TEST(FiniteField, InversesAndTables)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u}) {
        FiniteField f(q);
        for (std::uint32_t a = 1; a < q; ++a)
            EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << "q=" << q << " a=" << a;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                EXPECT_EQ(f.sub(f.add(a, b), b), a);
                EXPECT_EQ(f.mul(a, b), f.mul(b, a));
            }
    }
}

TEST(FiniteField, RejectsNonPrimePowers)
{
    EXPECT_THROW(FiniteField(6), domain_rejection);
    EXPECT_THROW(FiniteField(12), domain_rejection);
}

TEST(PolyRing, NormIsQToTheDegree)
{
    PolyRing f3(3);
    EXPECT_EQ(f3.norm(parse_element(f3, "t^2+1")), 9);
    EXPECT_EQ(f3.norm(f3.zero()), 0);
    EXPECT_EQ(f3.norm(f3.one()), 1);
    EXPECT_TRUE(f3.zero().empty());
}

TEST(PolyRing, EnumerateSmallCount)
{
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        PolyRing f(q);
        for (long m : {1L, 2L, 5L, 26L, 27L, 100L}) {
            long d = 0;
            Integer p = q;
            while (p <= m) {
                p *= q;
                ++d;
            }
            // q^(floor(log_q m) + 1)
            auto v = f.enumerate_small(m);
            EXPECT_EQ(Integer(v.size()), ipow(Integer(q), d + 1)) << "q=" << q << " m=" << m;
            for (const auto& x : v)
                EXPECT_LE(f.norm(x), m);
        }
    }
}

TEST(PolyRing, EnumerationIsGradedThenLexicographic)
{
    PolyRing f3(3);
    auto v = f3.enumerate_small(9);
    ASSERT_EQ(v.size(), 27u);
    EXPECT_TRUE(v[0].empty());
    for (std::size_t i = 1; i < v.size(); ++i)
        EXPECT_LT(f3.compare(v[i - 1], v[i]), 0);
}

TEST(PolyRing, DivisionAndGcd)
{
    PolyRing f5(5);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto a = f5.sample(rng, 5 * 5 * 5 * 5 * 5);
        auto b = f5.sample(rng, 125);
        if (f5.is_zero(b))
            continue;
        auto [q, r] = f5.divmod(a, b);
        EXPECT_EQ(f5.add(f5.mul(q, b), r), a);
        EXPECT_LT(PolyRing::degree(r), PolyRing::degree(b));
        auto x = f5.xgcd(a, b);
        EXPECT_EQ(f5.add(f5.mul(x.s, a), f5.mul(x.t, b)), x.g);
    }
}

TEST(PolyRing, IrreducibleCountsMatchNecklaceFormula)
{
    PolyRing f2(2), f3(3);
    auto count_deg = [](const PolyRing& r, int d) {
        long n = 0;
        for (auto& p : r.primes_up_to(ipow(Integer(r.q()), d)))
            n += PolyRing::degree(p) == d;
        return n;
    };
    EXPECT_EQ(count_deg(f2, 1), 2);
    EXPECT_EQ(count_deg(f2, 4), 3);
    EXPECT_EQ(count_deg(f3, 2), 3);
    EXPECT_EQ(count_deg(f3, 3), 8);
}

TEST(Parser, IntegerAndPolynomialExpressions)
{
    IntegerRing z;
    EXPECT_EQ(parse_element(z, "2^10 - 3*(4+1)"), 1009);
    auto fr = parse_fraction(z, "-6/4");
    EXPECT_EQ(fr.num, -3);
    EXPECT_EQ(fr.den, 2);
    PolyRing f3(3);
    EXPECT_EQ(parse_element(f3, "t^3-t+1"), (Poly{1, 2, 0, 1}));
    EXPECT_EQ(parse_element(f3, "(t+1)^2"), (Poly{1, 2, 1}));
    auto x = parse_fraction(f3, "t^2*(t+1)/(2*t)");
    EXPECT_EQ(x.num, (Poly{0, 2, 2}));
    EXPECT_EQ(x.den, (Poly{1}));
    EXPECT_THROW(parse_element(z, "1/2"), parse_error);
    EXPECT_THROW(parse_element(z, "2+"), parse_error);
    EXPECT_THROW(parse_fraction(z, "1/0"), domain_rejection);
}

TEST(Parser, Rings)
{
    EXPECT_EQ(ring_name(parse_ring("Z")), "Z");
    EXPECT_EQ(ring_name(parse_ring("Fq[t] q=9")), "Fq[t] q=9");
    EXPECT_EQ(ring_name(parse_ring("Fq[t] q=3^2")), "Fq[t] q=9");
    EXPECT_EQ(ring_name(parse_ring("F5[t]")), "Fq[t] q=5");
    EXPECT_THROW(parse_ring("R"), parse_error);
    EXPECT_THROW(parse_ring("Fq[t] q=6"), domain_rejection);
}

TEST(Axioms, BuiltInRingsHaveUnitConstants)
{
    for (const char* spec : {"Z", "Fq[t] q=2", "Fq[t] q=3", "Fq[t] q=4", "Fq[t] q=5", "Fq[t] q=9"}) {
        auto rep = check_fixture(parse_fixture_ring(spec), 2000, 11);
        EXPECT_TRUE(rep.ok()) << spec;
        EXPECT_EQ(rep.c, 1);
        EXPECT_EQ(rep.C0, 1);
        EXPECT_EQ(rep.count_checked_up_to, 1000u);
    }
}

TEST(Axioms, Zsqrt2FailsTriangle)
{
    auto rep = check_fixture(parse_fixture_ring("Zsqrt2"), 10, 1);
    EXPECT_FALSE(rep.ok());
    ASSERT_TRUE(rep.triangle_violation.has_value());
    EXPECT_GT(rep.triangle_violation->norm_sum, rep.triangle_violation->bound);
}

TEST(Axioms, LocalizationFailsTriangle)
{
    auto rep = check_fixture(parse_fixture_ring("Zloc p=3"), 8, 1);
    EXPECT_FALSE(rep.ok());
    EXPECT_GT(rep.triangle_violations, 0u);
}

TEST(NonExample, Zsqrt2UnitPowers)
{
    Zsqrt2 r;
    const Zsqrt2Element u{1, 1};
    for (unsigned k = 1; k <= 10; ++k) {
        auto x = r.pow(u, k);
        auto y = r.conjugate(x);
        EXPECT_EQ(r.norm(x), 1);
        EXPECT_EQ(r.norm(y), 1);
        auto s = r.add(x, y);
        EXPECT_EQ(s.b, 0);
        EXPECT_EQ(r.norm(s), 4 * x.a * x.a);
    }
}

TEST(NonExample, Zsqrt2NormIsMultiplicative)
{
    Zsqrt2 r;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d = -3; d <= 3; ++d) {
                    Zsqrt2Element x{a, b}, y{c, d};
                    EXPECT_EQ(r.norm(r.mul(x, y)), r.norm(x) * r.norm(y));
                }
}

TEST(NonExample, LocalizationNorms)
{
    ZLocalized r(3);
    for (unsigned n = 1; n <= 8; ++n) {
        Integer pn = ipow(Integer(3), n);
        auto x = r.make(1 + pn, 1);
        auto y = r.make(-1 + pn, 1);
        EXPECT_EQ(r.norm(x), 1);
        EXPECT_EQ(r.norm(y), 1);
        EXPECT_EQ(r.norm(r.add(x, y)), pn);
    }
    EXPECT_THROW(r.make(1, 3), domain_rejection);
    EXPECT_THROW(ZLocalized(9), domain_rejection);
}
