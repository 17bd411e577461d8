// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.

#include "dedekind/dedekind.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace dedekind;

namespace {

// Runtime limits in seconds, and sample sizes, as stated by the criteria.
constexpr double class_number_limit_s = 30.0;
constexpr double function_field_limit_s = 10.0;
constexpr double small_element_limit_s = 60.0;
constexpr double product_formula_limit_s = 10.0;
constexpr long small_element_max_norm = 50;
constexpr long coset_max_norm = 60;
constexpr long multiplicativity_max_norm = 30;
constexpr int field_norm_pairs = 10000;
constexpr int product_formula_samples = 1000;
constexpr long product_formula_max_norm = 1000000;
constexpr int axiom_pairs = 10000;
constexpr std::uint64_t axiom_count_up_to = 1000;

const std::vector<long> quadratic_fixtures{-1, -2, -3, -5, -6, -7, -11, -23, -163};

struct CurveFixture {
    std::uint32_t q;
    const char* f;
    std::vector<long> coeffs; // low to high, for the point-count oracle
};

const std::vector<CurveFixture> curve_fixtures{
    {3, "t^3-t+1", {1, -1, 0, 1}},
    {3, "t^3-t-1", {-1, -1, 0, 1}},
    {5, "t^3+t+1", {1, 1, 0, 1}},
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass)
        ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", s);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << " (" << timing << ") " << o.detail << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

OrderPtr<PolyRing> curve_order(const CurveFixture& c)
{
    PolyRing r(c.q);
    return share(make_hyperelliptic_order(r, parse_element(r, c.f)));
}

std::vector<std::vector<oracle::cpp_int>> to_oracle(const Matrix<IntegerRing>& m)
{
    std::vector<std::vector<oracle::cpp_int>> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i].push_back(m(i, j));
    return r;
}

std::vector<std::vector<oracle::PolyP::P>> to_oracle(const Matrix<PolyRing>& m)
{
    std::vector<std::vector<oracle::PolyP::P>> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i].emplace_back(m(i, j).begin(), m(i, j).end());
    return r;
}

Outcome class_numbers()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream s;
    for (long d : quadratic_fixtures) {
        auto g = class_group(share(make_quadratic_order(d)));
        long expect = oracle::reduced_form_count(oracle::quadratic_discriminant(d));
        s << "h(" << d << ")=" << g.h() << (static_cast<long>(g.h()) == expect ? "" : "!=" + std::to_string(expect)) << " ";
        o.pass = o.pass && static_cast<long>(g.h()) == expect;
    }
    double t = seconds_since(t0);
    o.pass = o.pass && t < class_number_limit_s;
    o.detail = s.str() + "limit " + std::to_string(static_cast<int>(class_number_limit_s)) + "s";
    return o;
}

Outcome function_field_class_numbers()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream s;
    for (const auto& c : curve_fixtures) {
        auto g = class_group(curve_order(c));
        long expect = oracle::curve_point_count(c.q, c.coeffs);
        s << "F" << c.q << " y^2=" << c.f << ": h=" << g.h() << " #E=" << expect << "; ";
        o.pass = o.pass && static_cast<long>(g.h()) == expect;
    }
    o.pass = o.pass && seconds_since(t0) < function_field_limit_s;
    o.detail = s.str();
    return o;
}

template <BasicPid R>
void small_element_fixture(const OrderPtr<R>& order, long& checked, long& bad)
{
    auto bound = effective_bound(*order);
    for (const auto& I : enumerate_ideals(order, Integer(small_element_max_norm))) {
        ++checked;
        auto r = small_element(I, bound);
        bool ok = !order->is_zero(r.element) && member(I, r.element) && order->element_norm(r.element) <= bound.C * ideal_norm(I);
        bad += !ok;
    }
}

Outcome small_element_bound()
{
    auto t0 = std::chrono::steady_clock::now();
    long checked = 0, bad = 0;
    for (long d : quadratic_fixtures)
        small_element_fixture(share(make_quadratic_order(d)), checked, bad);
    for (const auto& c : curve_fixtures)
        small_element_fixture(curve_order(c), checked, bad);
    Outcome o;
    o.pass = bad == 0 && checked > 0 && seconds_since(t0) < small_element_limit_s;
    o.detail = std::to_string(checked) + " ideals, " + std::to_string(bad) + " violations";
    return o;
}

Outcome norm_equals_index()
{
    long checked = 0, bad = 0;
    for (long d : quadratic_fixtures) {
        auto o = make_quadratic_order(d);
        for (long a = -8; a <= 8; ++a)
            for (long b = -8; b <= 8; ++b) {
                std::vector<Integer> x{a, b};
                if (o.is_zero(x) || o.element_norm(x) > coset_max_norm)
                    continue;
                ++checked;
                bad += Integer(oracle::coset_count_integer(to_oracle(o.mult_matrix(x)))) != o.element_norm(x);
            }
    }
    for (const auto& c : curve_fixtures) {
        auto o = curve_order(c);
        const auto& ring = o->ring();
        for (const auto& a : ring.enumerate_small(coset_max_norm))
            for (const auto& b : ring.enumerate_small(coset_max_norm)) {
                std::vector<Poly> x{a, b};
                if (o->is_zero(x) || o->element_norm(x) > coset_max_norm)
                    continue;
                ++checked;
                bad += Integer(oracle::coset_count_poly(c.q, to_oracle(o->mult_matrix(x)))) != o->element_norm(x);
            }
    }
    return {bad == 0 && checked > 0, std::to_string(checked) + " elements, " + std::to_string(bad) + " mismatches"};
}

template <BasicPid R>
void multiplicativity_fixture(const OrderPtr<R>& order, std::uint64_t seed, long& pairs, long& bad)
{
    auto ideals = enumerate_ideals(order, Integer(multiplicativity_max_norm));
    for (const auto& I : ideals)
        for (const auto& J : ideals) {
            ++pairs;
            bad += ideal_norm(mul(I, J)) != ideal_norm(I) * ideal_norm(J);
        }
    const R& ring = order->ring();
    std::mt19937_64 rng(seed);
    for (int i = 0; i < field_norm_pairs; ++i) {
        typename Order<R>::element a(order->rank()), b(order->rank());
        for (std::size_t k = 0; k < order->rank(); ++k) {
            a[k] = ring.sample(rng, 10000);
            b[k] = ring.sample(rng, 10000);
        }
        bad += order->field_norm(order->mul(a, b)) != ring.mul(order->field_norm(a), order->field_norm(b));
    }
}

Outcome norm_multiplicativity()
{
    long pairs = 0, bad = 0;
    std::uint64_t seed = 100;
    for (long d : quadratic_fixtures)
        multiplicativity_fixture(share(make_quadratic_order(d)), seed++, pairs, bad);
    for (const auto& c : curve_fixtures)
        multiplicativity_fixture(curve_order(c), seed++, pairs, bad);
    return {bad == 0, std::to_string(pairs) + " ideal pairs + " + std::to_string(field_norm_pairs) + " element pairs per fixture, " + std::to_string(bad) + " failures"};
}

template <BasicPid R>
long product_formula_failures(const R& ring, std::uint64_t seed)
{
    FractionField<R> K(ring);
    std::mt19937_64 rng(seed);
    long bad = 0;
    for (int i = 0; i < product_formula_samples; ++i) {
        typename R::element a, b;
        do
            a = ring.sample(rng, product_formula_max_norm);
        while (ring.is_zero(a));
        do
            b = ring.sample(rng, product_formula_max_norm);
        while (ring.is_zero(b));
        bad += !product_formula(ring, K.make(a, b)).holds;
    }
    return bad;
}

Outcome product_formula_exact()
{
    auto t0 = std::chrono::steady_clock::now();
    long bad = product_formula_failures(IntegerRing{}, 1) + product_formula_failures(PolyRing(3), 2) + product_formula_failures(PolyRing(5), 3);
    double t = seconds_since(t0);
    return {bad == 0 && t < product_formula_limit_s, "3 x " + std::to_string(product_formula_samples) + " elements, " + std::to_string(bad) + " failures"};
}

Outcome counterexamples()
{
    Zsqrt2 r2;
    bool ok = true;
    std::ostringstream s;
    const Zsqrt2Element u{1, 1};
    for (unsigned r = 1; r <= 10; ++r) {
        auto x = r2.pow(u, r);
        auto y = r2.conjugate(x);
        Integer sum_norm = nonexample_norm(r2, r2.add(x, y));
        ok = ok && sum_norm == 4 * x.a * x.a && nonexample_norm(r2, x) + nonexample_norm(r2, y) == 2;
        if (r == 10)
            s << "Zsqrt2 r=10: N(u^r+u'^r)=" << sum_norm << " vs 2; ";
    }
    ZLocalized z3(3);
    for (unsigned n = 1; n <= 8; ++n) {
        Integer pn = ipow(Integer(3), n);
        auto x = z3.make(1 + pn, 1), y = z3.make(-1 + pn, 1);
        Integer lhs = nonexample_norm(z3, z3.add(x, y));
        ok = ok && lhs == nonexample_norm(z3, z3.make(2, 1)) * pn && lhs == pn && nonexample_norm(z3, x) + nonexample_norm(z3, y) == 2;
        if (n == 8)
            s << "Z_(3) n=8: N(sum)=" << lhs << " vs 2";
    }
    return {ok, s.str()};
}

// Independent count of #{x : N(x) <= m}.
Integer brute_count(const IntegerRing&, long m)
{
    Integer c = 0;
    for (long x = -2 * m - 2; x <= 2 * m + 2; ++x)
        c += std::labs(x) <= m;
    return c;
}

Integer brute_count(const PolyRing& ring, long m)
{
    Integer c = 1; // zero
    long qd = 1;
    for (int d = 0; qd <= m; ++d, qd *= ring.q())
        c += Integer(ring.q() - 1) * ipow(Integer(ring.q()), d);
    return c;
}

Outcome pid_axioms()
{
    bool ok = true;
    std::ostringstream s;
    auto run = [&](const auto& ring, std::uint64_t seed) {
        auto rep = check_axioms(base_pid_fixture(ring, seed), axiom_pairs, axiom_count_up_to);
        bool counts = true;
        for (long m = 1; m <= static_cast<long>(axiom_count_up_to); ++m)
            counts = counts && brute_count(ring, rep.c.template convert_to<long>() * m) >= m;
        bool good = rep.ok() && rep.c == 1 && rep.C0 == 1 && counts && rep.count_checked_up_to == axiom_count_up_to;
        ok = ok && good;
        s << ring.name() << (good ? " ok; " : " FAILED; ");
    };
    run(IntegerRing{}, 1);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u})
        run(PolyRing(q), q);
    return {ok, s.str()};
}

} // namespace

int main()
{
    report(1, "class numbers of imaginary quadratic fields vs reduced forms", class_numbers);
    report(2, "function-field class numbers vs curve point counts", function_field_class_numbers);
    report(3, "small element bound N(alpha) <= C N(I) for ideals of norm <= 50", small_element_bound);
    report(4, "element norm equals coset count of B/alpha B (norm <= 60)", norm_equals_index);
    report(5, "norm multiplicativity for ideals and elements", norm_multiplicativity);
    report(6, "exact product formula over Q, F3(t), F5(t)", product_formula_exact);
    report(7, "counterexample norms in Z[sqrt2] and Z_(3)", counterexamples);
    report(8, "basic-PID axioms with c = C0 = 1", pid_axioms);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
