#pragma once

#include "dedekind/base_pid.hpp"
#include "dedekind/nonexample.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>

namespace dedekind {

/// What check_axioms needs to know about a ring: its norm, addition,
/// a deterministic pair sampler, and optionally a certified lower bound
/// on #{x : N(x) <= b}.
template <class E>
struct AxiomFixture {
    std::string name;
    std::function<Integer(const E&)> norm;
    std::function<E(const E&, const E&)> add;
    std::function<std::pair<E, E>(std::uint64_t)> sample_pair;
    std::function<std::string(const E&)> to_string;
    std::function<std::optional<Integer>(const Integer&)> count_at_most;
    Integer c = 1;
    Integer C0 = 1;
};

struct TriangleWitness {
    std::string x, y;
    Integer norm_sum;   // N(x+y)
    Integer bound;      // C0 * (N(x) + N(y))
};

struct CountWitness {
    Integer m;
    Integer count; // lower bound on #{x : N(x) <= c*m}, found < m
};

struct AxiomReport {
    std::string ring;
    Integer c, C0;
    std::uint64_t trials = 0;
    std::uint64_t count_checked_up_to = 0; // 0: condition 2 not checked
    std::optional<CountWitness> count_violation;
    std::optional<TriangleWitness> triangle_violation;
    std::uint64_t triangle_violations = 0;

    bool ok() const { return !count_violation && !triangle_violation; }
};

/// Empirical check of the small-norm count and the quasi-triangle
/// inequality. Finite quotients are a property of the fixture itself.
template <class E>
AxiomReport check_axioms(const AxiomFixture<E>& fx, std::uint64_t trials, std::uint64_t count_up_to = 1000)
{
    AxiomReport rep;
    rep.ring = fx.name;
    rep.c = fx.c;
    rep.C0 = fx.C0;
    rep.trials = trials;
    if (fx.count_at_most) {
        rep.count_checked_up_to = count_up_to;
        for (std::uint64_t m = 1; m <= count_up_to; ++m) {
            auto count = fx.count_at_most(fx.c * m);
            if (!count) {
                rep.count_checked_up_to = m - 1;
                break;
            }
            if (*count < m) {
                rep.count_violation = CountWitness{m, *count};
                break;
            }
        }
    }
    for (std::uint64_t i = 0; i < trials; ++i) {
        auto [x, y] = fx.sample_pair(i);
        Integer lhs = fx.norm(fx.add(x, y));
        Integer rhs = fx.C0 * (fx.norm(x) + fx.norm(y));
        if (lhs > rhs) {
            ++rep.triangle_violations;
            if (!rep.triangle_violation)
                rep.triangle_violation = TriangleWitness{fx.to_string(x), fx.to_string(y), lhs, rhs};
        }
    }
    return rep;
}

/// Uniform pairs with norm <= sample_bound, seeded.
template <BasicPid R>
AxiomFixture<typename R::element> base_pid_fixture(const R& ring, std::uint64_t seed, Integer sample_bound = 1000000)
{
    using E = typename R::element;
    AxiomFixture<E> fx;
    fx.name = ring.name();
    fx.norm = [ring](const E& x) { return ring.norm(x); };
    fx.add = [ring](const E& x, const E& y) { return ring.add(x, y); };
    fx.to_string = [ring](const E& x) { return ring.to_string(x); };
    fx.sample_pair = [ring, seed, sample_bound](std::uint64_t i) {
        std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
        E x = ring.sample(rng, sample_bound);
        E y = ring.sample(rng, sample_bound);
        return std::pair<E, E>{x, y};
    };
    fx.count_at_most = [ring](const Integer& b) -> std::optional<Integer> {
        return Integer(ring.enumerate_small(b).size());
    };
    fx.c = ring.small_norm_constant();
    fx.C0 = ring.quasi_triangle_constant();
    return fx;
}

/// Pairs (u^r, conj(u)^r) for r = 1, 2, ... with u = 1 + sqrt 2.
inline AxiomFixture<Zsqrt2Element> zsqrt2_unit_fixture()
{
    Zsqrt2 ring;
    AxiomFixture<Zsqrt2Element> fx;
    fx.name = ring.name();
    fx.norm = [ring](const Zsqrt2Element& x) { return ring.norm(x); };
    fx.add = [ring](const Zsqrt2Element& x, const Zsqrt2Element& y) { return ring.add(x, y); };
    fx.to_string = [ring](const Zsqrt2Element& x) { return ring.to_string(x); };
    fx.sample_pair = [ring](std::uint64_t i) {
        auto ur = ring.pow(ring.unit(), static_cast<unsigned>(i + 1));
        return std::pair{ur, ring.conjugate(ur)};
    };
    // +-u^r for |r| <= m all have norm 1
    fx.count_at_most = [](const Integer& b) -> std::optional<Integer> { return 4 * b + 2; };
    return fx;
}

/// Pairs (1 + p^n, -1 + p^n) for n = 1, 2, ...
inline AxiomFixture<ZlocElement> zloc_unit_fixture(const ZLocalized& ring)
{
    AxiomFixture<ZlocElement> fx;
    fx.name = ring.name();
    fx.norm = [ring](const ZlocElement& x) { return ring.norm(x); };
    fx.add = [ring](const ZlocElement& x, const ZlocElement& y) { return ring.add(x, y); };
    fx.to_string = [ring](const ZlocElement& x) { return ring.to_string(x); };
    fx.sample_pair = [ring](std::uint64_t i) {
        Integer pn = ipow(ring.prime(), static_cast<unsigned long>(i + 1));
        return std::pair{ring.from_integer(1 + pn), ring.from_integer(-1 + pn)};
    };
    // the units 1/k, k prime to p, k <= 2b+1
    fx.count_at_most = [ring](const Integer& b) -> std::optional<Integer> {
        return 2 * b + 1 - (2 * b + 1) / ring.prime();
    };
    return fx;
}

using FixtureRing = std::variant<IntegerRing, PolyRing, Zsqrt2, ZLocalized>;

/// Parses "Z", "Fq[t] q=<p^k>", "Zsqrt2", "Zloc p=<prime>".
inline FixtureRing parse_fixture_ring(std::string_view text)
{
    std::string s = detail::trim_copy(text);
    if (s == "Zsqrt2")
        return Zsqrt2{};
    if (s.rfind("Zloc", 0) == 0) {
        auto eq = s.find("p=");
        if (eq == std::string::npos)
            throw parse_error("Zloc requires p=<prime>");
        Integer p;
        try {
            p = parse_integer(detail::trim_copy(s.substr(eq + 2)));
        } catch (const std::invalid_argument&) {
            throw parse_error("bad prime in \"" + s + "\"");
        }
        return ZLocalized(p);
    }
    return std::visit([](auto r) -> FixtureRing { return r; }, parse_ring(s));
}

/// Runs the default fixture for a parsed ring: uniform samples for the
/// basic PIDs, the unit-pair samplers for the non-examples.
inline AxiomReport check_fixture(const FixtureRing& ring, std::uint64_t trials, std::uint64_t seed)
{
    return std::visit(
        [&](const auto& r) -> AxiomReport {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Zsqrt2>)
                return check_axioms(zsqrt2_unit_fixture(), trials);
            else if constexpr (std::is_same_v<T, ZLocalized>)
                return check_axioms(zloc_unit_fixture(r), trials);
            else
                return check_axioms(base_pid_fixture(r, seed), trials);
        },
        ring);
}

} // namespace dedekind
