#pragma once

#include "dedekind/axioms.hpp"
#include "dedekind/class_group.hpp"
#include "dedekind/json_io.hpp"
#include "dedekind/places.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace dedekind::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    rejected = 2,
    limit = 3,
    internal = 4,
};

struct Options {
    std::string format = "json";
    std::string order_spec;
    std::string d, q, f;
    std::string ideal_a, ideal_b;
    std::string max_norm = "30";
    bool reversed = false;
    unsigned threads = 0;
    std::string field = "Q";
    std::string element;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    std::string sample_norm = "1000000";
    std::string ring = "Z";
    std::string matrix;
};

namespace detail {

inline void emit(std::ostream& out, const Options& opt, json j, const std::string& text)
{
    if (opt.format == "text") {
        out << text;
        if (!text.empty() && text.back() != '\n')
            out << '\n';
        return;
    }
    j["schema_version"] = schema_version;
    out << j.dump(2) << '\n';
}

inline Integer parse_bound(const std::string& s, const char* what)
{
    try {
        return parse_integer(dedekind::detail::trim_copy(s));
    } catch (const std::invalid_argument&) {
        throw parse_error(std::string("bad ") + what + " \"" + s + "\"");
    }
}

template <class F>
auto with_order(const std::string& spec, F&& f)
{
    if (spec.empty())
        throw parse_error("--order is required");
    return std::visit([&](const auto& order) { return f(order); }, parse_order_spec(spec));
}

inline int cmd_order(const Options& opt, bool quadratic, std::ostream& out)
{
    AnyOrder order = quadratic
        ? AnyOrder(share(make_quadratic_order(parse_bound(opt.d, "discriminant parameter"))))
        : parse_order_spec("hyp:q=" + opt.q + ",f=" + opt.f);
    std::visit([&](const auto& o) {
        std::string text = o->label() + " over " + o->ring().name() + ", x2^2 = " + o->element_to_string(o->mul(o->basis(1), o->basis(1))) + "\n";
        emit(out, opt, order_to_json(*o), text);
    }, order);
    return ok;
}

inline int cmd_normform(const Options& opt, std::ostream& out)
{
    with_order(opt.order_spec, [&](const auto& o) {
        const auto& ring = o->ring();
        auto form = norm_form(*o);
        json terms = json::array();
        for (const auto& t : form.terms)
            terms.push_back(json{{"coefficient", element_to_json(ring, t.coefficient)}, {"exponents", t.exponents}});
        auto C1 = norm_form_bound(*o, form);
        std::string s = norm_form_to_string(ring, form);
        json j{{"order", o->label()}, {"degree", form.degree}, {"terms", terms}, {"form", s}, {"C1", integer_to_json(C1)}};
        emit(out, opt, j, "N = " + s + "\nC1 = " + C1.str() + "\n");
        return 0;
    });
    return ok;
}

template <BasicPid R>
json ideal_report(const Ideal<R>& ideal)
{
    json j = ideal_to_json(ideal);
    if (ideal.is_integral())
        j["norm"] = integer_to_json(ideal_norm(ideal));
    return j;
}

inline int cmd_ideal(const Options& opt, const std::string& op, std::ostream& out)
{
    with_order(opt.order_spec, [&](const auto& o) {
        using R = std::decay_t<decltype(o->ring())>;
        if (op == "list") {
            Integer bound = parse_bound(opt.max_norm, "--max-norm");
            if (bound < 1)
                throw domain_rejection("--max-norm must be at least 1");
            auto ideals = enumerate_ideals(o, bound);
            json list = json::array();
            std::string text;
            for (const auto& I : ideals) {
                list.push_back(ideal_report(I));
                text += ideal_norm(I).str() + "  " + ideal_to_string(I) + "\n";
            }
            emit(out, opt, json{{"order", o->label()}, {"max_norm", integer_to_json(bound)}, {"count", ideals.size()}, {"ideals", list}}, text);
            return 0;
        }
        if (opt.ideal_a.empty())
            throw parse_error("--a is required");
        Ideal<R> a = parse_ideal(o, opt.ideal_a);
        std::optional<Ideal<R>> result;
        if (op == "mul" || op == "add") {
            if (opt.ideal_b.empty())
                throw parse_error("--b is required");
            Ideal<R> b = parse_ideal(o, opt.ideal_b);
            result = op == "mul" ? mul(a, b) : add(a, b);
        } else if (op == "inv") {
            result = invert(a);
        } else {
            result = a;
        }
        std::string text = ideal_to_string(*result) + "\n";
        if (result->is_integral())
            text += "norm " + ideal_norm(*result).str() + "\n";
        emit(out, opt, ideal_report(*result), text);
        return 0;
    });
    return ok;
}

inline int cmd_smallelem(const Options& opt, std::ostream& out)
{
    with_order(opt.order_spec, [&](const auto& o) {
        if (opt.ideal_a.empty())
            throw parse_error("--ideal is required");
        auto I = parse_ideal(o, opt.ideal_a);
        auto bound = effective_bound(*o);
        auto r = small_element(I, bound);
        json j{{"order", o->label()},
               {"ideal", ideal_to_json(I)},
               {"element", vector_to_json(o->ring(), r.element)},
               {"element_text", o->element_to_string(r.element)},
               {"norm", integer_to_json(r.norm)},
               {"ideal_norm", integer_to_json(ideal_norm(I))},
               {"m", integer_to_json(r.m)},
               {"C", integer_to_json(bound.C)},
               {"bound", integer_to_json(r.bound)}};
        emit(out, opt, j, "alpha = " + o->element_to_string(r.element) + "\nN(alpha) = " + r.norm.str() + " <= " + r.bound.str() + "\n");
        return 0;
    });
    return ok;
}

inline int cmd_classgroup(const Options& opt, std::ostream& out)
{
    with_order(opt.order_spec, [&](const auto& o) {
        ClassGroupOptions cgo;
        cgo.threads = opt.threads;
        cgo.reversed = opt.reversed;
        auto g = class_group(o, cgo);
        json classes = json::array();
        std::string text = o->label() + "\nC = " + g.bound.C.str() + " (C1 = " + g.bound.C1.str() + ")\nideals enumerated: " + std::to_string(g.ideal_count) + "\nh = " + std::to_string(g.h()) + "\ninvariants:";
        json inv = json::array();
        for (const auto& d : g.invariants) {
            inv.push_back(integer_to_json(d));
            text += " " + d.str();
        }
        text += "\n";
        for (std::size_t k = 0; k < g.h(); ++k) {
            const auto& rep = g.representatives[k];
            classes.push_back(json{{"index", k},
                                   {"norm", integer_to_json(ideal_norm(rep))},
                                   {"basis", rows_to_json(o->ring(), rep.basis())},
                                   {"ideals_of_norm_at_most_C", g.class_sizes[k]}});
            text += "  [" + std::to_string(k) + "] norm " + ideal_norm(rep).str() + "  " + ideal_to_string(rep) + "\n";
        }
        json j{{"order", o->label()},
               {"h", g.h()},
               {"invariants", inv},
               {"C", integer_to_json(g.bound.C)},
               {"C1", integer_to_json(g.bound.C1)},
               {"ideal_count", g.ideal_count},
               {"classes", classes},
               {"cayley", g.cayley}};
        emit(out, opt, j, text);
        return 0;
    });
    return ok;
}

template <BasicPid R>
json product_report(const R& ring, const Fraction<R>& x, std::string& text)
{
    auto pf = product_formula(ring, x);
    json places = json::array();
    FractionField<R> K(ring);
    text += "x = " + K.to_string(x) + "\n";
    for (const auto& a : pf.factors) {
        json p{{"place", place_to_string(ring, a.place)}, {"value", a.value.str()}};
        if (!a.place.infinite) {
            p["residue_size"] = integer_to_json(a.place.residue_size);
            p["exponent"] = a.exponent;
        }
        places.push_back(p);
        text += "  |x|_" + place_to_string(ring, a.place) + " = " + a.value.str() + "\n";
    }
    text += "  product = " + pf.product.str() + (pf.holds ? " (holds)\n" : " (FAILS)\n");
    return json{{"element", K.to_string(x)}, {"places", places}, {"product", pf.product.str()}, {"holds", pf.holds}};
}

inline AnyRing parse_field(const Options& opt)
{
    std::string f = dedekind::detail::trim_copy(opt.field);
    if (f == "Q" || f == "QQ")
        return IntegerRing{};
    if (f == "Fq(t)") {
        if (opt.q.empty())
            throw parse_error("--field Fq(t) needs --q");
        return PolyRing(dedekind::detail::parse_prime_power(opt.q));
    }
    if (f.size() > 4 && f[0] == 'F' && f.substr(f.size() - 3) == "(t)")
        return PolyRing(dedekind::detail::parse_prime_power(f.substr(1, f.size() - 4)));
    throw parse_error("unknown field \"" + f + "\" (expected Q or Fq(t))");
}

inline int cmd_places(const Options& opt, std::ostream& out)
{
    bool holds = true;
    std::visit([&](const auto& ring) {
        using R = std::decay_t<decltype(ring)>;
        FractionField<R> K(ring);
        json j{{"field", opt.field == "Fq(t)" ? "F" + opt.q + "(t)" : opt.field}};
        std::string text;
        if (!opt.element.empty()) {
            auto x = parse_fraction(ring, opt.element);
            auto r = product_report(ring, x, text);
            holds = holds && r["holds"].template get<bool>();
            j["verify"] = r;
        }
        if (opt.trials > 0) {
            Integer bound = parse_bound(opt.sample_norm, "--max-norm");
            if (bound < 1)
                throw domain_rejection("--max-norm must be at least 1");
            std::mt19937_64 rng(opt.seed);
            std::uint64_t passed = 0;
            json failures = json::array();
            for (std::uint64_t t = 0; t < opt.trials; ++t) {
                typename R::element num, den;
                do
                    num = ring.sample(rng, bound);
                while (ring.is_zero(num));
                do
                    den = ring.sample(rng, bound);
                while (ring.is_zero(den));
                auto x = K.make(num, den);
                auto pf = product_formula(ring, x);
                if (pf.holds)
                    ++passed;
                else if (failures.size() < 10)
                    failures.push_back(K.to_string(x));
            }
            holds = holds && passed == opt.trials;
            j["random"] = json{{"trials", opt.trials}, {"seed", opt.seed}, {"max_norm", integer_to_json(bound)}, {"passed", passed}, {"failures", failures}};
            text += "random: " + std::to_string(passed) + "/" + std::to_string(opt.trials) + " exact products equal 1\n";
        }
        if (opt.element.empty() && opt.trials == 0)
            throw parse_error("places verify needs --element or --trials");
        emit(out, opt, j, text);
    }, parse_field(opt));
    return holds ? ok : internal;
}

inline int cmd_axioms(const Options& opt, std::ostream& out)
{
    auto rep = check_fixture(parse_fixture_ring(opt.ring), opt.trials ? opt.trials : 10000, opt.seed);
    json j{{"ring", rep.ring},
           {"c", integer_to_json(rep.c)},
           {"C0", integer_to_json(rep.C0)},
           {"trials", rep.trials},
           {"count_checked_up_to", rep.count_checked_up_to},
           {"triangle_violations", rep.triangle_violations},
           {"ok", rep.ok()}};
    std::string text = rep.ring + ": " + (rep.ok() ? "axioms hold" : "axioms VIOLATED") + " (" + std::to_string(rep.trials) + " pairs, counts to " + std::to_string(rep.count_checked_up_to) + ")\n";
    if (rep.count_violation) {
        j["count_violation"] = json{{"m", integer_to_json(rep.count_violation->m)}, {"count", integer_to_json(rep.count_violation->count)}};
        text += "  count: m = " + rep.count_violation->m.str() + ", only " + rep.count_violation->count.str() + " elements\n";
    }
    if (rep.triangle_violation) {
        const auto& w = *rep.triangle_violation;
        j["triangle_violation"] = json{{"x", w.x}, {"y", w.y}, {"norm_sum", integer_to_json(w.norm_sum)}, {"bound", integer_to_json(w.bound)}};
        text += "  triangle: N(" + w.x + " + " + w.y + ") = " + w.norm_sum.str() + " > " + w.bound.str() + "\n";
    }
    emit(out, opt, j, text);
    return ok;
}

inline int cmd_normal_form(const Options& opt, bool smith, std::ostream& out)
{
    if (opt.matrix.empty())
        throw parse_error("--matrix is required");
    json input = read_json_argument(opt.matrix);
    std::string ring_text = opt.ring;
    json rows = input;
    if (input.is_object()) {
        if (input.contains("ring"))
            ring_text = input.at("ring").get<std::string>();
        rows = input.at("rows");
    }
    std::visit([&](const auto& ring) {
        auto m = rows_from_json(ring, rows);
        auto text_rows = [&](const auto& mat) {
            std::string s;
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                s += "[";
                for (std::size_t k = 0; k < mat.cols(); ++k)
                    s += (k ? ", " : "") + ring.to_string(mat(i, k));
                s += "]\n";
            }
            return s;
        };
        if (smith) {
            auto r = snf(ring, m);
            std::string text = "diagonal:";
            for (const auto& d : r.diagonal)
                text += " " + ring.to_string(d);
            text += "\n";
            emit(out, opt, json{{"ring", ring.name()}, {"diagonal", vector_to_json(ring, r.diagonal)}, {"left", rows_to_json(ring, r.left)}, {"right", rows_to_json(ring, r.right)}}, text);
        } else {
            auto h = hnf(ring, m);
            emit(out, opt, json{{"ring", ring.name()}, {"rank", h.rows()}, {"hnf", rows_to_json(ring, h)}}, text_rows(h));
        }
    }, parse_ring(ring_text));
    return ok;
}

} // namespace detail

/// Parses argv, dispatches, and maps failures to exit codes:
/// 1 usage, 2 domain rejection, 3 resource limit, 4 internal.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Ideal class groups of orders over Z and Fq[t]", "dedekind"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto order_opt = [&](CLI::App* sub) { sub->add_option("--order", opt.order_spec, "quad:<d>, hyp:q=<q>,f=<poly>, JSON file or literal")->required(); };

    auto* order = app.add_subcommand("order", "Construct an order descriptor");
    order->require_subcommand(1);
    auto* order_quad = order->add_subcommand("new-quadratic", "Maximal order of Q(sqrt d)");
    order_quad->add_option("-d", opt.d, "Squarefree d")->required()->allow_extra_args(false);
    auto* order_hyp = order->add_subcommand("new-hyperelliptic", "Fq[t][y]/(y^2 - f)");
    order_hyp->add_option("-q", opt.q, "Odd prime power")->required();
    order_hyp->add_option("-f", opt.f, "Monic squarefree odd-degree f")->required();

    auto* normform = app.add_subcommand("normform", "Norm form and its coefficient bound");
    order_opt(normform);

    auto* ideal = app.add_subcommand("ideal", "Ideal arithmetic");
    ideal->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> ideal_ops;
    for (const char* op : {"mul", "add", "inv", "norm", "list"}) {
        auto* sub = ideal->add_subcommand(op);
        order_opt(sub);
        if (std::string(op) == "list") {
            sub->add_option("--max-norm", opt.max_norm)->required();
        } else {
            sub->add_option("--a", opt.ideal_a, "Ideal: JSON or generators \"c1,c2;c1,c2\"")->required();
            if (std::string(op) == "mul" || std::string(op) == "add")
                sub->add_option("--b", opt.ideal_b)->required();
        }
        ideal_ops.emplace_back(op, sub);
    }

    auto* smallelem = app.add_subcommand("smallelem", "Pigeonhole element of bounded norm in an ideal");
    order_opt(smallelem);
    smallelem->add_option("--ideal", opt.ideal_a)->required();

    auto* classgroup = app.add_subcommand("classgroup", "Class group of a definite order");
    order_opt(classgroup);
    classgroup->add_flag("--reversed", opt.reversed, "Partition in reverse enumeration order");
    classgroup->add_option("--threads", opt.threads, "Worker threads (default DEDEKIND_G_THREADS or 1)");

    auto* places = app.add_subcommand("places", "Places of Q or Fq(t)");
    places->require_subcommand(1);
    auto* verify = places->add_subcommand("verify", "Exact product formula");
    verify->add_option("--field", opt.field, "Q, Fq(t) with --q, or e.g. F3(t)");
    verify->add_option("--q", opt.q);
    verify->add_option("--element", opt.element);
    verify->add_option("--trials", opt.trials);
    verify->add_option("--seed", opt.seed);
    verify->add_option("--max-norm", opt.sample_norm, "Norm bound for random numerators and denominators");

    auto* axioms = app.add_subcommand("axioms", "Basic-PID axioms");
    axioms->require_subcommand(1);
    auto* check = axioms->add_subcommand("check", "Count bound and quasi-triangle inequality");
    check->add_option("--ring", opt.ring, "Z, Fq[t] q=<p^k>, Zsqrt2, Zloc p=<prime>");
    check->add_option("--trials", opt.trials);
    check->add_option("--seed", opt.seed);

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form");
    auto* hnf_cmd = app.add_subcommand("hnf", "Hermite normal form");
    for (auto* sub : {snf_cmd, hnf_cmd}) {
        sub->add_option("--matrix", opt.matrix, "JSON rows or {ring, rows}, literal or file")->required();
        sub->add_option("--ring", opt.ring);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (order_quad->parsed())
            return detail::cmd_order(opt, true, out);
        if (order_hyp->parsed())
            return detail::cmd_order(opt, false, out);
        if (normform->parsed())
            return detail::cmd_normform(opt, out);
        for (auto& [op, sub] : ideal_ops)
            if (sub->parsed())
                return detail::cmd_ideal(opt, op, out);
        if (smallelem->parsed())
            return detail::cmd_smallelem(opt, out);
        if (classgroup->parsed())
            return detail::cmd_classgroup(opt, out);
        if (verify->parsed())
            return detail::cmd_places(opt, out);
        if (check->parsed())
            return detail::cmd_axioms(opt, out);
        if (snf_cmd->parsed())
            return detail::cmd_normal_form(opt, true, out);
        if (hnf_cmd->parsed())
            return detail::cmd_normal_form(opt, false, out);
        err << "no command\n";
        return usage;
    } catch (const domain_rejection& e) {
        err << "rejected: " << e.what() << '\n';
        return rejected;
    } catch (const resource_limit& e) {
        err << "resource limit: " << e.what() << '\n';
        return limit;
    } catch (const certification_error& e) {
        err << "certification failed: " << e.what() << '\n';
        return internal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        err << "rejected: " << e.what() << '\n';
        return rejected;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
}

} // namespace dedekind::cli
