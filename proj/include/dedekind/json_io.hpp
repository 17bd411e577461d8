#pragma once

#include "dedekind/base_pid.hpp"
#include "dedekind/class_group.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/ideal.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/order.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <variant>

namespace dedekind {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

/// Integers that fit in 64 bits are JSON numbers, larger ones strings;
/// polynomials are always strings.
template <BasicPid R>
json element_to_json(const R& ring, const typename R::element& a)
{
    if constexpr (R::kind == RingKind::integers) {
        if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max())
            return a.template convert_to<std::int64_t>();
        return a.str();
    } else {
        return ring.to_string(a);
    }
}

inline json integer_to_json(const Integer& a) { return element_to_json(IntegerRing{}, a); }

template <BasicPid R>
typename R::element element_from_json(const R& ring, const json& j)
{
    if (j.is_number_integer())
        return ring.from_integer(Integer(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_element(ring, j.get<std::string>());
    throw parse_error("expected a number or string element, got " + j.dump());
}

template <BasicPid R>
json vector_to_json(const R& ring, const std::vector<typename R::element>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(element_to_json(ring, x));
    return out;
}

template <BasicPid R>
json rows_to_json(const R& ring, const Matrix<R>& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(vector_to_json(ring, m.row(i)));
    return out;
}

template <BasicPid R>
Matrix<R> rows_from_json(const R& ring, const json& j)
{
    if (!j.is_array())
        throw parse_error("matrix rows must be an array of arrays");
    Matrix<R> m(0, j.empty() ? 0 : j.front().size());
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != m.cols())
            throw parse_error("matrix rows must be arrays of equal length");
        std::vector<typename R::element> r;
        for (const auto& x : row)
            r.push_back(element_from_json(ring, x));
        m.append_row(std::move(r));
    }
    return m;
}

template <BasicPid R>
json matrix_to_json(const R& ring, const Matrix<R>& m)
{
    return json{{"ring", ring.name()}, {"rows", rows_to_json(ring, m)}};
}

/// {base, n, constants[i][j] = [r_ij^(1), ..., r_ij^(n)], label}.
template <BasicPid R>
json order_to_json(const Order<R>& order)
{
    const R& ring = order.ring();
    const std::size_t n = order.rank();
    json constants = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json cell = json::array();
            for (std::size_t k = 0; k < n; ++k)
                cell.push_back(element_to_json(ring, order.constant(i, j, k)));
            row.push_back(cell);
        }
        constants.push_back(row);
    }
    return json{{"base", ring.name()}, {"n", n}, {"constants", constants}, {"label", order.label()}};
}

using AnyOrder = std::variant<OrderPtr<IntegerRing>, OrderPtr<PolyRing>>;

template <BasicPid R>
Order<R> order_from_json(const R& ring, const json& j)
{
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<typename R::element> flat;
    std::function<void(const json&)> collect = [&](const json& x) {
        if (x.is_array())
            for (const auto& y : x)
                collect(y);
        else
            flat.push_back(element_from_json(ring, x));
    };
    collect(j.at("constants"));
    if (flat.size() != n * n * n)
        throw parse_error("order constants must have n^3 entries");
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string("custom");
    try {
        return Order<R>(ring, n, std::move(flat), label);
    } catch (const std::invalid_argument& e) {
        throw domain_rejection(e.what());
    }
}

inline AnyOrder any_order_from_json(const json& j)
{
    try {
        auto ring = parse_ring(j.at("base").get<std::string>());
        return std::visit([&](const auto& r) -> AnyOrder { return share(order_from_json(r, j)); }, ring);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad order JSON: ") + e.what());
    }
}

/// Reads a JSON document from a literal (starting with '{' or '[') or a file.
inline json read_json_argument(const std::string& text)
{
    std::string s = detail::trim_copy(text);
    try {
        if (!s.empty() && (s[0] == '{' || s[0] == '['))
            return json::parse(s);
        std::ifstream in(s);
        if (!in)
            throw parse_error("cannot open \"" + s + "\"");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

/// "quad:<d>", "hyp:q=<q>,f=<poly>", a JSON order literal, or a file.
inline AnyOrder parse_order_spec(const std::string& text)
{
    std::string s = detail::trim_copy(text);
    if (s.rfind("quad:", 0) == 0) {
        Integer d;
        try {
            d = parse_integer(detail::trim_copy(s.substr(5)));
        } catch (const std::invalid_argument&) {
            throw parse_error("bad quadratic order spec \"" + s + "\"");
        }
        return share(make_quadratic_order(d));
    }
    if (s.rfind("hyp:", 0) == 0) {
        auto qpos = s.find("q=");
        auto fpos = s.find("f=");
        if (qpos == std::string::npos || fpos == std::string::npos)
            throw parse_error("hyperelliptic spec needs q=<q>,f=<poly>");
        auto qend = s.find(',', qpos);
        PolyRing ring(detail::parse_prime_power(s.substr(qpos + 2, qend == std::string::npos ? std::string::npos : qend - qpos - 2)));
        std::string f = s.substr(fpos + 2);
        auto fend = f.find(',');
        if (fend != std::string::npos)
            f = f.substr(0, fend);
        return share(make_hyperelliptic_order(ring, parse_element(ring, f)));
    }
    return any_order_from_json(read_json_argument(s));
}

template <BasicPid R>
json ideal_to_json(const Ideal<R>& ideal)
{
    const R& ring = ideal.order().ring();
    return json{{"order", ideal.order().label()},
                {"denominator", element_to_json(ring, ideal.denominator())},
                {"basis", rows_to_json(ring, ideal.basis())}};
}

/// A JSON ideal {denominator, basis}, or generators "c11,c12;c21,c22"
/// given as coordinate vectors in the order basis.
template <BasicPid R>
Ideal<R> parse_ideal(const OrderPtr<R>& order, const std::string& text)
{
    const R& ring = order->ring();
    std::string s = detail::trim_copy(text);
    if (!s.empty() && s[0] == '{') {
        json j = read_json_argument(s);
        auto den = j.contains("denominator") ? element_from_json(ring, j.at("denominator")) : ring.one();
        return Ideal<R>(order, rows_from_json(ring, j.at("basis")), den);
    }
    std::vector<typename Order<R>::element> gens;
    std::stringstream elements(s);
    std::string item;
    while (std::getline(elements, item, ';')) {
        std::vector<typename R::element> coords;
        std::stringstream parts(item);
        std::string c;
        while (std::getline(parts, c, ','))
            coords.push_back(parse_element(ring, c));
        if (coords.size() != order->rank())
            throw parse_error("generator \"" + item + "\" needs " + std::to_string(order->rank()) + " coordinates");
        gens.push_back(std::move(coords));
    }
    return ideal_from_generators(order, gens);
}

} // namespace dedekind
