#pragma once

// JSON forms of the library's objects and verdicts, and DOT export.
//
//   chain:     {"vertices": ["v1", "v2", ...]}
//   graph:     {"vertices": [...], "arcs": [["u", "v"], ...]}    (non-loop arcs only)
//   morphism:  {"source": chain, "target": chain, "map": {"v1": "w1", ...}}
//
// Labels may be given as JSON strings or integers; they are kept as strings.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dualramsey/arrow.hpp"
#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"
#include "dualramsey/fdrt.hpp"
#include "dualramsey/glue.hpp"
#include "dualramsey/graph.hpp"
#include "dualramsey/srq.hpp"

namespace dualramsey {

using Json = nlohmann::ordered_json;

/// Malformed JSON input; the message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline const Json& field(const Json& j, const char* name, const std::string& where)
{
    if (!j.is_object() || !j.contains(name))
        throw ParseError(where + ": missing field '" + name + "'");
    return j.at(name);
}

inline std::string label_from_json(const Json& j, const std::string& where)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw ParseError(where + ": label must be a string or an integer");
}

inline std::vector<LabelPair> arcs_from_json(const Json& j, const std::string& where)
{
    std::vector<LabelPair> arcs;
    if (!j.is_array())
        throw ParseError(where + ".arcs: expected an array");
    for (const auto& a : j) {
        if (!a.is_array() || a.size() != 2)
            throw ParseError(where + ".arcs: every arc must be a two-element array");
        arcs.emplace_back(label_from_json(a[0], where + ".arcs"), label_from_json(a[1], where + ".arcs"));
    }
    return arcs;
}

template <class F>
auto rethrow_as_parse_error(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Objects

inline Json to_json(const Chain& c)
{
    return Json{{"vertices", std::vector<std::string>(c.labels().begin(), c.labels().end())}};
}

inline Chain chain_from_json(const Json& j, const std::string& where = "chain")
{
    const auto& vs = detail::field(j, "vertices", where);
    if (!vs.is_array())
        throw ParseError(where + ".vertices: expected an array");
    std::vector<std::string> labels;
    for (const auto& v : vs)
        labels.push_back(detail::label_from_json(v, where + ".vertices"));
    return detail::rethrow_as_parse_error(where + ".vertices", [&] { return Chain(std::move(labels)); });
}

template <ReflexiveGraph G>
Json to_json(const G& g)
{
    Json arcs = Json::array();
    for (auto [u, v] : g.arcs())
        arcs.push_back({g.chain().label(u), g.chain().label(v)});
    auto j = to_json(g.chain());
    j["arcs"] = std::move(arcs);
    return j;
}

template <class G>
G graph_from_json(const Json& j, const std::string& where = "graph")
{
    auto chain = chain_from_json(j, where);
    std::vector<LabelPair> arcs;
    if (j.contains("arcs"))
        arcs = detail::arcs_from_json(j.at("arcs"), where);
    return detail::rethrow_as_parse_error(where + ".arcs", [&] { return G::from_labels(chain, arcs); });
}

inline OrderedOrientedGraph oograph_from_json(const Json& j, const std::string& where = "graph")
{
    return graph_from_json<OrderedOrientedGraph>(j, where);
}

inline LinExtDigraph lin_ext_digraph_from_json(const Json& j, const std::string& where = "graph")
{
    return graph_from_json<LinExtDigraph>(j, where);
}

inline Json to_json(const VertexMorphism& f)
{
    Json map = Json::object();
    for (std::size_t i = 0; i < f.source().size(); ++i)
        map[f.source().label(i)] = f.target().label(f(i));
    return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"map", std::move(map)}};
}

/// Reads a morphism. `source` / `target` fields may be omitted when defaults are
/// supplied; a bare {"v": "w", ...} table is accepted too when both defaults exist.
inline VertexMorphism morphism_from_json(const Json& j, const std::optional<Chain>& default_source = std::nullopt,
                                         const std::optional<Chain>& default_target = std::nullopt,
                                         const std::string& where = "morphism")
{
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    const bool bare = !j.contains("map") && default_source && default_target;
    const Json& table = bare ? j : detail::field(j, "map", where);
    if (!table.is_object())
        throw ParseError(where + ".map: expected an object");
    auto chain_or = [&](const char* name, const std::optional<Chain>& fallback) {
        if (!bare && j.contains(name))
            return chain_from_json(j.at(name), where + "." + name);
        if (fallback)
            return *fallback;
        throw ParseError(where + ": missing field '" + name + "'");
    };
    auto source = chain_or("source", default_source);
    auto target = chain_or("target", default_target);
    std::map<std::string, std::string, std::less<>> entries;
    for (const auto& [k, v] : table.items())
        entries[k] = detail::label_from_json(v, where + ".map");
    return detail::rethrow_as_parse_error(where + ".map", [&] {
        return VertexMorphism::from_labels(std::move(source), std::move(target), entries);
    });
}

// ---------------------------------------------------------------------------
// Verdicts

inline Json to_json(const SrqVerdict& v)
{
    Json witness = Json::array();
    for (const auto& [a, b] : v.witness)
        witness.push_back({a, b});
    return Json{{"accepted", v.accepted},
                {"stage", std::string(to_string(v.stage))},
                {"leg", std::string(to_string(v.leg))},
                {"witness", std::move(witness)}};
}

inline Json to_json(const RigidSurjectionVerdict& v)
{
    Json j{{"accepted", v.accepted}};
    if (v.missed)
        j["witness"] = Json{{"missed", *v.missed}};
    else if (v.violation)
        j["witness"] = Json{{"pair", {v.violation->first, v.violation->second}}};
    else
        j["witness"] = nullptr;
    return j;
}

inline Json to_json(const Coloring& c)
{
    return Json{{"k", c.k}, {"colors", c.colors}};
}

inline Json to_json(const ArrowVerdict& v)
{
    Json points = Json::array();
    for (const auto& m : v.points)
        points.push_back(to_json(m));
    Json j{{"holds", v.holds}, {"homset", std::move(points)}};
    j["counterexample"] = v.counterexample ? to_json(*v.counterexample) : Json(nullptr);
    j["universal_witness"] = v.universal_witness ? to_json(*v.universal_witness) : Json(nullptr);
    return j;
}

inline Json to_json(const Partition& p)
{
    return Json(p);
}

inline Partition partition_from_json(const Json& j, const std::string& where = "partition")
{
    if (!j.is_array())
        throw ParseError(where + ": expected an array of blocks");
    Partition p;
    for (const auto& block : j) {
        if (!block.is_array())
            throw ParseError(where + ": every block must be an array");
        auto& out = p.emplace_back();
        for (const auto& l : block)
            out.push_back(detail::label_from_json(l, where));
    }
    return p;
}

inline Json to_json(const EDigPair& p)
{
    return Json{{"first", to_json(p.first)}, {"second", to_json(p.second)}};
}

inline EDigPair edig_pair_from_json(const Json& j, const std::string& where = "pair")
{
    return {lin_ext_digraph_from_json(detail::field(j, "first", where), where + ".first"),
            lin_ext_digraph_from_json(detail::field(j, "second", where), where + ".second")};
}

// ---------------------------------------------------------------------------
// Cocone data
//
//   {"apex_first": graph, "apex_second": graph, "target": graph, "base": graph,
//    "legs": [{"first": morphism, "second": morphism}, ...],
//    "shape": {"top": n, "bottom": [{"left":  {"leg": i, "label": morphism},
//                                    "right": {"leg": j, "label": morphism}}, ...]}}
//
// Morphism source/target chains default to the objects they connect.

inline BinaryCoconeData cocone_from_json(const Json& j)
{
    const std::string w = "cocone";
    auto apex_first = lin_ext_digraph_from_json(detail::field(j, "apex_first", w), w + ".apex_first");
    auto apex_second = lin_ext_digraph_from_json(detail::field(j, "apex_second", w), w + ".apex_second");
    auto target = oograph_from_json(detail::field(j, "target", w), w + ".target");
    auto base = oograph_from_json(detail::field(j, "base", w), w + ".base");

    std::vector<MorphismPair> legs;
    const auto& jl = detail::field(j, "legs", w);
    if (!jl.is_array())
        throw ParseError(w + ".legs: expected an array");
    for (std::size_t i = 0; i < jl.size(); ++i) {
        const auto where = w + ".legs[" + std::to_string(i) + "]";
        legs.push_back({morphism_from_json(detail::field(jl[i], "first", where), apex_first.chain(), target.chain(),
                                           where + ".first"),
                        morphism_from_json(detail::field(jl[i], "second", where), apex_second.chain(),
                                           target.chain(), where + ".second")});
    }

    BinaryShape shape;
    const auto& js = detail::field(j, "shape", w);
    const auto& top = detail::field(js, "top", w + ".shape");
    if (!top.is_number_unsigned())
        throw ParseError(w + ".shape.top: expected a nonnegative integer");
    shape.top = top.get<std::size_t>();
    if (js.contains("bottom")) {
        const auto& jb = js.at("bottom");
        if (!jb.is_array())
            throw ParseError(w + ".shape.bottom: expected an array");
        for (std::size_t i = 0; i < jb.size(); ++i) {
            const auto where = w + ".shape.bottom[" + std::to_string(i) + "]";
            auto arrow = [&](const char* side) {
                const auto& a = detail::field(jb[i], side, where);
                const auto& leg = detail::field(a, "leg", where + "." + side);
                if (!leg.is_number_unsigned())
                    throw ParseError(where + "." + side + ".leg: expected a nonnegative integer");
                return ShapeArrow{leg.get<std::size_t>(),
                                  morphism_from_json(detail::field(a, "label", where + "." + side), target.chain(),
                                                     base.chain(), where + "." + side + ".label")};
            };
            shape.bottom.push_back({arrow("left"), arrow("right")});
        }
    }
    return {std::move(apex_first), std::move(apex_second), std::move(target), std::move(base), std::move(legs),
            std::move(shape)};
}

inline Json to_json(const BinaryCoconeData& d)
{
    Json legs = Json::array();
    for (const auto& l : d.legs)
        legs.push_back({{"first", to_json(l.first)}, {"second", to_json(l.second)}});
    Json bottom = Json::array();
    for (const auto& b : d.shape.bottom)
        bottom.push_back({{"left", {{"leg", b.left.leg}, {"label", to_json(b.left.label)}}},
                          {"right", {{"leg", b.right.leg}, {"label", to_json(b.right.label)}}}});
    return Json{{"apex_first", to_json(d.apex_first)}, {"apex_second", to_json(d.apex_second)},
                {"target", to_json(d.target)},         {"base", to_json(d.base)},
                {"legs", std::move(legs)},             {"shape", {{"top", d.shape.top}, {"bottom", std::move(bottom)}}}};
}

// ---------------------------------------------------------------------------
// DOT

/// Directed graph with vertices in chain order. Invisible edges between
/// consecutive vertices keep the layout ordered along the chain; loops are omitted.
template <ReflexiveGraph G>
std::string to_dot(const G& g, const std::string& name = "G")
{
    auto quoted = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    const auto& c = g.chain();
    os << "digraph " << quoted(name) << " {\n  rankdir=LR;\n";
    for (const auto& l : c.labels())
        os << "  " << quoted(l) << ";\n";
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        os << "  " << quoted(c.label(i)) << " -> " << quoted(c.label(i + 1)) << " [style=invis, weight=100];\n";
    for (auto [u, v] : g.arcs())
        os << "  " << quoted(c.label(u)) << " -> " << quoted(c.label(v)) << " [constraint=false];\n";
    os << "}\n";
    return os.str();
}

} // namespace dualramsey
