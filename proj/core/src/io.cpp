#include "qgraph/io.hpp"

#include "qgraph/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace qgraph {

namespace {

using nlohmann::json;

json graph_to_value(const DecoratedGraph& g) {
    json v;
    v["vertices"] = json::array();
    for (const auto& vx : g.vertices)
        v["vertices"].push_back(
            {{"id", vx.id},
             {"color", vx.color == Color::Black ? "black" : "white"},
             {"in_arity", vx.in_arity}});
    v["edges"] = json::array();
    for (const auto& e : g.edges)
        v["edges"].push_back({e.src, e.dst, e.slot});
    v["in_legs"] = json::object();
    for (const auto& [label, at] : g.in_legs)
        v["in_legs"][std::to_string(label)] = {at.first, at.second};
    v["out_legs"] = json::object();
    for (const auto& [label, vertex] : g.out_legs)
        v["out_legs"][std::to_string(label)] = vertex;
    v["ordering"] = g.ordering;
    return v;
}

int leg_label(const std::string& key) {
    try {
        std::size_t used = 0;
        const int label = std::stoi(key, &used);
        if (used != key.size())
            throw std::invalid_argument(key);
        return label;
    } catch (const std::exception&) {
        throw InvalidGraph("leg label is not an integer: " + key);
    }
}

DecoratedGraph graph_from_value(const json& v) {
    DecoratedGraph g;
    try {
        for (const auto& vx : v.at("vertices")) {
            VertexSpec spec;
            spec.id = vx.at("id").get<int>();
            const std::string color = vx.at("color").get<std::string>();
            if (color == "black")
                spec.color = Color::Black;
            else if (color == "white")
                spec.color = Color::White;
            else
                throw InvalidGraph("unknown vertex color: " + color);
            spec.in_arity = vx.at("in_arity").get<int>();
            g.vertices.push_back(spec);
        }
        for (const auto& e : v.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw InvalidGraph("edge is not a [src, dst, slot] triple");
            g.edges.push_back({e[0].get<int>(), e[1].get<int>(),
                               e[2].get<int>()});
        }
        for (const auto& [key, at] : v.at("in_legs").items()) {
            if (!at.is_array() || at.size() != 2)
                throw InvalidGraph("in-leg target is not a [vertex, slot] pair");
            g.in_legs[leg_label(key)] = {at[0].get<int>(), at[1].get<int>()};
        }
        for (const auto& [key, vertex] : v.at("out_legs").items())
            g.out_legs[leg_label(key)] = vertex.get<int>();
        g.ordering = v.at("ordering").get<std::vector<int>>();
    } catch (const json::exception& err) {
        throw InvalidGraph(std::string("bad graph JSON: ") + err.what());
    }
    require_valid(g);
    return g;
}

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& err) {
        throw InvalidGraph(std::string(what) + ": " + err.what());
    }
}

}  // namespace

// single line, so streams of graphs are JSON-lines
std::string graph_to_json(const DecoratedGraph& g) {
    return graph_to_value(g).dump();
}

DecoratedGraph graph_from_json(const std::string& text) {
    return graph_from_value(parse(text, "bad graph JSON"));
}

std::string cochain_to_json(const Cochain& c) {
    json v;
    int n_in = 0;
    int m_out = 0;
    if (!c.zero()) {
        const DecoratedGraph& first = c.terms().begin()->second.first;
        n_in = first.n_in();
        m_out = first.m_out();
    }
    v["n_in"] = n_in;
    v["m_out"] = m_out;
    v["degree"] = c.homogeneous_degree();
    v["terms"] = json::array();
    for (const auto& [key, term] : c.terms())
        v["terms"].push_back({{"coeff", rat_to_string(term.second)},
                              {"graph", graph_to_value(term.first)}});
    return v.dump(2);
}

Cochain cochain_from_json(const std::string& text) {
    const json v = parse(text, "bad cochain JSON");
    Cochain c;
    try {
        for (const auto& entry : v.at("terms"))
            c.add(graph_from_value(entry.at("graph")),
                  rat_from_string(entry.at("coeff").get<std::string>()));
    } catch (const json::exception& err) {
        throw InvalidGraph(std::string("bad cochain JSON: ") + err.what());
    }
    return c;
}

std::string graph_to_dot(const DecoratedGraph& g) {
    std::ostringstream out;
    out << "digraph cochain {\n";
    out << "  node [fontsize=10];\n";
    for (const auto& v : g.vertices) {
        out << "  v" << v.id << " [shape=circle label=\"\" style=";
        if (v.color == Color::Black)
            out << "filled fillcolor=black";
        else
            out << "solid";
        out << "];\n";
    }
    for (const auto& [label, at] : g.in_legs) {
        out << "  in" << label << " [shape=none label=\"" << label << "\"];\n";
        out << "  in" << label << " -> v" << at.first << " [label=\""
            << at.second << "\"];\n";
    }
    for (const auto& e : g.edges)
        out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.slot
            << "\"];\n";
    for (const auto& [label, vertex] : g.out_legs) {
        out << "  out" << label << " [shape=none label=\"" << label
            << "\"];\n";
        out << "  v" << vertex << " -> out" << label << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string tensor_to_json(const SuperTensor& t) {
    json components = json::array();
    for (const auto& [key, f] : t.components()) {
        json terms = json::array();
        for (const auto& [mono, coeff] : f.terms())
            terms.push_back(
                {{"monomial", mono}, {"coeff", rat_to_string(coeff)}});
        components.push_back({{"key", key}, {"terms", terms}});
    }
    json j{{"lower", t.lower_count()},
           {"upper", t.upper_count()},
           {"parities", t.coordinate_parities()},
           {"components", components}};
    return j.dump(2);
}

}  // namespace qgraph
