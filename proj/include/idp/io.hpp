#ifndef IDP_IO_HPP
#define IDP_IO_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "idp/instance.hpp"

namespace idp {

// Line-oriented text format:
//   c <comment>
//   idp <n> <m> <k>
//   e <u> <v>        (m lines, canonical order: u < v, sorted)
//   t <s> <t>        (k lines, input order)
// Vertex ids are 0-based decimal. Labels travel only in the structured
// (JSON) format.

inline std::string serialize_instance_text(const IdpInstance& inst) {
    std::ostringstream out;
    const Graph& g = inst.graph;
    out << "idp " << g.vertex_count() << ' ' << g.edge_count() << ' ' << inst.k() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    for (const auto& p : inst.pairs) out << "t " << p.s << ' ' << p.t << '\n';
    return out.str();
}

inline std::string serialize_graph_text(const Graph& g) {
    std::ostringstream out;
    out << "idp " << g.vertex_count() << ' ' << g.edge_count() << " 0\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

namespace detail {

struct ParsedText {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<TerminalPair> pairs;
};

inline ParsedText parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    long n = 0, m = 0, k = 0;
    ParsedText out;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (!header_seen) {
            if (tag != "idp") throw std::invalid_argument("parse: malformed header (expected 'idp')");
            if (!(ls >> n >> m >> k) || n < 0 || m < 0 || k < 0)
                throw std::invalid_argument("parse: malformed header counts");
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("parse: malformed header (trailing tokens)");
            header_seen = true;
            continue;
        }
        long a = 0, b = 0;
        if (tag == "e" || tag == "t") {
            if (!(ls >> a >> b)) throw std::invalid_argument("parse: malformed line " + std::to_string(line_no));
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("parse: malformed line " + std::to_string(line_no));
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("parse: vertex id out of range on line " + std::to_string(line_no));
            if (tag == "e")
                out.edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
            else
                out.pairs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        } else {
            throw std::invalid_argument("parse: unknown line tag '" + tag + "'");
        }
    }
    if (!header_seen) throw std::invalid_argument("parse: malformed header (missing)");
    if (static_cast<long>(out.edges.size()) != m)
        throw std::invalid_argument("parse: inconsistent edge count");
    if (static_cast<long>(out.pairs.size()) != k)
        throw std::invalid_argument("parse: inconsistent terminal pair count");
    out.n = static_cast<int>(n);
    return out;
}

} // namespace detail

inline IdpInstance parse_instance_text(const std::string& text) {
    auto p = detail::parse_text(text);
    return IdpInstance(Graph(p.n, p.edges), p.pairs);
}

inline Graph parse_graph_text(const std::string& text) {
    auto p = detail::parse_text(text);
    if (!p.pairs.empty()) throw std::invalid_argument("parse: terminal lines in a plain graph");
    return Graph(p.n, p.edges);
}

// Structured format: mirrors the text fields plus the label map. Canonical:
// edges sorted (u < v), pairs in input order, label keys as sorted decimal
// strings.

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    auto labels = nlohmann::json::object();
    for (const auto& [v, lab] : g.labels()) labels[std::to_string(v)] = lab;
    j["labels"] = std::move(labels);
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("parse: malformed structured graph (n)");
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("parse: malformed structured edge");
        long u = e[0].get<long>(), v = e[1].get<long>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("parse: structured edge id out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::map<Vertex, std::string> labels;
    const nlohmann::json label_obj = j.value("labels", nlohmann::json::object());
    for (const auto& [key, val] : label_obj.items())
        labels[std::stoi(key)] = val.get<std::string>();
    return Graph(n, edges, std::move(labels));
}

inline nlohmann::json instance_to_json(const IdpInstance& inst) {
    nlohmann::json j = graph_to_json(inst.graph);
    auto pairs = nlohmann::json::array();
    for (const auto& p : inst.pairs) pairs.push_back({p.s, p.t});
    j["pairs"] = std::move(pairs);
    return j;
}

inline IdpInstance instance_from_json(const nlohmann::json& j) {
    Graph g = graph_from_json(j);
    std::vector<TerminalPair> pairs;
    for (const auto& p : j.value("pairs", nlohmann::json::array())) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("parse: malformed structured pair");
        pairs.push_back({p[0].get<Vertex>(), p[1].get<Vertex>()});
    }
    return IdpInstance(std::move(g), std::move(pairs));
}

} // namespace idp

#endif
