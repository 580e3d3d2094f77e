#ifndef IDP_CORPUS_HPP
#define IDP_CORPUS_HPP

#include <filesystem>
#include <fstream>

#include "idp/artifact.hpp"
#include "idp/induced.hpp"
#include "idp/independent_set.hpp"
#include "idp/sat.hpp"
#include "idp/solve.hpp"

namespace idp {

struct CorpusItem {
    std::string name;
    ReductionArtifact artifact;
};

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace detail

/// Lay out a corpus directory: per item an instance file plus a sidecar
/// with provenance and metadata, and a manifest (written last) listing
/// parameters and expected answers.
inline void write_corpus(const std::string& dir, const std::vector<CorpusItem>& items,
                         const nlohmann::json& run_config) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json manifest;
    manifest["run_config"] = run_config;
    auto list = nlohmann::json::array();
    for (const auto& item : items) {
        item.artifact.validate();
        std::string inst_file = item.name + ".idp";
        std::string sidecar_file = item.name + ".sidecar.json";
        detail::write_file(fs::path(dir) / inst_file,
                           serialize_instance_text(item.artifact.instance));
        detail::write_file(fs::path(dir) / sidecar_file,
                           sidecar_to_json(item.artifact).dump(2) + "\n");
        nlohmann::json entry;
        entry["name"] = item.name;
        entry["instance"] = inst_file;
        entry["sidecar"] = sidecar_file;
        entry["source_kind"] = item.artifact.meta.source_kind;
        if (item.artifact.meta.expected_answer.has_value())
            entry["expected"] = *item.artifact.meta.expected_answer;
        else
            entry["expected"] = nullptr;
        list.push_back(std::move(entry));
    }
    manifest["items"] = std::move(list);
    detail::write_file(fs::path(dir) / "manifest.json", manifest.dump(2) + "\n");
}

inline std::vector<CorpusItem> read_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::path manifest_path = fs::path(dir) / "manifest.json";
    if (!fs::exists(manifest_path))
        throw std::runtime_error("corpus manifest missing: " + manifest_path.string());
    auto manifest = nlohmann::json::parse(detail::read_file(manifest_path));
    std::vector<CorpusItem> items;
    for (const auto& entry : manifest.at("items")) {
        IdpInstance inst =
            parse_instance_text(detail::read_file(fs::path(dir) / entry.at("instance").get<std::string>()));
        auto sidecar = nlohmann::json::parse(
            detail::read_file(fs::path(dir) / entry.at("sidecar").get<std::string>()));
        items.push_back({entry.at("name").get<std::string>(),
                         sidecar_from_json(sidecar, std::move(inst))});
    }
    return items;
}

struct CertRow {
    std::string item;
    std::string property;
    bool pass = false;
    std::string detail;
};

/// Certification properties runnable over a corpus:
///   c6-free            no induced six-cycle
///   h-ell-free         no induced H_i for i in [l] (l from the sidecar)
///   degree-bound       every gadget-created vertex has degree <= 3
///   induced-path-bound no induced path on more than 4k+4 vertices
///   roundtrip          stored expected answer matches a fresh oracle run
inline CertRow certify_item(const CorpusItem& item, const std::string& property,
                            const SolveBudget& budget) {
    const ReductionArtifact& art = item.artifact;
    const Graph& g = art.instance.graph;
    CertRow row{item.name, property, false, ""};
    if (property == "c6-free") {
        row.pass = is_h_free(g, Pattern::cycle(6));
        if (!row.pass) row.detail = "induced C6 present";
    } else if (property == "h-ell-free") {
        auto it = art.meta.params.find("l");
        if (it == art.meta.params.end()) {
            row.detail = "no l parameter in sidecar";
            return row;
        }
        row.pass = true;
        for (long i = 1; i <= it->second; ++i)
            if (!is_h_free(g, Pattern::h_graph(static_cast<int>(i)))) {
                row.pass = false;
                row.detail = "induced H" + std::to_string(i) + " present";
                break;
            }
    } else if (property == "degree-bound") {
        row.pass = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto it = art.provenance.find(v);
            if (it == art.provenance.end()) continue;
            const std::string& role = it->second;
            bool created = role.rfind("xgadget:", 0) == 0 || role.rfind("ygadget:", 0) == 0;
            if (created && g.degree(v) > 3) {
                row.pass = false;
                row.detail = "gadget vertex " + role + " has degree " + std::to_string(g.degree(v));
                break;
            }
        }
    } else if (property == "induced-path-bound") {
        auto it = art.meta.params.find("k");
        if (it == art.meta.params.end()) {
            row.detail = "no k parameter in sidecar";
            return row;
        }
        int bound = static_cast<int>(4 * it->second + 4);
        row.pass = longest_induced_path_at_most(g, bound);
        if (!row.pass) row.detail = "induced path on more than " + std::to_string(bound) + " vertices";
    } else if (property == "roundtrip") {
        if (!art.meta.expected_answer.has_value()) {
            row.detail = "no expected answer recorded";
            return row;
        }
        bool expected = *art.meta.expected_answer;
        if (art.meta.source_kind == "sat") {
            CnfFormula phi = parse_dimacs(art.meta.source_text);
            row.pass = sat_solve(phi).has_value() == expected;
        } else if (art.meta.source_kind == "is") {
            Graph src = parse_graph_text(art.meta.source_text);
            row.pass = has_independent_set(src, static_cast<int>(art.meta.params.at("k"))).has_value() ==
                       expected;
        } else if (art.meta.source_kind == "cycle") {
            Graph src = parse_graph_text(art.meta.source_text);
            HoleResult hole = find_hole_through(src, static_cast<Vertex>(art.meta.params.at("x")),
                                                static_cast<Vertex>(art.meta.params.at("y")), budget);
            if (hole.status == HoleStatus::BudgetExhausted) {
                row.detail = "oracle budget exhausted";
                return row;
            }
            row.pass = (hole.status == HoleStatus::Found) == expected;
        } else {
            row.detail = "unknown source kind";
            return row;
        }
        if (!row.pass) row.detail = "expected answer does not match oracle";
    } else {
        row.detail = "unknown property";
    }
    return row;
}

inline std::vector<CertRow> certify_corpus(const std::string& dir,
                                           const std::vector<std::string>& properties,
                                           const SolveBudget& budget) {
    std::vector<CertRow> rows;
    for (const auto& item : read_corpus(dir))
        for (const auto& prop : properties) rows.push_back(certify_item(item, prop, budget));
    return rows;
}

} // namespace idp

#endif
