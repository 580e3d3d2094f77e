#ifndef IDP_ARTIFACT_HPP
#define IDP_ARTIFACT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "idp/instance.hpp"
#include "idp/io.hpp"

namespace idp {

inline std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct ReductionMeta {
    std::string source_kind;                     // "cycle" | "sat" | "is"
    std::string source_digest;
    std::string source_text;                     // serialized source instance
    std::map<std::string, long> params;          // l, subdivisions, k, ...
    std::map<std::string, long> edge_class_counts;
    std::optional<bool> expected_answer;
    std::string answer_provenance;               // "oracle" | "witness" | ""
};

/// Compiled instance plus a provenance map (vertex -> gadget role, grammar
/// `<gadget>:<name>[indices]`) and expected-answer metadata. Answers are
/// only ever set from an oracle call or a verified witness.
struct ReductionArtifact {
    IdpInstance instance;
    std::map<Vertex, std::string> provenance;
    ReductionMeta meta;

    void validate() const {
        instance.validate();
        for (Vertex v = 0; v < instance.graph.vertex_count(); ++v)
            if (!provenance.count(v))
                throw std::invalid_argument("artifact: vertex without provenance entry");
        if (meta.expected_answer.has_value() && meta.answer_provenance.empty())
            throw std::invalid_argument("artifact: expected answer without provenance");
    }
};

inline nlohmann::json sidecar_to_json(const ReductionArtifact& art) {
    nlohmann::json j;
    auto prov = nlohmann::json::object();
    for (const auto& [v, role] : art.provenance) prov[std::to_string(v)] = role;
    j["provenance"] = std::move(prov);
    nlohmann::json meta;
    meta["source_kind"] = art.meta.source_kind;
    meta["source_digest"] = art.meta.source_digest;
    meta["source_text"] = art.meta.source_text;
    meta["params"] = art.meta.params;
    meta["edge_class_counts"] = art.meta.edge_class_counts;
    if (art.meta.expected_answer.has_value()) {
        meta["expected_answer"] = *art.meta.expected_answer;
        meta["answer_provenance"] = art.meta.answer_provenance;
    } else {
        meta["expected_answer"] = nullptr;
    }
    j["meta"] = std::move(meta);
    return j;
}

inline ReductionArtifact sidecar_from_json(const nlohmann::json& j, IdpInstance instance) {
    ReductionArtifact art;
    art.instance = std::move(instance);
    for (const auto& [key, val] : j.at("provenance").items())
        art.provenance[std::stoi(key)] = val.get<std::string>();
    const auto& meta = j.at("meta");
    art.meta.source_kind = meta.value("source_kind", "");
    art.meta.source_digest = meta.value("source_digest", "");
    art.meta.source_text = meta.value("source_text", "");
    const nlohmann::json params = meta.value("params", nlohmann::json::object());
    for (const auto& [key, val] : params.items()) art.meta.params[key] = val.get<long>();
    const nlohmann::json counts = meta.value("edge_class_counts", nlohmann::json::object());
    for (const auto& [key, val] : counts.items()) art.meta.edge_class_counts[key] = val.get<long>();
    if (meta.contains("expected_answer") && !meta["expected_answer"].is_null()) {
        art.meta.expected_answer = meta["expected_answer"].get<bool>();
        art.meta.answer_provenance = meta.value("answer_provenance", "");
    }
    art.validate();
    return art;
}

} // namespace idp

#endif
