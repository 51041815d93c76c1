#include "chaincond/json_io.hpp"

#include <json.hpp>

namespace chaincond {

using nlohmann::json;

namespace {

json kind_json(const TreeKind& kind) {
    if (kind.is_omega()) return json("omega");
    return json{{"arity", kind.arity_value()}};
}

json kind_json(const HypergraphKind& kind) {
    switch (kind.family()) {
    case EdgeFamily::Hn: return json{{"hn", kind.arity()}};
    case EdgeFamily::H0Inf: return json("h0inf");
    case EdgeFamily::H1Inf: return json("h1inf");
    }
    throw Error(ErrorCode::ConfigError, "unknown hypergraph kind");
}

TreeKind tree_kind_of(const json& j) {
    if (j.is_string() && j.get<std::string>() == "omega") return TreeKind::omega();
    if (j.is_object() && j.contains("arity")) return TreeKind::arity(j.at("arity").get<int>());
    throw Error(ErrorCode::ConfigError, "tree kind must be \"omega\" or {\"arity\": n}");
}

HypergraphKind hypergraph_kind_of(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "h0inf") return HypergraphKind::h0_inf();
        if (s == "h1inf") return HypergraphKind::h1_inf();
        throw Error(ErrorCode::ConfigError, "unknown hypergraph kind " + s);
    }
    if (j.is_object() && j.contains("hn")) return HypergraphKind::hn(j.at("hn").get<int>());
    throw Error(ErrorCode::ConfigError, "hypergraph kind must be {\"hn\": n}, \"h0inf\" or \"h1inf\"");
}

Word word_of(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ConfigError, "word must be an array of naturals");
    Word w;
    for (const auto& v : j) w.push_back(v.get<int>());
    return w;
}

json condition_json(const Condition& condition) {
    json elements = json::array();
    for (const Branch& b : condition.elements()) elements.push_back(b.support());
    return json{{"kind", kind_json(condition.kind())}, {"elements", std::move(elements)}};
}

json key_json(const SeparatorKey& key) {
    json nodes = json::array();
    for (const Node& t : key.nodes()) nodes.push_back(t.word());
    return json{{"kind", kind_json(key.kind())},
                {"nodes", std::move(nodes)},
                {"min_len", key.min_len()}};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw Error(ErrorCode::ConfigError, "malformed JSON");
    return j;
}

template <typename Fn> auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, e.what());
    }
}

} // namespace

std::string json_of(const TreeKind& kind) { return kind_json(kind).dump(); }
std::string json_of(const HypergraphKind& kind) { return kind_json(kind).dump(); }
std::string json_of(const Node& node) { return json(node.word()).dump(); }
std::string json_of(const Branch& branch) { return json(branch.support()).dump(); }
std::string json_of(const Condition& condition) { return condition_json(condition).dump(); }

std::string json_of(const Edge& edge) {
    json members = json::array();
    for (const Branch& b : edge.members) members.push_back(b.support());
    return json{{"kind", kind_json(edge.kind)},
                {"anchor", edge.anchor.word()},
                {"tail", edge.tail},
                {"members", std::move(members)}}
        .dump();
}

std::string json_of(const SeparatorKey& key) { return key_json(key).dump(); }

std::string json_of(const FinitePoset& poset) {
    json pairs = json::array();
    for (const auto& [a, b] : poset.strict_pairs()) pairs.push_back(json::array({a, b}));
    return json{{"size", poset.size()}, {"leq", std::move(pairs)}}.dump();
}

std::string json_of(const FiniteHypergraph& hypergraph) {
    json edges = json::array();
    for (const auto& edge : hypergraph.edges()) edges.push_back(edge);
    return json{{"vertices", hypergraph.vertices()}, {"edges", std::move(edges)}}.dump();
}

std::string json_of(const PartitionCertificate& cert) {
    return json{{"condition", cert.condition.describe()},
                {"parts", cert.parts()},
                {"labels", cert.labels}}
        .dump();
}

std::string json_of(const AntichainReport& report) {
    json witness = json::array();
    for (const Condition& c : report.witness) witness.push_back(json::parse(json_of(c)));
    return json{{"class_key", json::parse(json_of(report.class_key))},
                {"corpus_size", report.corpus_size},
                {"max_antichain_found", report.max_antichain_found},
                {"bound", report.bound},
                {"witness", std::move(witness)}}
        .dump();
}

TreeKind tree_kind_from_json(const std::string& text) {
    return guarded([&] { return tree_kind_of(parse(text)); });
}

HypergraphKind hypergraph_kind_from_json(const std::string& text) {
    return guarded([&] { return hypergraph_kind_of(parse(text)); });
}

Condition condition_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse(text);
        const HypergraphKind kind = hypergraph_kind_of(j.at("kind"));
        std::vector<Branch> elements;
        for (const auto& e : j.at("elements")) elements.emplace_back(kind.tree(), word_of(e));
        return Condition(kind, std::move(elements));
    });
}

SeparatorKey separator_key_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse(text);
        const HypergraphKind kind = hypergraph_kind_of(j.at("kind"));
        std::vector<Node> nodes;
        for (const auto& t : j.at("nodes")) nodes.emplace_back(kind.tree(), word_of(t));
        const int min_len = j.value("min_len", 1);
        return SeparatorKey(kind, std::move(nodes), min_len);
    });
}

FinitePoset finite_poset_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse(text);
        const int size = j.at("size").get<int>();
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : j.at("leq")) {
            if (!p.is_array() || p.size() != 2)
                throw Error(ErrorCode::ConfigError, "leq entries must be pairs");
            pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        }
        return FinitePoset::from_pairs(size, pairs);
    });
}

FiniteHypergraph finite_hypergraph_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse(text);
        const int vertices = j.at("vertices").get<int>();
        std::vector<std::vector<int>> edges;
        for (const auto& e : j.at("edges")) {
            std::vector<int> edge;
            for (const auto& v : e) edge.push_back(v.get<int>());
            edges.push_back(std::move(edge));
        }
        return FiniteHypergraph(vertices, std::move(edges));
    });
}

PrefixColoring coloring_from_json(const std::string& text) {
    return guarded([&] {
        const json j = parse(text);
        const TreeKind kind = tree_kind_of(j.at("kind"));
        const int depth = j.at("depth").get<int>();
        const int palette = j.at("palette").get<int>();
        std::map<Word, int> table;
        for (const auto& row : j.at("table"))
            table[word_of(row.at("word"))] = row.at("color").get<int>();
        return PrefixColoring::from_table(kind, depth, palette, table);
    });
}

} // namespace chaincond
