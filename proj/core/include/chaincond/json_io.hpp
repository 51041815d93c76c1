#pragma once

#include <string>

#include "chaincond/adversary.hpp"
#include "chaincond/finite_poset.hpp"
#include "chaincond/verifier.hpp"

namespace chaincond {

// Wire formats (kinds appear as {"arity": n} / "omega" and {"hn": n} /
// "h0inf" / "h1inf"; nodes and branches are bare arrays of naturals):
//   Condition        {"kind", "elements": [[..], ..]}
//   Edge             {"kind", "anchor", "tail", "members"}
//   SeparatorKey     {"kind", "nodes", "min_len"}
//   FinitePoset      {"size", "leq": [[a, b], ..]}   (a <= b, reflexive optional)
//   FiniteHypergraph {"vertices", "edges": [[..], ..]}
//   PrefixColoring   {"kind", "depth", "palette", "table": [{"word", "color"}, ..]}

std::string json_of(const TreeKind& kind);
std::string json_of(const HypergraphKind& kind);
std::string json_of(const Node& node);
std::string json_of(const Branch& branch);
std::string json_of(const Condition& condition);
std::string json_of(const Edge& edge);
std::string json_of(const SeparatorKey& key);
std::string json_of(const FinitePoset& poset);
std::string json_of(const FiniteHypergraph& hypergraph);
std::string json_of(const PartitionCertificate& cert);
std::string json_of(const AntichainReport& report);

TreeKind tree_kind_from_json(const std::string& text);
HypergraphKind hypergraph_kind_from_json(const std::string& text);
Condition condition_from_json(const std::string& text);
SeparatorKey separator_key_from_json(const std::string& text);
FinitePoset finite_poset_from_json(const std::string& text);
FiniteHypergraph finite_hypergraph_from_json(const std::string& text);
PrefixColoring coloring_from_json(const std::string& text);

} // namespace chaincond
