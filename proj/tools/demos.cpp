#include "demos.hpp"

#include <fstream>
#include <sstream>

#include "chaincond/adversary.hpp"
#include "chaincond/json_io.hpp"
#include "chaincond/random.hpp"
#include "chaincond/verifier.hpp"

namespace cctool {

using namespace chaincond;
using nlohmann::json;

namespace {

json witness_json(const std::vector<Branch>& members) {
    json out = json::array();
    for (const Branch& b : members) out.push_back(b.support());
    return out;
}

json key_json(const SeparatorKey& key) { return json::parse(json_of(key)); }

// sigma-finite side of the pair hypergraph: in-class cliques stay under the
// anchor length while growing with depth.
std::vector<Check> finite_cc_checks(uint64_t seed) {
    std::vector<Check> checks;
    const HypergraphKind h1 = HypergraphKind::h1_inf();
    for (int min_len = 1; min_len <= 3; ++min_len) {
        checks.push_back({"h1inf class cliques capped by anchors, min_len " +
                              std::to_string(min_len),
                          [min_len, h1] {
                              const Condition single(h1, {Branch(h1.tree(), {0, 1})});
                              const SeparatorKey key = class_key(single, min_len);
                              json depths = json::array();
                              for (int depth = key.length() + 1; depth <= 6; ++depth) {
                                  const H1CliqueReport r = check_h1_no_unbounded_clique(key, depth);
                                  if (r.max_clique > r.anchor_len)
                                      throw Error(ErrorCode::InvalidConfiguration,
                                                  "clique exceeds anchor length");
                                  depths.push_back({{"depth", depth},
                                                    {"max_clique", r.max_clique},
                                                    {"anchor_len", r.anchor_len}});
                              }
                              return json{{"key", key_json(key)}, {"depths", depths}};
                          }});
    }
    checks.push_back({"in-class cliques grow with depth", [] {
                          const SeparatorKey key(HypergraphKind::h1_inf(),
                                                 {Node(TreeKind::omega(), {0})}, 1);
                          const int shallow = check_h1_no_unbounded_clique(key, 4).max_clique;
                          const int deep = check_h1_no_unbounded_clique(key, 6).max_clique;
                          if (deep <= shallow)
                              throw Error(ErrorCode::InvalidConfiguration,
                                          "no growth across depth");
                          return json{{"depth4", shallow}, {"depth6", deep}};
                      }});
    for (int i = 0; i < 4; ++i) {
        checks.push_back({"mono clique of size 8, coloring seed " + std::to_string(seed + i),
                          [seed, i] {
                              const PrefixColoring c = PrefixColoring::seeded(
                                  TreeKind::omega(), i, 8, seed + static_cast<uint64_t>(i));
                              const MonochromeWitness w = find_mono_clique(c, 8);
                              return json{{"color", w.color}, {"members", witness_json(w.members)}};
                          }});
    }
    return checks;
}

std::vector<Check> bounded_cc_checks(uint64_t seed) {
    std::vector<Check> checks;
    const HypergraphKind h2 = HypergraphKind::hn(2);
    checks.push_back({"binary-tree class antichains below the color bound", [seed, h2] {
                          Rng rng(seed);
                          json classes = json::array();
                          for (int trial = 0; trial < 10; ++trial) {
                              const Condition p = sample_anti_clique(h2, 1 + rng.below(2), 6, rng);
                              const SeparatorKey key = class_key(p, 1);
                              const AntichainReport r =
                                  check_class_antichain_bound(key, key.length() + 3);
                              if (r.max_antichain_found >= r.bound)
                                  throw Error(ErrorCode::InvalidConfiguration,
                                              "antichain reached the bound");
                              classes.push_back({{"key", key_json(key)},
                                                 {"max", r.max_antichain_found},
                                                 {"bound", r.bound}});
                          }
                          return json{{"classes", classes}};
                      }});
    checks.push_back({"pair Ramsey number certified exactly", [] {
                          const RamseyCertificate cert = certify_two_color_triangle_bound();
                          if (!cert.k6_forced || !cert.k5_escape_found)
                              throw Error(ErrorCode::InvalidConfiguration,
                                          "triangle bound broke");
                          return json{{"k6_forced", true}, {"k5_escape", true}};
                      }});
    for (int i = 0; i < 4; ++i) {
        checks.push_back({"unbounded cliques defeat depth-4 colorings, seed " +
                              std::to_string(seed + 10 + i),
                          [seed, i] {
                              const PrefixColoring c = PrefixColoring::seeded(
                                  TreeKind::omega(), 4, 6, seed + 10 + static_cast<uint64_t>(i));
                              const MonochromeWitness w = find_mono_clique(c, 8);
                              return json{{"color", w.color}, {"size", w.members.size()}};
                          }});
    }
    return checks;
}

std::vector<Check> linked_checks(int n, uint64_t seed) {
    std::vector<Check> checks;
    const HypergraphKind kind = HypergraphKind::hn(n);
    checks.push_back({"classes are " + std::to_string(n - 1) + "-linked at depth", [kind, n, seed] {
                          Rng rng(seed);
                          json keys = json::array();
                          for (int trial = 0; trial < 8; ++trial) {
                              const Condition p = sample_anti_clique(kind, 2, 6, rng);
                              const SeparatorKey key = class_key(p, 1);
                              if (!check_class_linked(key, n, key.length() + 2))
                                  throw Error(ErrorCode::InvalidConfiguration,
                                              "class failed " + std::to_string(n - 1) +
                                                  "-linkedness");
                              keys.push_back(key_json(key));
                          }
                          return json{{"keys", keys}};
                      }});
    checks.push_back({"some class defeats " + std::to_string(n) + "-linkedness", [kind, n] {
                          const Condition pair = dense_anchored_pair(kind, 2);
                          const SeparatorKey key = class_key(pair, 1);
                          const LinkedCheck r =
                              check_class_linked_report(key, n + 1, key.length() + 2);
                          if (r.linked)
                              throw Error(ErrorCode::InvalidConfiguration,
                                          "expected a witnessed failure");
                          json members = json::array();
                          for (const Condition& m : r.counterexample)
                              members.push_back(json::parse(json_of(m)));
                          return json{{"key", key_json(key)}, {"counterexample", members}};
                      }});
    for (int i = 0; i < 4; ++i) {
        checks.push_back({"mono " + std::to_string(n) + "-edge, coloring seed " +
                              std::to_string(seed + 20 + i),
                          [kind, seed, i] {
                              const PrefixColoring c = PrefixColoring::seeded(
                                  kind.tree(), i, 5, seed + 20 + static_cast<uint64_t>(i));
                              const MonochromeWitness w = find_mono_edge(c, kind);
                              return json{{"color", w.color}, {"members", witness_json(w.members)}};
                          }});
    }
    return checks;
}

std::vector<Check> centred_checks(uint64_t seed) {
    std::vector<Check> checks;
    const HypergraphKind h0 = HypergraphKind::h0_inf();
    for (int n : {3, 4}) {
        checks.push_back({"classes with min_len " + std::to_string(n + 1) + " are " +
                              std::to_string(n) + "-linked",
                          [h0, n, seed] {
                              Rng rng(seed + static_cast<uint64_t>(n));
                              json keys = json::array();
                              for (int trial = 0; trial < 4; ++trial) {
                                  const Condition p = sample_anti_clique(h0, 2, 5, rng);
                                  const SeparatorKey key = class_key(p, n + 1);
                                  if (!check_class_linked(key, n + 1, key.length() + 1))
                                      throw Error(ErrorCode::InvalidConfiguration,
                                                  "class failed n-linkedness");
                                  keys.push_back(key_json(key));
                              }
                              return json{{"keys", keys}};
                          }});
    }
    for (int i = 0; i < 4; ++i) {
        checks.push_back({"non-centred family in one color class, seed " +
                              std::to_string(seed + 30 + i),
                          [seed, i] {
                              const PrefixColoring c = PrefixColoring::seeded(
                                  TreeKind::omega(), i, 4, seed + 30 + static_cast<uint64_t>(i));
                              const std::vector<Condition> family = refute_centred_class(c);
                              if (is_centred(family))
                                  throw Error(ErrorCode::InvalidConfiguration,
                                              "family is centred");
                              if (family.size() > 2 &&
                                  !is_n_linked(family, static_cast<int>(family.size()) - 1))
                                  throw Error(ErrorCode::InvalidConfiguration,
                                              "family lost short linkedness");
                              json singles = json::array();
                              for (const Condition& s : family)
                                  singles.push_back(json::parse(json_of(s)));
                              return json{{"family", singles}};
                          }});
    }
    return checks;
}

} // namespace

Report demo_separation(const std::string& which, uint64_t seed) {
    Report report("demo", json{{"which", which}}, seed);
    if (which == "finite-cc") {
        report.run_all(finite_cc_checks(seed));
    } else if (which == "bounded-cc") {
        report.run_all(bounded_cc_checks(seed));
    } else if (which == "centred") {
        report.run_all(centred_checks(seed));
    } else if (which.rfind("linked:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(which.substr(7));
        } catch (...) {
            throw Error(ErrorCode::UnknownSelector, "bad linkedness level in " + which);
        }
        if (n < 3) throw Error(ErrorCode::UnknownSelector, "linked:<n> needs n >= 3");
        report.run_all(linked_checks(n, seed));
    } else {
        throw Error(ErrorCode::UnknownSelector, which);
    }
    return report;
}

Report run_suite(const std::string& config_path, uint64_t seed_override, bool has_seed) {
    std::ifstream in(config_path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    json config = json::parse(buffer.str(), nullptr, false);
    if (config.is_discarded())
        throw Error(ErrorCode::ConfigError, "malformed JSON in " + config_path);
    if (!config.is_object() || !config.contains("checks") || !config["checks"].is_array())
        throw Error(ErrorCode::ConfigError, "config needs a \"checks\" array");

    uint64_t seed = 42;
    if (config.contains("seed")) {
        if (!config["seed"].is_number_unsigned())
            throw Error(ErrorCode::ConfigError, "seed must be a nonnegative integer");
        seed = config["seed"].get<uint64_t>();
    }
    if (has_seed) seed = seed_override;

    Report report("suite", json{{"config", config_path}}, seed);
    size_t index = 0;
    for (const json& check : config["checks"]) {
        const std::string where = "checks[" + std::to_string(index++) + "]";
        if (!check.is_object() || !check.contains("type"))
            throw Error(ErrorCode::ConfigError, where + " needs a \"type\"");
        const std::string type = check["type"].get<std::string>();
        if (type == "demo") {
            if (!check.contains("which"))
                throw Error(ErrorCode::ConfigError, where + " demo needs \"which\"");
            Report inner = demo_separation(check["which"].get<std::string>(), seed);
            report.add({"demo " + check["which"].get<std::string>(), inner.all_pass(),
                        inner.to_json()});
        } else if (type == "adversary") {
            const json kind_spec = check.value("kind", json("h1inf"));
            const int depth = check.value("depth", 2);
            const int clique = check.value("clique", 0);
            report.add([&] {
                CheckResult r;
                r.name = "adversary " + kind_spec.dump();
                try {
                    const HypergraphKind kind = hypergraph_kind_from_json(kind_spec.dump());
                    const PrefixColoring c =
                        PrefixColoring::seeded(kind.tree(), depth, 4, seed);
                    const MonochromeWitness w = clique >= 2
                                                    ? find_mono_clique(c, clique)
                                                    : find_mono_edge(c, kind);
                    r.pass = true;
                    r.details = json{{"color", w.color}, {"size", w.members.size()}};
                } catch (const std::exception& e) {
                    r.pass = false;
                    r.details = json{{"error", e.what()}};
                }
                return r;
            }());
        } else {
            throw Error(ErrorCode::ConfigError, where + " has unknown type " + type);
        }
    }
    return report;
}

} // namespace cctool
