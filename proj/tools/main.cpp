#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chaincond/adversary.hpp"
#include "chaincond/json_io.hpp"
#include "chaincond/verifier.hpp"
#include "demos.hpp"
#include "report.hpp"

using namespace chaincond;
using cctool::Report;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

HypergraphKind parse_kind(const std::string& text) {
    if (text == "h0inf") return HypergraphKind::h0_inf();
    if (text == "h1inf") return HypergraphKind::h1_inf();
    if (text.rfind("hn:", 0) == 0) {
        try {
            return HypergraphKind::hn(std::stoi(text.substr(3)));
        } catch (const Error&) {
            throw;
        } catch (...) {
        }
    }
    throw Error(ErrorCode::UnknownSelector, "kind must be hn:<n>, h0inf or h1inf");
}

PartitionCondition parse_condition(const std::string& text) {
    if (text == "linked") return PartitionCondition::linked();
    if (text == "centred") return PartitionCondition::centred();
    if (text.rfind("nlinked:", 0) == 0) return PartitionCondition::n_linked(std::stoi(text.substr(8)));
    if (text.rfind("antichain-lt:", 0) == 0)
        return PartitionCondition::antichain_lt(std::stoi(text.substr(13)));
    throw Error(ErrorCode::UnknownSelector,
                "condition must be linked, centred, nlinked:<n> or antichain-lt:<n>");
}

json witness_json(const std::vector<Branch>& members) {
    json out = json::array();
    for (const Branch& b : members) out.push_back(b.support());
    return out;
}

int run_verify_class(const std::string& kind_text, const std::string& key_path,
                     const std::string& cond_path, int depth, int level, int min_len,
                     const std::string& json_path, uint64_t seed) {
    const HypergraphKind kind = parse_kind(kind_text);
    SeparatorKey key = [&] {
        if (!key_path.empty()) return separator_key_from_json(slurp(key_path));
        if (cond_path.empty())
            throw Error(ErrorCode::ConfigError, "verify class needs --key or --condition");
        return class_key(condition_from_json(slurp(cond_path)), min_len);
    }();
    if (key.kind() != kind)
        throw Error(ErrorCode::KindMismatch, "key kind differs from --kind");
    const int effective_depth = depth > 0 ? depth : key.length() + 2;

    Report report("verify class",
                  json{{"kind", kind_text}, {"depth", effective_depth}, {"level", level}}, seed);
    if (kind.family() == EdgeFamily::Hn && kind.arity() == 2) {
        report.run_all({{"antichain bound", [&] {
                             const AntichainReport r =
                                 check_class_antichain_bound(key, effective_depth);
                             if (r.max_antichain_found >= r.bound)
                                 throw Error(ErrorCode::InvalidConfiguration,
                                             "antichain reached the bound");
                             return json::parse(json_of(r));
                         }}});
    } else if (kind.family() == EdgeFamily::H1Inf) {
        report.run_all({{"clique cap", [&] {
                             const H1CliqueReport r =
                                 check_h1_no_unbounded_clique(key, effective_depth);
                             if (r.max_clique > r.anchor_len)
                                 throw Error(ErrorCode::InvalidConfiguration,
                                             "clique exceeds anchor length");
                             return json{{"max_clique", r.max_clique},
                                         {"anchor_len", r.anchor_len},
                                         {"witness", witness_json(r.witness)}};
                         }}});
    } else {
        const int n = level > 0 ? level
                                : (kind.family() == EdgeFamily::Hn ? kind.arity()
                                                                   : key.min_len());
        report.run_all({{std::to_string(n - 1) + "-linkedness", [&, n] {
                             const LinkedCheck r =
                                 check_class_linked_report(key, n, effective_depth);
                             if (!r.linked) {
                                 json members = json::array();
                                 for (const Condition& m : r.counterexample)
                                     members.push_back(json::parse(json_of(m)));
                                 throw Error(ErrorCode::InvalidConfiguration,
                                             "counterexample: " + members.dump());
                             }
                             return json{{"linked", true}, {"key", json::parse(json_of(key))}};
                         }}});
    }
    return report.emit(json_path);
}

int run_adversary(const std::string& kind_text, int depth, int palette, int clique, bool refute,
                  const std::string& coloring_path, uint64_t seed, const std::string& json_path) {
    const HypergraphKind kind = parse_kind(kind_text);
    const PrefixColoring coloring =
        coloring_path.empty() ? PrefixColoring::seeded(kind.tree(), depth, palette, seed)
                              : coloring_from_json(slurp(coloring_path));
    Report report("adversary",
                  json{{"kind", kind_text},
                       {"depth", coloring.depth()},
                       {"palette", coloring.palette_size()},
                       {"clique", clique},
                       {"refute_centred", refute}},
                  seed);
    std::vector<cctool::Check> checks;
    if (refute) {
        checks.push_back({"non-centred family in one color class", [&] {
                              const std::vector<Condition> family = refute_centred_class(coloring);
                              if (is_centred(family))
                                  throw Error(ErrorCode::InvalidConfiguration, "family is centred");
                              json singles = json::array();
                              for (const Condition& s : family)
                                  singles.push_back(json::parse(json_of(s)));
                              return json{{"family", singles}};
                          }});
    } else if (clique >= 2 || kind.family() == EdgeFamily::H1Inf) {
        const int m = clique >= 2 ? clique : 2;
        checks.push_back({"monochromatic clique of size " + std::to_string(m), [&, m] {
                              const MonochromeWitness w = find_mono_clique(coloring, m);
                              return json{{"color", w.color},
                                          {"anchor", w.anchor.word()},
                                          {"members", witness_json(w.members)}};
                          }});
    } else {
        checks.push_back({"monochromatic edge", [&] {
                              const MonochromeWitness w = find_mono_edge(coloring, kind);
                              return json{{"color", w.color},
                                          {"anchor", w.anchor.word()},
                                          {"members", witness_json(w.members)}};
                          }});
    }
    report.run_all(checks);
    return report.emit(json_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain-condition laboratory for tree hypergraph posets"};
    app.require_subcommand(1);

    std::string json_path;
    uint64_t seed = 42;
    app.add_option("--json", json_path, "write the JSON report here")->capture_default_str();
    app.add_option("--seed", seed, "seed echoed into reports and generators")
        ->capture_default_str();

    // demo
    auto* demo = app.add_subcommand("demo", "paired positive/negative separation evidence");
    std::string which;
    demo->add_option("--which", which, "finite-cc | bounded-cc | linked:<n> | centred")
        ->required();

    // verify
    auto* verify = app.add_subcommand("verify", "class-level verification");
    auto* verify_class = verify->add_subcommand("class", "verify one partition class");
    std::string v_kind, v_key, v_cond;
    int v_depth = 0, v_level = 0, v_min_len = 1;
    verify_class->add_option("--kind", v_kind, "hn:<n> | h0inf | h1inf")->required();
    verify_class->add_option("--key", v_key, "separator key JSON file");
    verify_class->add_option("--condition", v_cond, "condition JSON file ('-' for stdin)");
    verify_class->add_option("--depth", v_depth, "support bound (default key length + 2)");
    verify_class->add_option("--level", v_level, "linkedness parameter n (checks n-1 subsets)");
    verify_class->add_option("--min-len", v_min_len, "min key length when deriving from a condition");

    // adversary
    auto* adversary = app.add_subcommand("adversary", "defeat prefix-determined colorings");
    std::string a_kind = "h1inf", a_coloring;
    int a_depth = 2, a_palette = 4, a_clique = 0;
    bool a_refute = false;
    adversary->add_option("--kind", a_kind, "hn:<n> | h0inf | h1inf")->capture_default_str();
    adversary->add_option("--depth", a_depth, "coloring depth")->capture_default_str();
    adversary->add_option("--palette", a_palette, "palette size")->capture_default_str();
    adversary->add_option("--clique", a_clique, "monochromatic clique size (h1inf)");
    adversary->add_option("--coloring", a_coloring, "coloring table JSON file");
    adversary->add_flag("--refute-centred", a_refute, "emit a non-centred one-color family");

    // partition
    auto* partition = app.add_subcommand("partition", "separator keys and class membership");
    auto* partition_key = partition->add_subcommand("key", "compute the class key of a condition");
    std::string pk_in;
    int pk_min_len = 1;
    partition_key->add_option("--in", pk_in, "condition JSON file ('-' for stdin)")->required();
    partition_key->add_option("--min-len", pk_min_len, "minimum key length")->capture_default_str();
    auto* partition_member =
        partition->add_subcommand("check-membership", "does a condition belong to a class?");
    std::string pm_key, pm_in;
    partition_member->add_option("--key", pm_key, "separator key JSON file")->required();
    partition_member->add_option("--in", pm_in, "condition JSON file ('-' for stdin)")->required();

    // poset
    auto* poset = app.add_subcommand("poset", "finite poset analysis");
    auto* poset_analyze = poset->add_subcommand("analyze", "exact minimal partition numbers");
    std::string pa_file, pa_condition = "linked";
    poset_analyze->add_option("file", pa_file, "poset JSON file")->required();
    poset_analyze
        ->add_option("--condition", pa_condition, "linked | centred | nlinked:<n> | antichain-lt:<n>")
        ->capture_default_str();
    auto* poset_gh = poset->add_subcommand("gh-demo", "amplify an antichain on the demo poset");
    int gh_n = 3;
    poset_gh->add_option("--n", gh_n, "chain-condition level")->capture_default_str();

    // hypergraph
    auto* hyper = app.add_subcommand("hypergraph", "finite hypergraph constructions");
    auto* hyper_sigma =
        hyper->add_subcommand("sigma-centred", "component-trace partition certificate");
    std::string hs_file;
    hyper_sigma->add_option("file", hs_file, "hypergraph JSON file")->required();

    // suite
    auto* suite = app.add_subcommand("suite", "run a declared list of checks");
    std::string suite_config;
    suite->add_option("config", suite_config, "suite config JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (demo->parsed()) return cctool::demo_separation(which, seed).emit(json_path);
        if (verify_class->parsed())
            return run_verify_class(v_kind, v_key, v_cond, v_depth, v_level, v_min_len, json_path,
                                    seed);
        if (adversary->parsed())
            return run_adversary(a_kind, a_depth, a_palette, a_clique, a_refute, a_coloring, seed,
                                 json_path);
        if (partition_key->parsed()) {
            const Condition p = condition_from_json(slurp(pk_in));
            std::cout << json_of(class_key(p, pk_min_len)) << "\n";
            return 0;
        }
        if (partition_member->parsed()) {
            const SeparatorKey key = separator_key_from_json(slurp(pm_key));
            const Condition q = condition_from_json(slurp(pm_in));
            const bool member = member_of(q, key);
            std::cout << json{{"member", member}}.dump() << "\n";
            return member ? 0 : 1;
        }
        if (poset_analyze->parsed()) {
            const FinitePoset p = finite_poset_from_json(slurp(pa_file));
            const PartitionCondition condition = parse_condition(pa_condition);
            Report report("poset analyze",
                          json{{"file", pa_file}, {"condition", pa_condition}}, seed);
            report.run_all({{"minimal " + condition.describe() + " partition", [&] {
                                 const auto [count, cert] = min_parts(p, condition);
                                 if (!check_partition(p, cert))
                                     throw Error(ErrorCode::InvalidConfiguration,
                                                 "certificate failed revalidation");
                                 return json{{"parts", count},
                                             {"certificate", json::parse(json_of(cert))}};
                             }}});
            return report.emit(json_path);
        }
        if (poset_gh->parsed()) {
            Report report("poset gh-demo", json{{"n", gh_n}}, seed);
            report.run_all({{"amplified antichain", [&] {
                                 const auto [p, cfg] = gh_demo_poset();
                                 if (gh_n != cfg.n)
                                     throw Error(ErrorCode::UnknownSelector,
                                                 "demo poset is built for n = 3");
                                 const std::vector<int> antichain = gh_amplify(p, cfg);
                                 return json{{"size", antichain.size()},
                                             {"elements", antichain}};
                             }}});
            return report.emit(json_path);
        }
        if (hyper_sigma->parsed()) {
            const FiniteHypergraph h = finite_hypergraph_from_json(slurp(hs_file));
            Report report("hypergraph sigma-centred", json{{"file", hs_file}}, seed);
            report.run_all({{"component-trace partition is centred", [&] {
                                 const PartitionCertificate cert = sigma_centred_partition(h);
                                 const LabeledPoset labeled = condition_poset_of(h);
                                 if (!check_partition(labeled.poset, cert))
                                     throw Error(ErrorCode::InvalidConfiguration,
                                                 "certificate failed revalidation");
                                 return json{{"conditions", labeled.poset.size()},
                                             {"parts", cert.parts()}};
                             }}});
            return report.emit(json_path);
        }
        if (suite->parsed())
            return cctool::run_suite(suite_config, seed,
                                     app.count("--seed") > 0)
                .emit(json_path);
    } catch (const Error& e) {
        const bool usage = e.code() == ErrorCode::ConfigError ||
                           e.code() == ErrorCode::UnknownSelector;
        std::cerr << "error: " << e.what() << "\n";
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
