#include "chaincond/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chaincond {

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case3: return "case3";
    case CaseTag::Singleton: return "singleton";
    }
    return "?";
}

CaseTag classify(const Condition& p) {
    const auto& xs = p.elements();
    if (xs.size() <= 1) return CaseTag::Singleton;
    const DenseSequence dense(p.kind().tree());
    std::vector<Node> deltas;
    for (size_t a = 0; a < xs.size(); ++a)
        for (size_t b = a + 1; b < xs.size(); ++b) deltas.push_back(delta(xs[a], xs[b]));
    for (const Node& d : deltas)
        if (!dense.contains(d)) return CaseTag::Case1;
    for (const Node& d : deltas)
        if (d != deltas.front()) return CaseTag::Case2;
    return CaseTag::Case3;
}

SeparatorKey::SeparatorKey(HypergraphKind kind, std::vector<Node> nodes, int min_len)
    : kind_(std::move(kind)), nodes_(std::move(nodes)), min_len_(min_len) {
    if (min_len_ < 1) throw Error(ErrorCode::BadArity, "min_len must be at least 1");
    if (nodes_.empty()) throw Error(ErrorCode::EmptyCondition, "separator key has no nodes");
    const int len = nodes_.front().length();
    if (len < min_len_)
        throw Error(ErrorCode::InvalidConfiguration, "key nodes shorter than min_len");
    for (const Node& t : nodes_) {
        if (t.kind() != kind_.tree())
            throw Error(ErrorCode::KindMismatch, "key node kind differs from hypergraph tree");
        if (t.length() != len)
            throw Error(ErrorCode::InvalidConfiguration, "key nodes have unequal lengths");
    }
    for (size_t a = 0; a < nodes_.size(); ++a)
        for (size_t b = a + 1; b < nodes_.size(); ++b)
            if (nodes_[a] == nodes_[b])
                throw Error(ErrorCode::InvalidConfiguration, "key nodes are not distinct");
}

std::string SeparatorKey::describe() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < nodes_.size(); ++i) {
        if (i) out << ',';
        out << nodes_[i].describe();
    }
    out << ')';
    return out.str();
}

namespace {

// First index strictly above `from` where the branches differ, or -1.
int first_diff_above(const Branch& x, const Branch& y, int from) {
    const int limit = std::max(x.support_length(), y.support_length());
    for (int i = from + 1; i < limit; ++i)
        if (x.at(i) != y.at(i)) return i;
    return -1;
}

// Cut needed to block every edge pattern seated at the dense meet `d`:
// for each selection of one element per required entry bucket, find the
// first differing pair above |d| (in element order) and cut past it.
int blocking_cut(const HypergraphKind& kind, const std::vector<Branch>& xs, const Node& d) {
    const int len = d.length();
    std::map<int, std::vector<int>> buckets; // entry at |d| -> element indices through d
    for (size_t i = 0; i < xs.size(); ++i)
        if (extends(xs[i], d)) buckets[xs[i].at(len)].push_back(static_cast<int>(i));

    auto block_for = [&](const std::vector<int>& subset) {
        for (size_t a = 0; a < subset.size(); ++a) {
            for (size_t b = a + 1; b < subset.size(); ++b) {
                const int at = first_diff_above(xs[static_cast<size_t>(subset[a])],
                                                xs[static_cast<size_t>(subset[b])], len);
                if (at >= 0) return at + 1;
            }
        }
        // The subset would itself be an edge inside the anti-clique.
        throw Error(ErrorCode::NotAnAntiClique, "edge pattern with no separating index");
    };

    int cut = 0;
    switch (kind.family()) {
    case EdgeFamily::Hn:
    case EdgeFamily::H0Inf: {
        const int required = kind.family() == EdgeFamily::Hn ? kind.arity() : len;
        if (kind.family() == EdgeFamily::H0Inf && len < 2) break;
        bool covered = true;
        for (int e = 0; e < required && covered; ++e) covered = buckets.count(e) > 0;
        if (!covered) break;
        // One element per required entry; walk every combination.
        std::vector<int> pick(static_cast<size_t>(required), 0);
        for (;;) {
            std::vector<int> subset;
            subset.reserve(static_cast<size_t>(required));
            for (int e = 0; e < required; ++e)
                subset.push_back(buckets[e][static_cast<size_t>(pick[static_cast<size_t>(e)])]);
            std::sort(subset.begin(), subset.end());
            cut = std::max(cut, block_for(subset));
            int pos = required - 1;
            while (pos >= 0 &&
                   pick[static_cast<size_t>(pos)] + 1 ==
                       static_cast<int>(buckets[pos].size()))
                --pos;
            if (pos < 0) break;
            ++pick[static_cast<size_t>(pos)];
            for (int e = pos + 1; e < required; ++e) pick[static_cast<size_t>(e)] = 0;
        }
        break;
    }
    case EdgeFamily::H1Inf: {
        // Danger pairs: distinct entries, both below |d|.
        std::vector<std::pair<int, std::vector<int>>> low;
        for (const auto& [entry, idx] : buckets)
            if (entry < len) low.emplace_back(entry, idx);
        for (size_t a = 0; a < low.size(); ++a) {
            for (size_t b = a + 1; b < low.size(); ++b) {
                for (int i : low[a].second) {
                    for (int j : low[b].second) {
                        cut = std::max(cut, block_for({std::min(i, j), std::max(i, j)}));
                    }
                }
            }
        }
        break;
    }
    }
    return cut;
}

} // namespace

SeparatorKey separator(const Condition& p, int min_len) {
    if (min_len < 1) throw Error(ErrorCode::BadArity, "min_len must be at least 1");
    if (p.size() == 0) throw Error(ErrorCode::EmptyCondition, "no separator for the empty condition");
    const auto& xs = p.elements();

    int cut = 1;
    if (xs.size() >= 2) {
        const DenseSequence dense(p.kind().tree());
        std::set<Node> dense_meets;
        for (size_t a = 0; a < xs.size(); ++a) {
            for (size_t b = a + 1; b < xs.size(); ++b) {
                Node d = delta(xs[a], xs[b]);
                cut = std::max(cut, d.length() + 1);
                if (dense.contains(d)) dense_meets.insert(std::move(d));
            }
        }
        for (const Node& d : dense_meets) cut = std::max(cut, blocking_cut(p.kind(), xs, d));
    }
    cut = std::max(cut, min_len);

    std::vector<Node> nodes;
    nodes.reserve(xs.size());
    for (const Branch& x : xs) nodes.push_back(x.prefix(cut));
    return SeparatorKey(p.kind(), std::move(nodes), min_len);
}

SeparatorKey class_key(const Condition& p, int min_len) { return separator(p, min_len); }

bool member_of(const Condition& q, const SeparatorKey& key) {
    if (q.kind() != key.kind())
        throw Error(ErrorCode::KindMismatch,
                    q.kind().describe() + " vs " + key.kind().describe());
    if (q.size() != key.size()) return false;
    std::vector<bool> matched(key.nodes().size(), false);
    for (const Branch& y : q.elements()) {
        bool found = false;
        for (size_t i = 0; i < key.nodes().size(); ++i) {
            if (extends(y, key.nodes()[i])) {
                if (matched[i]) return false;
                matched[i] = true;
                found = true;
                break; // nodes are same-length distinct: at most one matches
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Branch> extensions_below(const Node& t, int depth) {
    if (depth < 0) throw Error(ErrorCode::IndexOutOfRange, "depth must be nonnegative");
    std::vector<Branch> out;
    if (t.length() >= depth) {
        Word w = t.word();
        while (!w.empty() && w.back() == 0) w.pop_back();
        if (static_cast<int>(w.size()) <= depth) out.emplace_back(t.kind(), std::move(w));
        return out;
    }
    Word current = t.word();
    auto emit = [&](auto&& self, int index) -> void {
        if (index == depth) {
            out.emplace_back(t.kind(), current);
            return;
        }
        const int deg = t.kind().degree_at(index);
        for (int v = 0; v < deg; ++v) {
            current.push_back(v);
            self(self, index + 1);
            current.pop_back();
        }
    };
    emit(emit, t.length());
    return out;
}

std::vector<Condition> class_members(const SeparatorKey& key, int depth) {
    std::vector<std::vector<Branch>> ext;
    ext.reserve(key.nodes().size());
    for (const Node& t : key.nodes()) {
        ext.push_back(extensions_below(t, depth));
        if (ext.back().empty()) return {};
    }
    std::vector<Condition> out;
    std::vector<size_t> pick(ext.size(), 0);
    std::vector<Branch> tuple;
    for (;;) {
        tuple.clear();
        for (size_t i = 0; i < ext.size(); ++i) tuple.push_back(ext[i][pick[i]]);
        if (is_anti_clique(key.kind(), tuple)) out.emplace_back(key.kind(), tuple);
        size_t pos = ext.size();
        while (pos > 0 && pick[pos - 1] + 1 == ext[pos - 1].size()) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (size_t i = pos; i < ext.size(); ++i) pick[i] = 0;
    }
    return out;
}

} // namespace chaincond
