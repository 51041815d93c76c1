#include "chaincond/condition.hpp"

#include <algorithm>
#include <sstream>

namespace chaincond {

namespace {

void check_same_kind(const Condition& a, const Condition& b) {
    if (a.kind() != b.kind())
        throw Error(ErrorCode::KindMismatch,
                    a.kind().describe() + " vs " + b.kind().describe());
}

void check_family_kind(std::span<const Condition> A) {
    for (size_t i = 1; i < A.size(); ++i) check_same_kind(A[0], A[i]);
}

} // namespace

Condition::Condition(HypergraphKind kind, std::vector<Branch> elements)
    : kind_(std::move(kind)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (!is_anti_clique(kind_, elements_))
        throw Error(ErrorCode::NotAnAntiClique, "condition elements contain an edge");
}

std::string Condition::describe() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (i) out << ',';
        out << elements_[i].describe();
    }
    out << '}';
    return out.str();
}

bool leq(const Condition& q, const Condition& p) {
    check_same_kind(q, p);
    return std::includes(q.elements().begin(), q.elements().end(),
                         p.elements().begin(), p.elements().end());
}

std::vector<Branch> element_union(std::span<const Condition> A) {
    std::vector<Branch> all;
    for (const Condition& c : A)
        all.insert(all.end(), c.elements().begin(), c.elements().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool compatible(const Condition& p, const Condition& q) {
    check_same_kind(p, q);
    const Condition pair[] = {p, q};
    return is_anti_clique(p.kind(), element_union(pair));
}

bool is_n_linked(std::span<const Condition> A, int n) {
    if (n < 2) throw Error(ErrorCode::BadArity, "linkedness level must be at least 2");
    check_family_kind(A);
    const int m = static_cast<int>(A.size());
    if (m < n) return true;
    // enumerate n-subsets via a moving index vector
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    std::vector<Condition> subset;
    for (;;) {
        subset.clear();
        for (int i : idx) subset.push_back(A[static_cast<size_t>(i)]);
        if (!is_anti_clique(A[0].kind(), element_union(subset))) return false;
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - n + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < n; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
    return true;
}

bool is_centred(std::span<const Condition> A) {
    if (A.empty()) return true;
    check_family_kind(A);
    return is_anti_clique(A[0].kind(), element_union(A));
}

bool is_antichain(std::span<const Condition> A) {
    check_family_kind(A);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            if (compatible(A[i], A[j])) return false;
    return true;
}

} // namespace chaincond
