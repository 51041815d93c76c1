#pragma once

#include <span>
#include <vector>

#include "chaincond/hypergraph.hpp"

namespace chaincond {

/// A forcing condition: a finite anti-clique, ordered by reverse inclusion.
/// The empty condition is the maximum element.
class Condition {
public:
    Condition(HypergraphKind kind, std::vector<Branch> elements);
    static Condition empty(HypergraphKind kind) { return Condition(std::move(kind), {}); }

    const HypergraphKind& kind() const { return kind_; }
    const std::vector<Branch>& elements() const { return elements_; } // sorted, distinct
    int size() const { return static_cast<int>(elements_.size()); }

    friend bool operator==(const Condition&, const Condition&) = default;
    friend std::strong_ordering operator<=>(const Condition& a, const Condition& b) {
        return a.elements_ <=> b.elements_;
    }
    std::string describe() const;

private:
    HypergraphKind kind_;
    std::vector<Branch> elements_;
};

/// q <= p in the reverse-inclusion order (q extends p).
bool leq(const Condition& q, const Condition& p);

/// True iff the union of the two conditions is again an anti-clique; the
/// union is then the witnessing common extension.
bool compatible(const Condition& p, const Condition& q);

/// Every n-element subset of A has a common extension (the union of each
/// n-subset is an anti-clique). Vacuously true when |A| < n.
bool is_n_linked(std::span<const Condition> A, int n);

/// The union of everything in A is an anti-clique.
bool is_centred(std::span<const Condition> A);

/// A is pairwise incompatible.
bool is_antichain(std::span<const Condition> A);

/// Union of the elements of all members of A (sorted, distinct).
std::vector<Branch> element_union(std::span<const Condition> A);

} // namespace chaincond
