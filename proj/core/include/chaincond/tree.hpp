#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chaincond/error.hpp"

namespace chaincond {

using Word = std::vector<int>;

/// Identifies the ambient tree: fixed arity n >= 2 (nodes are words over
/// {0..n-1}), or the growing-arity tree where the entry at index k may be
/// any value in {0..k} (branching degree k+1 at level k).
class TreeKind {
public:
    static TreeKind arity(int n);
    static TreeKind omega();

    bool is_omega() const { return n_ == 0; }
    int arity_value() const;

    /// Number of legal entries at the given index.
    int degree_at(int index) const { return is_omega() ? index + 1 : n_; }
    bool entry_ok(int index, int entry) const {
        return entry >= 0 && entry < degree_at(index);
    }
    /// Throws EntryOutOfRange unless every entry of `w` is legal when the
    /// word starts at absolute index `offset`.
    void check_word(int offset, const Word& w) const;

    friend bool operator==(const TreeKind&, const TreeKind&) = default;
    std::string describe() const;

private:
    explicit TreeKind(int n) : n_(n) {}
    int n_; // 0 encodes the growing-arity tree
};

/// A finite tree node: a word of legal entries.
class Node {
public:
    Node(TreeKind kind, Word word);

    const TreeKind& kind() const { return kind_; }
    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    int at(int i) const { return word_[static_cast<size_t>(i)]; }

    Node prefix(int len) const;
    bool is_prefix_of(const Node& other) const;

    friend bool operator==(const Node&, const Node&) = default;
    friend std::strong_ordering operator<=>(const Node& a, const Node& b);
    std::string describe() const;

private:
    TreeKind kind_;
    Word word_;
};

/// A finitely supported infinite branch: x(i) = support[i] for i < |support|
/// and 0 beyond. Canonical form: the support is empty or ends in a nonzero
/// entry, so branch equality is support equality.
class Branch {
public:
    Branch(TreeKind kind, Word support);
    static Branch all_zero(TreeKind kind) { return Branch(kind, {}); }

    const TreeKind& kind() const { return kind_; }
    const Word& support() const { return support_; }
    int support_length() const { return static_cast<int>(support_.size()); }

    /// Entry at any index (0 beyond the support).
    int at(int i) const {
        return i < support_length() ? support_[static_cast<size_t>(i)] : 0;
    }

    /// Initial segment of length `len` as a Node.
    Node prefix(int len) const;

    friend bool operator==(const Branch&, const Branch&) = default;
    friend std::strong_ordering operator<=>(const Branch& a, const Branch& b);
    std::string describe() const;

private:
    TreeKind kind_;
    Word support_;
};

/// The canonical one-node-per-level dense set: level k holds the k-th node
/// of the length-lexicographic enumeration, padded with zeros to length k.
/// Every node s is end-extended by the node at level index_of(s).
class DenseSequence {
public:
    explicit DenseSequence(TreeKind kind) : kind_(kind) {}

    const TreeKind& kind() const { return kind_; }

    /// The unique member at level k.
    Node node_at(long long k) const;

    /// True iff t is the level-|t| member.
    bool contains(const Node& t) const;

    /// Position of `s` in the length-lex enumeration of all nodes
    /// (node_at(index_of(s)) end-extends s).
    long long index_of(const Node& s) const;

private:
    TreeKind kind_;
};

/// Longest common initial segment of two distinct same-kind branches.
Node delta(const Branch& x, const Branch& y);

/// The branch d⌢i⌢x (i at index |d|, x shifted past it), in canonical form.
Branch concat_branch(const Node& d, int i, const Branch& x);

/// True iff y end-extends t (implicit zeros count).
bool extends(const Branch& y, const Node& t);

} // namespace chaincond
