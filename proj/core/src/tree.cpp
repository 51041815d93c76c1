#include "chaincond/tree.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace chaincond {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::EqualBranches: return "EqualBranches";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::EmptyCondition: return "EmptyCondition";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::NotAnAntiClique: return "NotAnAntiClique";
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::UnknownSelector: return "UnknownSelector";
    }
    return "UnknownError";
}

namespace {

std::string word_to_string(const Word& w) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ',';
        out << w[i];
    }
    out << ']';
    return out.str();
}

} // namespace

TreeKind TreeKind::arity(int n) {
    if (n < 2) throw Error(ErrorCode::BadArity, "tree arity must be at least 2");
    return TreeKind(n);
}

TreeKind TreeKind::omega() { return TreeKind(0); }

int TreeKind::arity_value() const {
    if (is_omega()) throw Error(ErrorCode::KindMismatch, "growing-arity tree has no fixed arity");
    return n_;
}

void TreeKind::check_word(int offset, const Word& w) const {
    for (size_t j = 0; j < w.size(); ++j) {
        const int index = offset + static_cast<int>(j);
        if (!entry_ok(index, w[j])) {
            throw Error(ErrorCode::EntryOutOfRange,
                        "entry " + std::to_string(w[j]) + " illegal at index " +
                            std::to_string(index) + " for " + describe());
        }
    }
}

std::string TreeKind::describe() const {
    return is_omega() ? std::string("omega") : "arity(" + std::to_string(n_) + ")";
}

Node::Node(TreeKind kind, Word word) : kind_(kind), word_(std::move(word)) {
    kind_.check_word(0, word_);
}

Node Node::prefix(int len) const {
    if (len < 0 || len > length())
        throw Error(ErrorCode::IndexOutOfRange, "node prefix length " + std::to_string(len));
    return Node(kind_, Word(word_.begin(), word_.begin() + len));
}

bool Node::is_prefix_of(const Node& other) const {
    if (kind_ != other.kind_ || length() > other.length()) return false;
    return std::equal(word_.begin(), word_.end(), other.word_.begin());
}

std::strong_ordering operator<=>(const Node& a, const Node& b) {
    return a.word_ <=> b.word_;
}

std::string Node::describe() const { return word_to_string(word_); }

Branch::Branch(TreeKind kind, Word support) : kind_(kind), support_(std::move(support)) {
    kind_.check_word(0, support_);
    while (!support_.empty() && support_.back() == 0) support_.pop_back();
}

Node Branch::prefix(int len) const {
    if (len < 0) throw Error(ErrorCode::IndexOutOfRange, "branch prefix length " + std::to_string(len));
    Word w(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) w[static_cast<size_t>(i)] = at(i);
    return Node(kind_, std::move(w));
}

std::strong_ordering operator<=>(const Branch& a, const Branch& b) {
    // Lexicographic on canonical supports, which coincides with pointwise
    // lexicographic order on the branches themselves.
    return a.support_ <=> b.support_;
}

std::string Branch::describe() const { return word_to_string(support_); }

Node DenseSequence::node_at(long long k) const {
    if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "dense level must be nonnegative");
    // Walk lengths until the cumulative length-lex count passes k.
    long long remaining = k;
    int length = 0;
    for (;;) {
        long long count = 1; // nodes of this length
        bool overflow = false;
        for (int j = 0; j < length; ++j) {
            const long long deg = kind_.degree_at(j);
            if (count > (std::numeric_limits<long long>::max)() / deg) {
                overflow = true;
                break;
            }
            count *= deg;
        }
        if (overflow || remaining < count) break;
        remaining -= count;
        ++length;
    }
    // remaining = rank of the target word among words of this length.
    Word w(static_cast<size_t>(length), 0);
    for (int j = length - 1; j >= 0; --j) {
        const long long deg = kind_.degree_at(j);
        w[static_cast<size_t>(j)] = static_cast<int>(remaining % deg);
        remaining /= deg;
    }
    Node stem(kind_, std::move(w));
    // Pad with zeros to land exactly at level k (|stem| <= k always).
    Word padded = stem.word();
    padded.resize(static_cast<size_t>(k), 0);
    return Node(kind_, std::move(padded));
}

bool DenseSequence::contains(const Node& t) const {
    if (t.kind() != kind_) throw Error(ErrorCode::KindMismatch, "node kind differs from dense set kind");
    return node_at(t.length()) == t;
}

long long DenseSequence::index_of(const Node& s) const {
    if (s.kind() != kind_) throw Error(ErrorCode::KindMismatch, "node kind differs from dense set kind");
    long long index = 0;
    for (int length = 0; length < s.length(); ++length) {
        long long count = 1;
        for (int j = 0; j < length; ++j) count *= kind_.degree_at(j);
        index += count;
    }
    long long rank = 0;
    for (int j = 0; j < s.length(); ++j) rank = rank * kind_.degree_at(j) + s.at(j);
    return index + rank;
}

Node delta(const Branch& x, const Branch& y) {
    if (x.kind() != y.kind()) throw Error(ErrorCode::KindMismatch, "branches live in different trees");
    const int limit = std::max(x.support_length(), y.support_length());
    for (int i = 0; i < limit; ++i) {
        if (x.at(i) != y.at(i)) return x.prefix(i);
    }
    throw Error(ErrorCode::EqualBranches, "meet of a branch with itself is undefined");
}

Branch concat_branch(const Node& d, int i, const Branch& x) {
    if (d.kind() != x.kind()) throw Error(ErrorCode::KindMismatch, "node and tail live in different trees");
    if (!d.kind().entry_ok(d.length(), i)) {
        throw Error(ErrorCode::EntryOutOfRange,
                    "entry " + std::to_string(i) + " illegal at index " + std::to_string(d.length()));
    }
    Word support = d.word();
    support.push_back(i);
    support.insert(support.end(), x.support().begin(), x.support().end());
    return Branch(d.kind(), std::move(support));
}

bool extends(const Branch& y, const Node& t) {
    if (y.kind() != t.kind()) throw Error(ErrorCode::KindMismatch, "branch and node live in different trees");
    for (int i = 0; i < t.length(); ++i) {
        if (y.at(i) != t.at(i)) return false;
    }
    return true;
}

} // namespace chaincond
