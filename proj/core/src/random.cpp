#include "chaincond/random.hpp"

#include <algorithm>
#include <set>

namespace chaincond {

Branch random_branch(const TreeKind& kind, int max_support, Rng& rng) {
    if (max_support < 0) throw Error(ErrorCode::IndexOutOfRange, "negative support bound");
    const int length = rng.below(max_support + 1);
    Word support(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i)
        support[static_cast<size_t>(i)] = rng.below(kind.degree_at(i));
    return Branch(kind, std::move(support));
}

Condition sample_anti_clique(const HypergraphKind& kind, int size, int max_support, Rng& rng) {
    if (size < 0) throw Error(ErrorCode::IndexOutOfRange, "negative condition size");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::set<Branch> elements;
        int stall = 0;
        while (static_cast<int>(elements.size()) < size && stall < 200) {
            if (!elements.insert(random_branch(kind.tree(), max_support, rng)).second) ++stall;
        }
        if (static_cast<int>(elements.size()) < size) continue;
        std::vector<Branch> list(elements.begin(), elements.end());
        if (is_anti_clique(kind, list)) return Condition(kind, std::move(list));
    }
    throw Error(ErrorCode::TooLarge, "could not sample an anti-clique of size " + std::to_string(size));
}

} // namespace chaincond
