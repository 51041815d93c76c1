#pragma once

#include <random>

#include "chaincond/condition.hpp"

namespace chaincond {

/// Seeded generator with portable draws (plain modulo; bias is irrelevant
/// at these ranges and reproducibility matters more).
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    int below(int n) { return static_cast<int>(engine_() % static_cast<uint64_t>(n)); }

private:
    std::mt19937_64 engine_;
};

/// Uniform-ish branch with support below `max_support`.
Branch random_branch(const TreeKind& kind, int max_support, Rng& rng);

/// Rejection-samples a size-element anti-clique with supports below
/// `max_support`.
Condition sample_anti_clique(const HypergraphKind& kind, int size, int max_support, Rng& rng);

} // namespace chaincond
