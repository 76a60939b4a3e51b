#pragma once

#include <cstdint>
#include <random>

#include "swb/switchboard.hpp"

namespace swb::gen {

// Deterministic random source.  Raw mt19937_64 output is specified by the
// standard, so draws are portable; the distribution helpers avoid the
// implementation-defined standard distributions.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound);

    // True with probability p.
    bool coin(double p);

private:
    std::mt19937_64 engine_;
};

// A valid labeled switchboard on n elements, identical for identical
// (n, seed, density).  Candidate disjoint-edge order facts are sampled with
// the given probability in a seeded order and kept only when the closure
// stays valid; labels are then assigned along a topological order of the
// edges, forced facts first, free facts by fair coin.
LabeledSwitchboard random_labeled(int n, std::uint64_t seed, double density);

} // namespace swb::gen
