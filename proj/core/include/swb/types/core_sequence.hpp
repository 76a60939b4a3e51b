#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swb/gen/specs.hpp"
#include "swb/switchboard.hpp"

namespace swb::types {

struct SequenceFlags {
    std::optional<bool> realizes_q;          // (c_i, c_{i+1}) realizes q
    std::optional<bool> freely_amalgamated;  // (c_i, c_0) over B ∪ {c_{i-1}}
    std::optional<bool> distinguished;       // tp(c_0, c_i / B)
    std::optional<bool> symmetric;           // tp(c_0, c_i / B)
};

// A structure containing the base and a sequence c_0..c_k in which every
// adjacent pair realizes q and, from index 2 on, c_i and c_0 are freely
// amalgamated over B ∪ {c_{i-1}}.  The flags are recomputed predicates on
// the finished structure.
struct CoreSequenceReport {
    LabeledSwitchboard structure;
    gen::TwoTypeSpec q;
    std::vector<ElementId> base;
    std::vector<ElementId> sequence;
    std::vector<SequenceFlags> flags;

    std::vector<std::string> verdict_lines() const;
};

// Builds the sequence by instantiating q along the chain and gluing each new
// point to c_0 by single-element free amalgamation over B ∪ {c_{i-1}}.
// Requires the two coordinates of q to realize the same 1-type over the
// base.  The sequence elements are fresh, hence pairwise distinct.
CoreSequenceReport build_core_sequence(const gen::TwoTypeSpec& q, int length);

struct CoreVerdict {
    bool pass{false};
    bool q_distinguished{false};
    std::vector<std::string> lines;
};

// PASS iff tp(c_0, c_i / B) is distinguished for every i >= |B| and, when q
// itself is distinguished, symmetric for every i > |B|.  The sequence must
// be longer than |B|.
CoreVerdict check_core_conclusions(const CoreSequenceReport& report);

struct TwoStageResult {
    bool pass{false};
    std::vector<std::string> trace;
    CoreSequenceReport stage1;
    gen::TwoTypeSpec q_prime;
    CoreSequenceReport stage2;
};

// The two-stage scenario: build a sequence from q, extract
// q' = tp(c_0, c_{|B|} / B), require it distinguished, rebuild from q', and
// require tp(c'_0, c'_{|B|+1} / B) symmetric.
TwoStageResult two_stage_symmetry(const gen::TwoTypeSpec& q, int k1, int k2);

} // namespace swb::types
