#pragma once

#include <cstdint>
#include <vector>

#include "swb/switchboard.hpp"

namespace swb {

// The canonical expansion: a favors e iff some edge through a lies below e,
// a disfavors e otherwise.
LabeledSwitchboard label_canonical(const Switchboard& s);

// Size caps for labeling enumeration.  Exceeding a cap raises cap_exceeded
// rather than truncating.  The environment variable SWB_SIZE_CAP
// ("<elements>" or "<elements>,<branch nodes>") overrides the defaults.
struct EnumerationLimits {
    int max_elements = 12;
    std::int64_t max_branch_nodes = std::int64_t{1} << 20;

    static EnumerationLimits from_env();
};

// All valid labeled expansions of s, pairwise distinct, sorted canonically.
// Forced facts are propagated first; the remaining free (element, edge)
// choices are branched on while keeping the favor set upward closed.
std::vector<LabeledSwitchboard>
enumerate_labelings(const Switchboard& s,
                    const EnumerationLimits& limits = EnumerationLimits{});

} // namespace swb
