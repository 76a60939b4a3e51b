#pragma once

#include <span>

#include "swb/gen/specs.hpp"

namespace swb::gen {

struct FreeCopyResult {
    LabeledSwitchboard structure;
    ElementId copy{0};
};

// Extends m by a fresh element realizing the given 1-type over B, freely
// amalgamated with a over B.  The spec's base must agree with the induced
// structure of m on B.
FreeCopyResult free_copy(const LabeledSwitchboard& m,
                         std::span<const ElementId> B, ElementId a,
                         const OneTypeSpec& spec);

} // namespace swb::gen
