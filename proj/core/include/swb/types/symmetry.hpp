#pragma once

#include <span>

#include "swb/switchboard.hpp"

namespace swb::types {

// Half-symmetric: {a1,b} < {a2,c} iff {a2,b} < {a1,c}, for all b, c in B.
bool is_half_symmetric(const LabeledSwitchboard& m,
                       std::span<const ElementId> B, ElementId a1,
                       ElementId a2);

// Symmetric: half-symmetric, and a1 favors {a2,b} iff a2 favors {a1,b} (and
// dually for disfavor), for all b in B.  Requires a1 and a2 to realize the
// same 1-type over B; a differing fact is reported in the error.
bool is_symmetric(const LabeledSwitchboard& m, std::span<const ElementId> B,
                  ElementId a1, ElementId a2);

// Distinguished: every cross relation between an a1-edge and an a2-edge
// factors through a middle edge in [B]^2.  Equal types are not required.
bool is_distinguished(const LabeledSwitchboard& m,
                      std::span<const ElementId> B, ElementId a1,
                      ElementId a2);

} // namespace swb::types
