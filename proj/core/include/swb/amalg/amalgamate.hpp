#pragma once

#include <utility>
#include <vector>

#include "swb/switchboard.hpp"

namespace swb::amalg {

// A strong amalgam of two extensions of a common base, together with the
// element maps embedding each input.  The maps agree on the base and the
// images of the two fresh sides are disjoint.
struct AmalgamResult {
    LabeledSwitchboard result;
    std::vector<std::pair<ElementId, ElementId>> left_embedding;
    std::vector<std::pair<ElementId, ElementId>> right_embedding;
};

// Amalgamates left ⊇ base and right ⊇ base over base (identification by
// element id: base's elements must appear with the same ids and facts in
// both).  Left ids are preserved; right-side fresh ids colliding with left
// ids are renumbered to max-id+1, +2, ... in ascending order.  The gluing
// adds the right-side points one at a time by single-element free
// amalgamation, so the result is deterministic.
AmalgamResult amalgamate(const LabeledSwitchboard& base,
                         const LabeledSwitchboard& left,
                         const LabeledSwitchboard& right);

} // namespace swb::amalg
