#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swb/switchboard.hpp"

namespace swb {

using IsoMap = std::vector<std::pair<ElementId, ElementId>>;

// True when map is a bijection of the ground sets preserving order and favor
// facts in both directions.
bool is_isomorphism(const LabeledSwitchboard& l1, const LabeledSwitchboard& l2,
                    const IsoMap& map);

// Searches for an isomorphism; the returned map is sorted by source id.
std::optional<IsoMap> find_isomorphism(const LabeledSwitchboard& l1,
                                       const LabeledSwitchboard& l2);

inline bool isomorphic(const LabeledSwitchboard& l1,
                       const LabeledSwitchboard& l2) {
    return find_isomorphism(l1, l2).has_value();
}

} // namespace swb
