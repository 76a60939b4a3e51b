#pragma once

#include <optional>
#include <span>
#include <string>

#include "swb/switchboard.hpp"

namespace swb::amalg {

// Result of checking the six free-amalgamation conditions; on failure names
// the first failing condition ("i".."vi") and a witness.
struct FreeAmalgamCheck {
    bool ok{true};
    std::string condition;
    std::string witness;
};

// Checks whether a1 and a2 are freely amalgamated over S inside m: cross
// relations and cross favor facts exist only through middles in [S]^2, the
// edge {a1,a2} is incomparable to everything, and S disfavors it.  Only
// relations within S ∪ {a1,a2} are inspected, so the predicate is preserved
// by extensions.
FreeAmalgamCheck free_amalgam_check(const LabeledSwitchboard& m,
                                    std::span<const ElementId> S,
                                    ElementId a1, ElementId a2);

bool is_freely_amalgamated(const LabeledSwitchboard& m,
                           std::span<const ElementId> S, ElementId a1,
                           ElementId a2);

// Glues two one-point extensions of s along s, by taking the transitive
// closure of the union of their triangle relations and reading the result
// back.  The new edge {a1,a2} ends up isolated.  The output restricts to
// each input and leaves a1, a2 freely amalgamated over s.
LabeledSwitchboard free_amalgam_one_point(const LabeledSwitchboard& s,
                                          const LabeledSwitchboard& a1ext,
                                          const LabeledSwitchboard& a2ext);

} // namespace swb::amalg
