#pragma once

#include "swb/switchboard.hpp"

namespace swb::gen {

struct WitnessResult {
    LabeledSwitchboard structure;
    ElementId witness{0};
};

// Extends m by one fresh point w with {x,w} < e, where x favors e in m.
// Built from a four-element gadget whose sole order fact is {x,w} < e,
// amalgamated with m over {x} ∪ e.  Every unforced gadget label is set to
// disfavor.
WitnessResult witness_up(const LabeledSwitchboard& m, ElementId x,
                         const Edge& e);

// Dual: extends m by w with {x,w} > e, where x disfavors e in m.
WitnessResult witness_down(const LabeledSwitchboard& m, ElementId x,
                           const Edge& e);

} // namespace swb::gen
