#pragma once

// Shared builders and random-instance generators for the test suites.

#include <optional>
#include <vector>

#include "swb/gen/random.hpp"
#include "swb/gen/specs.hpp"
#include "swb/switchboard.hpp"

namespace helpers {

inline swb::Edge e(swb::ElementId a, swb::ElementId b) {
    return swb::Edge(a, b);
}

inline swb::LabeledSwitchboard
lsb(int n, std::vector<swb::EdgePair> lt, std::vector<swb::UpFact> up) {
    return swb::LabeledSwitchboard(swb::Switchboard(n, std::move(lt)),
                                   std::move(up));
}

// All valid labeled one-point extensions of base by the element `fresh`:
// every order completion over the new edges crossed with every labeling that
// restricts back to base.  Exponential in |base|; intended for |base| <= 3.
std::vector<swb::LabeledSwitchboard>
one_point_extensions(const swb::LabeledSwitchboard& base, swb::ElementId fresh);

// One random valid labeled one-point extension: order facts sampled with
// validity rejection, labels forced first and coin-flipped otherwise.
swb::LabeledSwitchboard
random_one_point_extension(const swb::LabeledSwitchboard& base,
                           swb::ElementId fresh, swb::gen::DetRng& rng,
                           double density = 0.4);

// A random two-type spec over a random base: both coordinates realize the
// same random 1-type, extended by cross facts that stay outside the two
// one-point restrictions.
swb::gen::TwoTypeSpec random_two_type_spec(int base_size, std::uint64_t seed);

} // namespace helpers
