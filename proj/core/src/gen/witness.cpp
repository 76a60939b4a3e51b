#include "swb/gen/witness.hpp"

#include <algorithm>

#include "swb/amalg/amalgamate.hpp"
#include "swb/validation.hpp"

namespace swb::gen {

namespace {

WitnessResult build_witness(const LabeledSwitchboard& m, ElementId x,
                            const Edge& e, bool upward) {
    require_valid(m, upward ? "witness_up" : "witness_down");
    if (!m.has_element(x) || !m.has_element(e.lo) || !m.has_element(e.hi))
        throw precondition_error("witness: x and e must lie in the structure");
    if (e.contains(x))
        throw precondition_error("witness: x must not be an endpoint of e");
    if (upward && !m.up(x, e))
        throw precondition_error(
            "witness_up: x does not favor e, no witness is promised");
    if (!upward && !m.down(x, e))
        throw precondition_error(
            "witness_down: x does not disfavor e, no witness is promised");

    ElementId w = m.elements().back() + 1;
    ElementId y = e.lo, z = e.hi;
    Edge xw(x, w);

    // The gadget on {x, y, z, w}: the single order fact relates {x,w} and e,
    // the endpoints of the upper edge disfavor the lower one (derived), its
    // complement favors it, the two facts internal to {x,y,z} are copied
    // from m, and everything else defaults to disfavor.
    std::vector<EdgePair> lt;
    std::vector<UpFact> up;
    if (upward) {
        lt.emplace_back(xw, e);
        up.emplace_back(x, e);
        up.emplace_back(w, e);
    } else {
        lt.emplace_back(e, xw);
        up.emplace_back(y, xw);
        up.emplace_back(z, xw);
    }
    if (m.up(y, Edge(x, z)))
        up.emplace_back(y, Edge(x, z));
    if (m.up(z, Edge(x, y)))
        up.emplace_back(z, Edge(x, y));

    std::vector<ElementId> gadget_ground{x, y, z, w};
    std::sort(gadget_ground.begin(), gadget_ground.end());
    LabeledSwitchboard gadget(Switchboard(gadget_ground, std::move(lt)),
                              std::move(up));
    require_valid(gadget, "witness: gadget");

    std::vector<ElementId> shared{x, y, z};
    std::sort(shared.begin(), shared.end());
    amalg::AmalgamResult res =
        amalg::amalgamate(restrict_to(m, shared), m, gadget);
    return WitnessResult{std::move(res.result), w};
}

} // namespace

WitnessResult witness_up(const LabeledSwitchboard& m, ElementId x,
                         const Edge& e) {
    return build_witness(m, x, e, true);
}

WitnessResult witness_down(const LabeledSwitchboard& m, ElementId x,
                           const Edge& e) {
    return build_witness(m, x, e, false);
}

} // namespace swb::gen
