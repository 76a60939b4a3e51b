#include "swb/gen/free_copy.hpp"

#include <algorithm>

#include "swb/amalg/amalgamate.hpp"
#include "swb/amalg/free_amalgam.hpp"
#include "swb/validation.hpp"

namespace swb::gen {

FreeCopyResult free_copy(const LabeledSwitchboard& m,
                         std::span<const ElementId> B, ElementId a,
                         const OneTypeSpec& spec) {
    require_valid(m, "free_copy");
    spec.check();
    std::vector<ElementId> base(B.begin(), B.end());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (ElementId x : base)
        if (!m.has_element(x))
            throw precondition_error("free_copy: B must be a subset of the "
                                     "ground set");
    if (!m.has_element(a) ||
        std::binary_search(base.begin(), base.end(), a))
        throw precondition_error("free_copy: a must lie in m outside B");
    if (spec.base() != base)
        throw precondition_error("free_copy: the spec is not over B");
    if (restrict_to(spec.structure, base) != restrict_to(m, base))
        throw precondition_error(
            "free_copy: the spec's base structure disagrees with m on B");

    ElementId e2 = std::max(m.elements().back(),
                            spec.structure.elements().back()) + 1;
    LabeledSwitchboard fresh = rename(spec.structure, {{spec.point, e2}});

    std::vector<ElementId> base_a = base;
    base_a.push_back(a);
    std::sort(base_a.begin(), base_a.end());
    LabeledSwitchboard over_a = restrict_to(m, base_a);
    LabeledSwitchboard glued =
        amalg::free_amalgam_one_point(restrict_to(m, base), over_a, fresh);
    amalg::AmalgamResult res = amalg::amalgamate(over_a, m, glued);
    return FreeCopyResult{std::move(res.result), e2};
}

} // namespace swb::gen
