#include "swb/amalg/amalgamate.hpp"

#include <algorithm>
#include <map>

#include "swb/amalg/free_amalgam.hpp"
#include "swb/validation.hpp"

namespace swb::amalg {

namespace {

// Adds the single fresh point of ext to m, where both extend the common part
// (the induced structure of m on ext-minus-its-fresh-point).  Recursion on
// the points of m outside the common part, one free amalgamation each.
LabeledSwitchboard add_one_point(const LabeledSwitchboard& common,
                                 const LabeledSwitchboard& m,
                                 const LabeledSwitchboard& ext) {
    if (m.elements() == common.elements())
        return ext;
    ElementId d = 0;
    for (ElementId x : m.elements())
        if (!common.has_element(x)) {
            d = x;
            break;
        }
    std::vector<ElementId> step = common.elements();
    step.push_back(d);
    std::sort(step.begin(), step.end());
    LabeledSwitchboard next_common = restrict_to(m, step);
    LabeledSwitchboard glued = free_amalgam_one_point(common, next_common, ext);
    return add_one_point(next_common, m, glued);
}

} // namespace

AmalgamResult amalgamate(const LabeledSwitchboard& base,
                         const LabeledSwitchboard& left,
                         const LabeledSwitchboard& right) {
    require_valid(base, "amalgamate: base");
    require_valid(left, "amalgamate: left");
    require_valid(right, "amalgamate: right");
    for (ElementId x : base.elements())
        if (!left.has_element(x) || !right.has_element(x))
            throw precondition_error(
                "amalgamate: base element " + std::to_string(x) +
                " missing from an extension");
    if (restrict_to(left, base.elements()) != base ||
        restrict_to(right, base.elements()) != base)
        throw precondition_error(
            "amalgamate: the identification maps are not embeddings (an "
            "extension does not induce the base)");

    // Renumber right-side fresh points that collide with left ids.
    ElementId next = 0;
    for (ElementId x : left.elements())
        next = std::max(next, x + 1);
    for (ElementId x : right.elements())
        next = std::max(next, x + 1);
    std::map<ElementId, ElementId> right_map;
    AmalgamResult out;
    for (ElementId x : right.elements()) {
        ElementId target = x;
        if (!base.has_element(x) && left.has_element(x)) {
            target = next++;
            right_map[x] = target;
        }
        out.right_embedding.emplace_back(x, target);
    }
    for (ElementId x : left.elements())
        out.left_embedding.emplace_back(x, x);
    LabeledSwitchboard renamed = rename(right, right_map);

    std::vector<ElementId> added = base.elements();
    LabeledSwitchboard current = left;
    for (ElementId c : renamed.elements()) {
        if (base.has_element(c))
            continue;
        LabeledSwitchboard prev = restrict_to(renamed, added);
        added.push_back(c);
        std::sort(added.begin(), added.end());
        LabeledSwitchboard step = restrict_to(renamed, added);
        current = add_one_point(prev, current, step);
    }
    out.result = std::move(current);
    return out;
}

} // namespace swb::amalg
