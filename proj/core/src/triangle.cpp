#include "swb/triangle.hpp"

#include <algorithm>

namespace swb {

TriangleRelation::TriangleRelation(std::vector<ElementId> elements,
                                   std::vector<NodePair> rel)
    : elements_(std::move(elements)), rel_(std::move(rel)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) !=
        elements_.end())
        throw format_error("duplicate element id");
    std::sort(rel_.begin(), rel_.end());
    rel_.erase(std::unique(rel_.begin(), rel_.end()), rel_.end());
    auto over = [&](const Node& n) {
        return std::binary_search(elements_.begin(), elements_.end(), n.a) &&
               std::binary_search(elements_.begin(), elements_.end(), n.b);
    };
    for (const auto& [x, y] : rel_)
        if (!over(x) || !over(y))
            throw format_error("triangle relation fact not over the ground set");
}

bool TriangleRelation::has(const Node& x, const Node& y) const {
    return std::binary_search(rel_.begin(), rel_.end(), NodePair{x, y});
}

bool TriangleRelation::has_element(ElementId x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

TriangleRelation to_triangle(const LabeledSwitchboard& l) {
    require_valid(l, "to_triangle");
    std::vector<NodePair> rel;
    rel.reserve(l.lt_pairs().size() + l.up_pairs().size());
    for (const auto& [e, f] : l.lt_pairs())
        rel.emplace_back(Node::edge(e), Node::edge(f));
    for (const auto& [a, e] : l.up_pairs())
        rel.emplace_back(Node::element(a), Node::edge(e));
    return TriangleRelation(l.elements(), std::move(rel));
}

LabeledSwitchboard from_triangle(const TriangleRelation& t) {
    ValidationReport rep = validate(t);
    if (!rep.valid)
        throw validation_error("from_triangle: triangle axioms violated",
                               std::move(rep));
    std::vector<EdgePair> lt;
    std::vector<UpFact> up;
    for (const auto& [x, y] : t.rel()) {
        if (x.is_edge())
            lt.emplace_back(x.as_edge(), y.as_edge());
        else
            up.emplace_back(x.as_element(), y.as_edge());
    }
    return LabeledSwitchboard(Switchboard(t.elements(), std::move(lt)),
                              std::move(up));
}

} // namespace swb
