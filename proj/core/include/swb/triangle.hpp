#pragma once

#include <utility>
#include <vector>

#include "swb/switchboard.hpp"
#include "swb/validation.hpp"

namespace swb {

using NodePair = std::pair<Node, Node>;

// A single relation on elements ⊔ edges packaging a labeled switchboard:
// x ◁ y holds iff x favors y (element vs edge) or x < y (edge vs edge).
class TriangleRelation {
public:
    TriangleRelation() = default;
    TriangleRelation(std::vector<ElementId> elements, std::vector<NodePair> rel);

    const std::vector<ElementId>& elements() const { return elements_; }
    const std::vector<NodePair>& rel() const { return rel_; }
    bool has(const Node& x, const Node& y) const;
    bool has_element(ElementId x) const;

    friend bool operator==(const TriangleRelation&,
                           const TriangleRelation&) = default;

private:
    std::vector<ElementId> elements_;
    std::vector<NodePair> rel_;
};

// rel = lt ∪ up viewed on nodes.  Requires a valid input; the output
// satisfies the five triangle axioms.
TriangleRelation to_triangle(const LabeledSwitchboard& l);

// Splits the relation back into order and favor parts.  Rejects inputs
// violating the triangle axioms, with a witness.  Mutually inverse with
// to_triangle.
LabeledSwitchboard from_triangle(const TriangleRelation& t);

} // namespace swb
