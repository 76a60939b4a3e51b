#pragma once

#include <vector>

#include "swb/triangle.hpp"

namespace swb::amalg {

// A transitive relation on an explicit carrier of nodes.  Transitivity is
// checked at construction.
class PartialRelation {
public:
    PartialRelation() = default;
    PartialRelation(std::vector<Node> carrier, std::vector<NodePair> pairs);

    const std::vector<Node>& carrier() const { return carrier_; }
    const std::vector<NodePair>& pairs() const { return pairs_; }
    bool has(const Node& x, const Node& y) const;
    bool in_carrier(const Node& x) const;

    friend bool operator==(const PartialRelation&,
                           const PartialRelation&) = default;

private:
    std::vector<Node> carrier_;
    std::vector<NodePair> pairs_;
};

// The transitive closure of the union of two transitive relations agreeing
// on the intersection of their carriers.  A cross pair from one side to the
// other holds exactly when a middle node in the intersection connects them.
PartialRelation union_closure(const PartialRelation& r1,
                              const PartialRelation& r2);

// The restriction of r to the nodes in sub (which must be carried by r).
PartialRelation restrict_to(const PartialRelation& r,
                            const std::vector<Node>& sub);

// The triangle relation of l viewed as a partial relation on elements ⊔ edges.
PartialRelation as_partial_relation(const TriangleRelation& t);

} // namespace swb::amalg
