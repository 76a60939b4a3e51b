#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "swb/errors.hpp"

namespace swb {

using ElementId = std::int32_t;

// An unordered pair of distinct elements, stored canonically with lo < hi.
struct Edge {
    ElementId lo{0};
    ElementId hi{0};

    Edge() = default;
    Edge(ElementId a, ElementId b) : lo(a < b ? a : b), hi(a < b ? b : a) {
        if (a == b)
            throw format_error("degenerate edge {" + std::to_string(a) + "," +
                               std::to_string(b) + "}");
    }

    bool contains(ElementId x) const { return x == lo || x == hi; }
    bool disjoint(const Edge& o) const {
        return !contains(o.lo) && !contains(o.hi);
    }
    // The endpoint other than x; x must be an endpoint.
    ElementId other(ElementId x) const { return x == lo ? hi : lo; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A point of the disjoint union M ⊔ [M]^2: either a single element or an
// edge.  Elements are encoded as (x,x), edges as their canonical pair, so the
// default lexicographic order is a strict total order on nodes.
struct Node {
    ElementId a{0};
    ElementId b{0};

    static Node element(ElementId x) { return Node{x, x}; }
    static Node edge(Edge e) { return Node{e.lo, e.hi}; }

    bool is_element() const { return a == b; }
    bool is_edge() const { return a != b; }
    ElementId as_element() const { return a; }
    Edge as_edge() const { return Edge(a, b); }

    friend auto operator<=>(const Node&, const Node&) = default;
};

std::string to_string(const Edge& e);
std::string to_string(const Node& n);

} // namespace swb
