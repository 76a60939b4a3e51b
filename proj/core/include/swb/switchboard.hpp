#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swb/edge.hpp"

namespace swb {

using EdgePair = std::pair<Edge, Edge>;
using UpFact = std::pair<ElementId, Edge>;

// A ground set together with a relation on its edge set, meant to be a strict
// partial order in which edges sharing a vertex are incomparable.  The stored
// relation is raw data: whether it actually satisfies the axioms is the
// business of validate(), not of the constructor.  The order is expected to
// be listed transitively closed; validate() checks closure instead of closing
// silently.
class Switchboard {
public:
    Switchboard() = default;

    // Ground set {0, ..., n-1}.
    Switchboard(int n, std::vector<EdgePair> lt,
                std::map<ElementId, std::string> names = {});

    // Explicit ground set (ids need not be contiguous); used by restriction
    // and amalgamation.
    Switchboard(std::vector<ElementId> elements, std::vector<EdgePair> lt,
                std::map<ElementId, std::string> names = {});

    const std::vector<ElementId>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool has_element(ElementId x) const;
    // True when the ground set is exactly {0, ..., n-1}.
    bool contiguous() const;

    const std::vector<EdgePair>& lt_pairs() const { return lt_; }
    bool less(const Edge& e, const Edge& f) const;
    bool comparable(const Edge& e, const Edge& f) const {
        return less(e, f) || less(f, e);
    }

    // All edges over the ground set, in canonical order.
    std::vector<Edge> edges() const;

    const std::map<ElementId, std::string>& names() const { return names_; }

    // Structural equality; display names are presentation and not compared.
    friend bool operator==(const Switchboard& x, const Switchboard& y) {
        return x.elements_ == y.elements_ && x.lt_ == y.lt_;
    }

private:
    std::vector<ElementId> elements_;
    std::vector<EdgePair> lt_;
    std::map<ElementId, std::string> names_;
};

// A switchboard expanded by the favor relation (element a favors edge e).
// The disfavor relation is derived: a disfavors e iff a is not an endpoint of
// e and (a, e) is not a favor fact, so the trichotomy holds by construction.
// As with Switchboard, the constructor checks well-formedness only.
class LabeledSwitchboard {
public:
    LabeledSwitchboard() = default;
    LabeledSwitchboard(Switchboard base, std::vector<UpFact> up);

    const Switchboard& base() const { return base_; }
    const std::vector<ElementId>& elements() const { return base_.elements(); }
    int size() const { return base_.size(); }
    bool has_element(ElementId x) const { return base_.has_element(x); }
    std::vector<Edge> edges() const { return base_.edges(); }
    bool less(const Edge& e, const Edge& f) const { return base_.less(e, f); }
    bool comparable(const Edge& e, const Edge& f) const {
        return base_.comparable(e, f);
    }
    const std::vector<EdgePair>& lt_pairs() const { return base_.lt_pairs(); }

    const std::vector<UpFact>& up_pairs() const { return up_; }
    bool up(ElementId a, const Edge& e) const;
    bool down(ElementId a, const Edge& e) const {
        return !e.contains(a) && !up(a, e);
    }

    friend bool operator==(const LabeledSwitchboard& x,
                           const LabeledSwitchboard& y) {
        return x.base_ == y.base_ && x.up_ == y.up_;
    }

private:
    Switchboard base_;
    std::vector<UpFact> up_;
};

// Induced substructure on a subset of the ground set; keeps exactly the facts
// whose elements all lie in the subset.  Ids are preserved.
Switchboard restrict_to(const Switchboard& s, std::span<const ElementId> subset);
LabeledSwitchboard restrict_to(const LabeledSwitchboard& l,
                               std::span<const ElementId> subset);

// Applies an injective renaming to the ground set; ids absent from the map
// are kept.  The final ids must be pairwise distinct.
Switchboard rename(const Switchboard& s,
                   const std::map<ElementId, ElementId>& map);
LabeledSwitchboard rename(const LabeledSwitchboard& l,
                          const std::map<ElementId, ElementId>& map);

} // namespace swb
