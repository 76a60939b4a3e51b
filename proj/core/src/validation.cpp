#include "swb/validation.hpp"

#include <algorithm>
#include <sstream>

#include "swb/triangle.hpp"

namespace swb {

std::string to_string(Axiom a) {
    switch (a) {
    case Axiom::irreflexive: return "irreflexive";
    case Axiom::asymmetric: return "asymmetric";
    case Axiom::transitive: return "transitive";
    case Axiom::switchboard: return "switchboard";
    case Axiom::trichotomy: return "trichotomy";
    case Axiom::upward: return "upward";
    case Axiom::downward: return "downward";
    case Axiom::triangle_transitive: return "triangle-transitive";
    case Axiom::triangle_projection: return "triangle-projection";
    case Axiom::triangle_target: return "triangle-target";
    case Axiom::triangle_irreflexive: return "triangle-irreflexive";
    case Axiom::triangle_incidence: return "triangle-incidence";
    }
    return "?";
}

std::string Violation::to_string() const {
    std::string out = swb::to_string(axiom);
    for (const Node& n : witness)
        out += " " + swb::to_string(n);
    return out;
}

std::string ValidationReport::to_string() const {
    if (valid)
        return "valid";
    std::ostringstream out;
    out << "invalid";
    for (const Violation& v : violations)
        out << "\nviolation " << v.to_string();
    return out.str();
}

namespace {

void close_report(ValidationReport& rep) { rep.valid = rep.violations.empty(); }

void check_order_axioms(const std::vector<EdgePair>& lt,
                        const Switchboard& s, ValidationReport& rep) {
    for (const auto& [e, f] : lt) {
        if (e == f) {
            rep.violations.push_back(
                {Axiom::irreflexive, {Node::edge(e)}});
            continue;
        }
        if (s.less(f, e) && e < f)
            rep.violations.push_back(
                {Axiom::asymmetric, {Node::edge(e), Node::edge(f)}});
        if (!e.disjoint(f)) {
            ElementId shared = f.contains(e.lo) ? e.lo : e.hi;
            rep.violations.push_back(
                {Axiom::switchboard,
                 {Node::element(shared), Node::edge(e), Node::edge(f)}});
        }
    }
    for (const auto& [e, f] : lt)
        for (const auto& [g, h] : lt)
            if (f == g && e != h && !s.less(e, h))
                rep.violations.push_back(
                    {Axiom::transitive,
                     {Node::edge(e), Node::edge(f), Node::edge(h)}});
}

} // namespace

ValidationReport validate(const Switchboard& s) {
    ValidationReport rep;
    check_order_axioms(s.lt_pairs(), s, rep);
    close_report(rep);
    return rep;
}

ValidationReport validate(const LabeledSwitchboard& l) {
    ValidationReport rep;
    check_order_axioms(l.lt_pairs(), l.base(), rep);
    // Trichotomy: a stored favor fact with an incident element contradicts
    // "exactly one of favors / is endpoint / disfavors".
    for (const auto& [a, e] : l.up_pairs())
        if (e.contains(a))
            rep.violations.push_back(
                {Axiom::trichotomy, {Node::element(a), Node::edge(e)}});
    // Upward: a favors e and e < f force a to favor f.
    for (const auto& [a, e] : l.up_pairs())
        for (const auto& [g, f] : l.lt_pairs())
            if (g == e && !l.up(a, f))
                rep.violations.push_back(
                    {Axiom::upward,
                     {Node::element(a), Node::edge(e), Node::edge(f)}});
    // Downward: a disfavors e and e > f force a to disfavor f.
    for (const auto& [f, e] : l.lt_pairs())
        for (ElementId a : l.elements())
            if (l.down(a, e) && !l.down(a, f))
                rep.violations.push_back(
                    {Axiom::downward,
                     {Node::element(a), Node::edge(e), Node::edge(f)}});
    close_report(rep);
    return rep;
}

ValidationReport validate(const TriangleRelation& t) {
    ValidationReport rep;
    const auto& rel = t.rel();
    for (const auto& [x, y] : rel) {
        if (x == y)
            rep.violations.push_back({Axiom::triangle_irreflexive, {x}});
        if (y.is_element())
            rep.violations.push_back({Axiom::triangle_target, {x, y}});
        if (x.is_element() && y.is_edge() && y.as_edge().contains(x.as_element()))
            rep.violations.push_back({Axiom::triangle_incidence, {x, y}});
        if (x.is_edge() && y.is_edge()) {
            Edge e = x.as_edge();
            for (ElementId end : {e.lo, e.hi})
                if (!t.has(Node::element(end), y))
                    rep.violations.push_back(
                        {Axiom::triangle_projection,
                         {x, y, Node::element(end)}});
        }
    }
    for (const auto& [x, y] : rel)
        for (const auto& [u, v] : rel)
            if (y == u && x != v && !t.has(x, v))
                rep.violations.push_back(
                    {Axiom::triangle_transitive, {x, y, v}});
    close_report(rep);
    return rep;
}

namespace {

bool replay_order(const Switchboard& s, const Violation& v) {
    const auto& w = v.witness;
    switch (v.axiom) {
    case Axiom::irreflexive:
        return w.size() == 1 && w[0].is_edge() &&
               s.less(w[0].as_edge(), w[0].as_edge());
    case Axiom::asymmetric:
        return w.size() == 2 && s.less(w[0].as_edge(), w[1].as_edge()) &&
               s.less(w[1].as_edge(), w[0].as_edge());
    case Axiom::transitive:
        return w.size() == 3 && s.less(w[0].as_edge(), w[1].as_edge()) &&
               s.less(w[1].as_edge(), w[2].as_edge()) &&
               !s.less(w[0].as_edge(), w[2].as_edge());
    case Axiom::switchboard:
        return w.size() == 3 && w[0].is_element() &&
               w[1].as_edge().contains(w[0].as_element()) &&
               w[2].as_edge().contains(w[0].as_element()) &&
               s.less(w[1].as_edge(), w[2].as_edge());
    default:
        return false;
    }
}

} // namespace

bool replay(const Switchboard& s, const Violation& v) {
    return replay_order(s, v);
}

bool replay(const LabeledSwitchboard& l, const Violation& v) {
    const auto& w = v.witness;
    switch (v.axiom) {
    case Axiom::trichotomy:
        return w.size() == 2 && w[0].is_element() &&
               w[1].as_edge().contains(w[0].as_element()) &&
               l.up(w[0].as_element(), w[1].as_edge());
    case Axiom::upward:
        return w.size() == 3 && l.up(w[0].as_element(), w[1].as_edge()) &&
               l.less(w[1].as_edge(), w[2].as_edge()) &&
               !l.up(w[0].as_element(), w[2].as_edge());
    case Axiom::downward:
        return w.size() == 3 && l.down(w[0].as_element(), w[1].as_edge()) &&
               l.less(w[2].as_edge(), w[1].as_edge()) &&
               !l.down(w[0].as_element(), w[2].as_edge());
    default:
        return replay_order(l.base(), v);
    }
}

bool replay(const TriangleRelation& t, const Violation& v) {
    const auto& w = v.witness;
    switch (v.axiom) {
    case Axiom::triangle_irreflexive:
        return w.size() == 1 && t.has(w[0], w[0]);
    case Axiom::triangle_target:
        return w.size() == 2 && t.has(w[0], w[1]) && w[1].is_element();
    case Axiom::triangle_incidence:
        return w.size() == 2 && w[0].is_element() && w[1].is_edge() &&
               w[1].as_edge().contains(w[0].as_element()) &&
               t.has(w[0], w[1]);
    case Axiom::triangle_projection:
        return w.size() == 3 && w[0].is_edge() && t.has(w[0], w[1]) &&
               w[2].is_element() &&
               w[0].as_edge().contains(w[2].as_element()) &&
               !t.has(w[2], w[1]);
    case Axiom::triangle_transitive:
        return w.size() == 3 && t.has(w[0], w[1]) && t.has(w[1], w[2]) &&
               !t.has(w[0], w[2]);
    default:
        return false;
    }
}

void require_valid(const Switchboard& s, const std::string& who) {
    ValidationReport rep = validate(s);
    if (!rep.valid)
        throw validation_error(who + ": invalid switchboard", std::move(rep));
}

void require_valid(const LabeledSwitchboard& l, const std::string& who) {
    ValidationReport rep = validate(l);
    if (!rep.valid)
        throw validation_error(who + ": invalid labeled switchboard",
                               std::move(rep));
}

} // namespace swb
