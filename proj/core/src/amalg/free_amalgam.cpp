#include "swb/amalg/free_amalgam.hpp"

#include <algorithm>

#include "swb/amalg/partial_relation.hpp"
#include "swb/validation.hpp"

namespace swb::amalg {

namespace {

struct BaseEdges {
    std::vector<Edge> edges; // [S]^2, canonical order
};

BaseEdges base_edges(std::span<const ElementId> S) {
    std::vector<ElementId> ids(S.begin(), S.end());
    std::sort(ids.begin(), ids.end());
    BaseEdges out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            out.edges.emplace_back(ids[i], ids[j]);
    return out;
}

std::string cross_witness(const Edge& e, const Edge& f) {
    return to_string(e) + " < " + to_string(f);
}

} // namespace

FreeAmalgamCheck free_amalgam_check(const LabeledSwitchboard& m,
                                    std::span<const ElementId> S,
                                    ElementId a1, ElementId a2) {
    if (a1 == a2 || !m.has_element(a1) || !m.has_element(a2))
        throw precondition_error("free_amalgam_check: a1, a2 must be distinct "
                                 "elements of the structure");
    for (ElementId x : S) {
        if (x == a1 || x == a2)
            throw precondition_error(
                "free_amalgam_check: a1, a2 must lie outside S");
        if (!m.has_element(x))
            throw precondition_error(
                "free_amalgam_check: S must be a subset of the ground set");
    }

    BaseEdges base = base_edges(S);
    const Edge a12(a1, a2);
    auto fail = [](const char* cond, std::string witness) {
        return FreeAmalgamCheck{false, cond, std::move(witness)};
    };

    // (i)/(ii): a cross relation between an a1-edge and an a2-edge holds iff
    // it factors through a middle edge inside the base.
    for (ElementId x : S) {
        for (ElementId y : S) {
            Edge e1(a1, x), e2(a2, y);
            bool mid_lt = false, mid_gt = false;
            for (const Edge& p : base.edges) {
                mid_lt = mid_lt || (m.less(e1, p) && m.less(p, e2));
                mid_gt = mid_gt || (m.less(e2, p) && m.less(p, e1));
            }
            if (m.less(e1, e2) != mid_lt)
                return fail("i", cross_witness(e1, e2));
            if (m.less(e2, e1) != mid_gt)
                return fail("ii", cross_witness(e2, e1));
        }
    }
    // (iii): the new edge is incomparable to every other edge over S∪{a1,a2}.
    std::vector<Edge> all = base.edges;
    for (ElementId x : S) {
        all.emplace_back(a1, x);
        all.emplace_back(a2, x);
    }
    for (const Edge& e : all)
        if (m.comparable(e, a12))
            return fail("iii", to_string(a12) + " comparable to " +
                                   to_string(e));
    // (iv): every base element disfavors the new edge.
    for (ElementId x : S)
        if (!m.down(x, a12))
            return fail("iv", std::to_string(x) + " does not disfavor " +
                                  to_string(a12));
    // (v)/(vi): a_i favors an edge through the other point iff a base edge
    // below it is favored.
    for (ElementId x : S) {
        Edge e2(a2, x), e1(a1, x);
        bool via1 = false, via2 = false;
        for (const Edge& p : base.edges) {
            via1 = via1 || (m.up(a1, p) && m.less(p, e2));
            via2 = via2 || (m.up(a2, p) && m.less(p, e1));
        }
        if (m.up(a1, e2) != via1)
            return fail("v", std::to_string(a1) + " vs " + to_string(e2));
        if (m.up(a2, e1) != via2)
            return fail("vi", std::to_string(a2) + " vs " + to_string(e1));
    }
    return FreeAmalgamCheck{};
}

bool is_freely_amalgamated(const LabeledSwitchboard& m,
                           std::span<const ElementId> S, ElementId a1,
                           ElementId a2) {
    return free_amalgam_check(m, S, a1, a2).ok;
}

LabeledSwitchboard free_amalgam_one_point(const LabeledSwitchboard& s,
                                          const LabeledSwitchboard& a1ext,
                                          const LabeledSwitchboard& a2ext) {
    require_valid(s, "free_amalgam_one_point: base");
    require_valid(a1ext, "free_amalgam_one_point: left");
    require_valid(a2ext, "free_amalgam_one_point: right");

    auto fresh_point = [&](const LabeledSwitchboard& ext,
                           const char* side) -> ElementId {
        std::vector<ElementId> extra;
        for (ElementId x : ext.elements())
            if (!s.has_element(x))
                extra.push_back(x);
        if (extra.size() != 1 ||
            ext.elements().size() != s.elements().size() + 1)
            throw precondition_error(
                std::string("free_amalgam_one_point: ") + side +
                " is not a one-point extension of the base");
        if (restrict_to(ext, s.elements()) != s)
            throw precondition_error(
                std::string("free_amalgam_one_point: ") + side +
                " does not restrict to the base");
        return extra.front();
    };
    ElementId a1 = fresh_point(a1ext, "left");
    ElementId a2 = fresh_point(a2ext, "right");
    if (a1 == a2)
        throw precondition_error(
            "free_amalgam_one_point: the fresh points coincide");

    PartialRelation t1 = as_partial_relation(to_triangle(a1ext));
    PartialRelation t2 = as_partial_relation(to_triangle(a2ext));
    PartialRelation glued = union_closure(t1, t2);

    // Viewed on the full ground set the relation gains the node {a1,a2},
    // which participates in no facts.
    std::vector<ElementId> ground = s.elements();
    ground.push_back(a1);
    ground.push_back(a2);
    std::sort(ground.begin(), ground.end());
    return from_triangle(TriangleRelation(std::move(ground), glued.pairs()));
}

} // namespace swb::amalg
