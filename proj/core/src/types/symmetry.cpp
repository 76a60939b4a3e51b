#include "swb/types/symmetry.hpp"

#include <algorithm>

#include "swb/errors.hpp"
#include "swb/types/qf_type.hpp"

namespace swb::types {

namespace {

std::vector<ElementId> checked_base(const LabeledSwitchboard& m,
                                    std::span<const ElementId> B,
                                    ElementId a1, ElementId a2,
                                    const char* who) {
    if (a1 == a2 || !m.has_element(a1) || !m.has_element(a2))
        throw precondition_error(std::string(who) +
                                 ": a1, a2 must be distinct elements of m");
    std::vector<ElementId> base(B.begin(), B.end());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (ElementId b : base) {
        if (!m.has_element(b))
            throw precondition_error(std::string(who) + ": B must be a "
                                     "subset of the ground set");
        if (b == a1 || b == a2)
            throw precondition_error(std::string(who) +
                                     ": a1, a2 must lie outside B");
    }
    return base;
}

} // namespace

bool is_half_symmetric(const LabeledSwitchboard& m,
                       std::span<const ElementId> B, ElementId a1,
                       ElementId a2) {
    auto base = checked_base(m, B, a1, a2, "is_half_symmetric");
    for (ElementId b : base)
        for (ElementId c : base) {
            if (b == c)
                continue;
            if (m.less(Edge(a1, b), Edge(a2, c)) !=
                m.less(Edge(a2, b), Edge(a1, c)))
                return false;
        }
    return true;
}

bool is_symmetric(const LabeledSwitchboard& m, std::span<const ElementId> B,
                  ElementId a1, ElementId a2) {
    auto base = checked_base(m, B, a1, a2, "is_symmetric");
    QfType t1 = qf_type(m, std::vector<ElementId>{a1}, base);
    QfType t2 = qf_type(m, std::vector<ElementId>{a2}, base);
    if (t1 != t2) {
        std::size_t i = 0;
        while (i < t1.facts.size() && i < t2.facts.size() &&
               t1.facts[i] == t2.facts[i])
            ++i;
        std::string diff =
            i < t1.facts.size() ? t1.facts[i].to_string() : "(missing fact)";
        throw precondition_error(
            "is_symmetric: a1 and a2 have different 1-types over B; first "
            "difference near " + diff);
    }
    if (!is_half_symmetric(m, B, a1, a2))
        return false;
    for (ElementId b : base) {
        if (m.up(a1, Edge(a2, b)) != m.up(a2, Edge(a1, b)))
            return false;
        if (m.down(a1, Edge(a2, b)) != m.down(a2, Edge(a1, b)))
            return false;
    }
    return true;
}

bool is_distinguished(const LabeledSwitchboard& m,
                      std::span<const ElementId> B, ElementId a1,
                      ElementId a2) {
    auto base = checked_base(m, B, a1, a2, "is_distinguished");
    std::vector<Edge> middles;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            middles.emplace_back(base[i], base[j]);
    // Pairs with b = c are skipped: edges sharing a vertex are incomparable,
    // so those instances are vacuous.
    for (ElementId b : base)
        for (ElementId c : base) {
            if (b == c)
                continue;
            Edge e1(a1, b), e2(a2, c);
            for (auto [lo, hi] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
                if (!m.less(lo, hi))
                    continue;
                bool found = false;
                for (const Edge& mid : middles)
                    if (m.less(lo, mid) && m.less(mid, hi)) {
                        found = true;
                        break;
                    }
                if (!found)
                    return false;
            }
        }
    return true;
}

} // namespace swb::types
