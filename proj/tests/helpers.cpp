#include "helpers.hpp"

#include <algorithm>

#include "swb/labeling.hpp"
#include "swb/validation.hpp"

namespace helpers {

namespace {

using namespace swb;

std::vector<EdgePair> closed(std::vector<EdgePair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<EdgePair> fresh;
        for (const auto& [a, b] : pairs)
            for (const auto& [c, d] : pairs)
                if (b == c && a != d &&
                    !std::binary_search(pairs.begin(), pairs.end(),
                                        EdgePair{a, d}))
                    fresh.emplace_back(a, d);
        if (!fresh.empty()) {
            changed = true;
            pairs.insert(pairs.end(), fresh.begin(), fresh.end());
            std::sort(pairs.begin(), pairs.end());
            pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        }
    }
    return pairs;
}

// Order facts force labels through the tripartition; a candidate order is
// compatible with the base labeling only if those forced facts agree with it
// wherever both ends lie inside the base.
bool forced_labels_match_base(const Switchboard& candidate,
                              const LabeledSwitchboard& base) {
    for (const auto& [p, q] : candidate.lt_pairs()) {
        for (ElementId a : {p.lo, p.hi})
            if (base.has_element(a) && base.has_element(q.lo) &&
                base.has_element(q.hi) && !base.up(a, q))
                return false;
        for (ElementId a : {q.lo, q.hi})
            if (base.has_element(a) && base.has_element(p.lo) &&
                base.has_element(p.hi) && base.up(a, p))
                return false;
    }
    return true;
}

// Topological order of the edge set along the (closed) order, canonical
// tie-break.
std::vector<Edge> edges_bottom_up(const Switchboard& s) {
    std::vector<Edge> edges = s.edges();
    std::vector<Edge> out;
    std::vector<bool> done(edges.size(), false);
    for (std::size_t round = 0; round < edges.size(); ++round) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (done[i])
                continue;
            bool minimal = true;
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (!done[j] && s.less(edges[j], edges[i]))
                    minimal = false;
            if (minimal) {
                done[i] = true;
                out.push_back(edges[i]);
                break;
            }
        }
    }
    return out;
}

// All labelings of the (valid) switchboard that restrict back to base.
std::vector<LabeledSwitchboard>
labelings_extending(const Switchboard& candidate,
                    const LabeledSwitchboard& base) {
    std::vector<LabeledSwitchboard> out;
    for (auto& labeled : enumerate_labelings(candidate))
        if (restrict_to(labeled, base.elements()) == base)
            out.push_back(std::move(labeled));
    return out;
}

} // namespace

std::vector<LabeledSwitchboard>
one_point_extensions(const LabeledSwitchboard& base, ElementId fresh) {
    std::vector<ElementId> ground = base.elements();
    ground.push_back(fresh);
    std::sort(ground.begin(), ground.end());

    // Candidate order slots: {fresh,x} against a disjoint base edge.
    std::vector<EdgePair> slots;
    for (ElementId x : base.elements())
        for (const Edge& f : base.edges())
            if (!f.contains(x))
                slots.emplace_back(Edge(fresh, x), f);

    std::vector<LabeledSwitchboard> out;
    std::vector<int> state(slots.size(), 0); // 0 none, 1 below, 2 above
    for (;;) {
        std::vector<EdgePair> lt = base.lt_pairs();
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (state[i] == 1)
                lt.emplace_back(slots[i].first, slots[i].second);
            else if (state[i] == 2)
                lt.emplace_back(slots[i].second, slots[i].first);
        }
        Switchboard candidate(ground, closed(std::move(lt)));
        if (validate(candidate).valid &&
            restrict_to(candidate, base.elements()) == base.base() &&
            forced_labels_match_base(candidate, base)) {
            auto extensions = labelings_extending(candidate, base);
            out.insert(out.end(), extensions.begin(), extensions.end());
        }
        std::size_t i = 0;
        while (i < state.size() && state[i] == 2)
            state[i++] = 0;
        if (i == state.size())
            break;
        ++state[i];
    }
    return out;
}

LabeledSwitchboard random_one_point_extension(const LabeledSwitchboard& base,
                                              ElementId fresh,
                                              swb::gen::DetRng& rng,
                                              double density) {
    std::vector<ElementId> ground = base.elements();
    ground.push_back(fresh);
    std::sort(ground.begin(), ground.end());

    Switchboard current(ground, base.lt_pairs());
    for (ElementId x : base.elements()) {
        for (const Edge& f : base.edges()) {
            if (f.contains(x))
                continue;
            Edge ex(fresh, x);
            for (bool below : {true, false}) {
                if (!rng.coin(density / 2))
                    continue;
                std::vector<EdgePair> next = current.lt_pairs();
                next.emplace_back(below ? ex : f, below ? f : ex);
                Switchboard candidate(ground, closed(std::move(next)));
                if (validate(candidate).valid &&
                    restrict_to(candidate, base.elements()) == base.base() &&
                    forced_labels_match_base(candidate, base))
                    current = std::move(candidate);
            }
        }
    }

    // Labels bottom-up: base slots stay fixed, new slots follow the forced
    // facts and a coin otherwise.
    std::vector<UpFact> up = base.up_pairs();
    auto has_up = [&](ElementId a, const Edge& ed) {
        return std::find(up.begin(), up.end(), UpFact{a, ed}) != up.end();
    };
    for (const Edge& ed : edges_bottom_up(current)) {
        for (ElementId a : ground) {
            if (ed.contains(a))
                continue;
            bool base_slot = a != fresh && !ed.contains(fresh);
            if (base_slot)
                continue;
            bool forced_up = false, forced_down = false;
            for (ElementId z : ground) {
                if (z == a || ed.contains(z))
                    continue;
                if (current.less(Edge(a, z), ed))
                    forced_up = true;
                if (current.less(ed, Edge(a, z)))
                    forced_down = true;
            }
            for (const auto& [p, q] : current.lt_pairs()) {
                if (q == ed && has_up(a, p))
                    forced_up = true;
                // A fixed base slot sitting above ed caps the choice: favor
                // here would propagate upward into a fixed disfavor.
                if (p == ed && a != fresh && !q.contains(fresh) &&
                    !q.contains(a) && !base.up(a, q))
                    forced_down = true;
            }
            if (forced_up || (!forced_down && rng.coin(0.5)))
                up.emplace_back(a, ed);
        }
    }
    LabeledSwitchboard out(std::move(current), std::move(up));
    require_valid(out, "random_one_point_extension");
    return out;
}

swb::gen::TwoTypeSpec random_two_type_spec(int base_size, std::uint64_t seed) {
    swb::gen::DetRng rng(seed);
    for (;;) {
        LabeledSwitchboard base =
            swb::gen::random_labeled(base_size, rng.next(), 0.3);
        ElementId s = base_size, t = base_size + 1;
        LabeledSwitchboard p = random_one_point_extension(base, s, rng);
        // Glue a second copy of p at t: shared base facts plus p's facts
        // renamed, no cross facts yet.
        LabeledSwitchboard p2 = rename(p, {{s, t}});
        std::vector<ElementId> ground = p.elements();
        ground.push_back(t);
        std::vector<EdgePair> lt = p.lt_pairs();
        for (const auto& [a, b] : p2.lt_pairs())
            lt.emplace_back(a, b);
        std::vector<UpFact> up = p.up_pairs();
        for (const auto& [a, ed] : p2.up_pairs())
            up.emplace_back(a, ed);
        std::sort(up.begin(), up.end());
        up.erase(std::unique(up.begin(), up.end()), up.end());
        // Closing the union can add cross facts between {s,.} and {t,.}
        // edges; those lie outside both restrictions.
        Switchboard joint(ground, closed(std::move(lt)));

        // Cross order facts: {s,b} vs {t,c} or {s,t} vs a base edge, kept
        // only when the closure adds nothing inside either restriction.
        std::vector<EdgePair> cross_slots;
        for (ElementId b : base.elements())
            for (ElementId c : base.elements())
                if (b != c)
                    cross_slots.emplace_back(Edge(s, b), Edge(t, c));
        for (const Edge& ed : base.edges())
            cross_slots.emplace_back(Edge(s, t), ed);
        auto restriction_ok = [&](const Switchboard& candidate,
                                  ElementId point) {
            std::vector<ElementId> ids = base.elements();
            ids.push_back(point);
            std::sort(ids.begin(), ids.end());
            Switchboard want = restrict_to(joint, ids);
            return restrict_to(candidate, ids) == want;
        };
        Switchboard current = joint;
        for (const auto& [x, y] : cross_slots) {
            for (bool forward : {true, false}) {
                if (!rng.coin(0.25))
                    continue;
                std::vector<EdgePair> next = current.lt_pairs();
                next.emplace_back(forward ? x : y, forward ? y : x);
                Switchboard candidate(ground, closed(std::move(next)));
                if (validate(candidate).valid &&
                    restriction_ok(candidate, s) &&
                    restriction_ok(candidate, t))
                    current = std::move(candidate);
            }
        }

        // Fill the label slots that belong to neither restriction: s vs
        // {t,b}, t vs {s,b}, b vs {s,t}.
        auto has_up = [&](ElementId a, const Edge& ed) {
            return std::find(up.begin(), up.end(), UpFact{a, ed}) != up.end();
        };
        for (const Edge& ed : edges_bottom_up(current)) {
            bool new_slot = ed.contains(s) || ed.contains(t);
            if (!new_slot)
                continue;
            for (ElementId a : ground) {
                if (ed.contains(a) || has_up(a, ed))
                    continue;
                bool inside_s = !ed.contains(t) && a != t;
                bool inside_t = !ed.contains(s) && a != s;
                if (inside_s || inside_t)
                    continue; // fixed by p(x) ∪ p(y)
                bool forced_up = false, forced_down = false;
                for (ElementId z : ground) {
                    if (z == a || ed.contains(z))
                        continue;
                    if (current.less(Edge(a, z), ed))
                        forced_up = true;
                    if (current.less(ed, Edge(a, z)))
                        forced_down = true;
                }
                for (const auto& [pp, qq] : current.lt_pairs()) {
                    if (qq == ed && has_up(a, pp))
                        forced_up = true;
                    if (pp == ed && !qq.contains(a)) {
                        bool fixed = (!qq.contains(t) && a != t) ||
                                     (!qq.contains(s) && a != s);
                        if (fixed && !has_up(a, qq))
                            forced_down = true;
                    }
                }
                if (forced_up || (!forced_down && rng.coin(0.5)))
                    up.emplace_back(a, ed);
            }
        }
        std::sort(up.begin(), up.end());
        LabeledSwitchboard structure(current, up);
        if (!validate(structure).valid)
            continue; // resample
        swb::gen::TwoTypeSpec spec{std::move(structure), s, t};
        std::vector<ElementId> b1 = base.elements(), b2 = base.elements();
        b1.push_back(s);
        b2.push_back(t);
        std::sort(b1.begin(), b1.end());
        std::sort(b2.begin(), b2.end());
        if (restrict_to(spec.structure, b1) != p ||
            restrict_to(spec.structure, b2) != p2)
            continue; // a cross fact leaked into a restriction; resample
        return spec;
    }
}

} // namespace helpers
