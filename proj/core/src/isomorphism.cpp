#include "swb/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace swb {

namespace {

ElementId image(const IsoMap& map, ElementId x) {
    auto it = std::lower_bound(map.begin(), map.end(),
                               std::pair<ElementId, ElementId>{x, 0},
                               [](const auto& p, const auto& q) {
                                   return p.first < q.first;
                               });
    return it->second;
}

// Per-element fact counts, used to prune the backtracking search.
std::array<int, 3> profile(const LabeledSwitchboard& l, ElementId x) {
    std::array<int, 3> p{0, 0, 0};
    for (const auto& [a, e] : l.up_pairs()) {
        if (a == x)
            ++p[0];
        if (e.contains(x))
            ++p[1];
    }
    for (const auto& [e, f] : l.lt_pairs())
        p[2] += (e.contains(x) ? 1 : 0) + (f.contains(x) ? 1 : 0);
    return p;
}

struct Search {
    const LabeledSwitchboard& l1;
    const LabeledSwitchboard& l2;
    std::vector<ElementId> dom, cod;
    std::map<ElementId, ElementId> fwd;
    std::vector<bool> used;

    // Facts among the mapped elements plus the candidate pair (x, y) must
    // match in both directions; only tuples involving x are new.
    bool consistent(ElementId x, ElementId y) const {
        std::vector<ElementId> src{x}, img{y};
        for (const auto& [from, to] : fwd) {
            src.push_back(from);
            img.push_back(to);
        }
        const std::size_t k = src.size();
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                Edge e(src[a], src[b]), e2(img[a], img[b]);
                for (std::size_t c = 0; c < k; ++c) {
                    if (c == a || c == b)
                        continue;
                    bool involves_x = a == 0 || b == 0 || c == 0;
                    if (involves_x && l1.up(src[c], e) != l2.up(img[c], e2))
                        return false;
                    for (std::size_t d = c + 1; d < k; ++d) {
                        if (d == a || d == b)
                            continue;
                        if (!(involves_x || d == 0))
                            continue;
                        Edge f(src[c], src[d]), f2(img[c], img[d]);
                        if (l1.less(e, f) != l2.less(e2, f2) ||
                            l1.less(f, e) != l2.less(f2, e2))
                            return false;
                    }
                }
            }
        }
        return true;
    }

    bool extend(std::size_t i) {
        if (i == dom.size())
            return true;
        ElementId x = dom[i];
        for (std::size_t j = 0; j < cod.size(); ++j) {
            if (used[j])
                continue;
            ElementId y = cod[j];
            if (profile(l1, x) != profile(l2, y))
                continue;
            if (!consistent(x, y))
                continue;
            fwd[x] = y;
            used[j] = true;
            if (extend(i + 1))
                return true;
            fwd.erase(x);
            used[j] = false;
        }
        return false;
    }
};

} // namespace

bool is_isomorphism(const LabeledSwitchboard& l1, const LabeledSwitchboard& l2,
                    const IsoMap& map) {
    if (map.size() != l1.elements().size() ||
        l1.elements().size() != l2.elements().size())
        return false;
    std::vector<ElementId> sources, targets;
    for (const auto& [from, to] : map) {
        sources.push_back(from);
        targets.push_back(to);
    }
    std::sort(targets.begin(), targets.end());
    if (sources != l1.elements() || targets != l2.elements())
        return false;
    // Preservation both ways: facts mapped forward must hold in l2 and the
    // counts must match, so nothing extra can hold there either.
    for (const auto& [e, f] : l1.lt_pairs())
        if (!l2.less(Edge(image(map, e.lo), image(map, e.hi)),
                     Edge(image(map, f.lo), image(map, f.hi))))
            return false;
    for (const auto& [a, e] : l1.up_pairs())
        if (!l2.up(image(map, a), Edge(image(map, e.lo), image(map, e.hi))))
            return false;
    return l1.lt_pairs().size() == l2.lt_pairs().size() &&
           l1.up_pairs().size() == l2.up_pairs().size();
}

std::optional<IsoMap> find_isomorphism(const LabeledSwitchboard& l1,
                                       const LabeledSwitchboard& l2) {
    if (l1.elements().size() != l2.elements().size() ||
        l1.lt_pairs().size() != l2.lt_pairs().size() ||
        l1.up_pairs().size() != l2.up_pairs().size())
        return std::nullopt;
    Search search{l1, l2, l1.elements(), l2.elements(), {},
                  std::vector<bool>(l2.elements().size(), false)};
    if (!search.extend(0))
        return std::nullopt;
    IsoMap map(search.fwd.begin(), search.fwd.end());
    return map;
}

} // namespace swb
