#include "swb/switchboard.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace swb {

namespace {

std::vector<ElementId> iota_ids(int n) {
    if (n < 0)
        throw format_error("negative element count");
    std::vector<ElementId> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

void check_edge_over(const Switchboard& s, const Edge& e,
                     const char* context) {
    if (!s.has_element(e.lo) || !s.has_element(e.hi))
        throw format_error(std::string(context) + ": edge " + to_string(e) +
                           " not over the ground set");
}

template <typename T> void sort_unique(std::vector<T>& v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw format_error(std::string("duplicate ") + what);
}

} // namespace

Switchboard::Switchboard(int n, std::vector<EdgePair> lt,
                         std::map<ElementId, std::string> names)
    : Switchboard(iota_ids(n), std::move(lt), std::move(names)) {}

Switchboard::Switchboard(std::vector<ElementId> elements,
                         std::vector<EdgePair> lt,
                         std::map<ElementId, std::string> names)
    : elements_(std::move(elements)), lt_(std::move(lt)),
      names_(std::move(names)) {
    sort_unique(elements_, "element id");
    for (ElementId x : elements_)
        if (x < 0)
            throw format_error("negative element id");
    sort_unique(lt_, "lt fact");
    for (const auto& [e, f] : lt_) {
        check_edge_over(*this, e, "lt");
        check_edge_over(*this, f, "lt");
    }
    std::set<std::string> seen;
    for (const auto& [id, name] : names_) {
        if (!has_element(id))
            throw format_error("name for unknown element " +
                               std::to_string(id));
        if (name.empty() || !seen.insert(name).second)
            throw format_error("display names must be unique and non-empty");
    }
}

bool Switchboard::has_element(ElementId x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Switchboard::contiguous() const {
    return elements_.empty() || elements_.back() == size() - 1;
}

bool Switchboard::less(const Edge& e, const Edge& f) const {
    return std::binary_search(lt_.begin(), lt_.end(), EdgePair{e, f});
}

std::vector<Edge> Switchboard::edges() const {
    std::vector<Edge> out;
    out.reserve(elements_.size() * (elements_.size() + 1) / 2);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j)
            out.emplace_back(elements_[i], elements_[j]);
    return out;
}

LabeledSwitchboard::LabeledSwitchboard(Switchboard base,
                                       std::vector<UpFact> up)
    : base_(std::move(base)), up_(std::move(up)) {
    sort_unique(up_, "up fact");
    for (const auto& [a, e] : up_) {
        if (!base_.has_element(a))
            throw format_error("up: element " + std::to_string(a) +
                               " not in the ground set");
        check_edge_over(base_, e, "up");
    }
}

bool LabeledSwitchboard::up(ElementId a, const Edge& e) const {
    return std::binary_search(up_.begin(), up_.end(), UpFact{a, e});
}

namespace {

std::vector<ElementId> checked_subset(const std::vector<ElementId>& ground,
                                      std::span<const ElementId> subset) {
    std::vector<ElementId> ids(subset.begin(), subset.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (ElementId x : ids)
        if (!std::binary_search(ground.begin(), ground.end(), x))
            throw precondition_error("restrict: element " + std::to_string(x) +
                                     " not in the ground set");
    return ids;
}

bool edge_inside(const std::vector<ElementId>& ids, const Edge& e) {
    return std::binary_search(ids.begin(), ids.end(), e.lo) &&
           std::binary_search(ids.begin(), ids.end(), e.hi);
}

} // namespace

Switchboard restrict_to(const Switchboard& s,
                        std::span<const ElementId> subset) {
    auto ids = checked_subset(s.elements(), subset);
    std::vector<EdgePair> lt;
    for (const auto& [e, f] : s.lt_pairs())
        if (edge_inside(ids, e) && edge_inside(ids, f))
            lt.emplace_back(e, f);
    std::map<ElementId, std::string> names;
    for (const auto& [id, name] : s.names())
        if (std::binary_search(ids.begin(), ids.end(), id))
            names.emplace(id, name);
    return Switchboard(std::move(ids), std::move(lt), std::move(names));
}

LabeledSwitchboard restrict_to(const LabeledSwitchboard& l,
                               std::span<const ElementId> subset) {
    Switchboard base = restrict_to(l.base(), subset);
    const auto& ids = base.elements();
    std::vector<UpFact> up;
    for (const auto& [a, e] : l.up_pairs())
        if (std::binary_search(ids.begin(), ids.end(), a) &&
            edge_inside(ids, e))
            up.emplace_back(a, e);
    return LabeledSwitchboard(std::move(base), std::move(up));
}

namespace {

ElementId map_id(const std::map<ElementId, ElementId>& map, ElementId x) {
    auto it = map.find(x);
    return it == map.end() ? x : it->second;
}

} // namespace

Switchboard rename(const Switchboard& s,
                   const std::map<ElementId, ElementId>& map) {
    std::vector<ElementId> elements;
    elements.reserve(s.elements().size());
    for (ElementId x : s.elements())
        elements.push_back(map_id(map, x));
    std::set<ElementId> distinct(elements.begin(), elements.end());
    if (distinct.size() != elements.size())
        throw precondition_error("rename: target ids collide");
    std::vector<EdgePair> lt;
    lt.reserve(s.lt_pairs().size());
    for (const auto& [e, f] : s.lt_pairs())
        lt.emplace_back(Edge(map_id(map, e.lo), map_id(map, e.hi)),
                        Edge(map_id(map, f.lo), map_id(map, f.hi)));
    std::map<ElementId, std::string> names;
    for (const auto& [id, name] : s.names())
        names.emplace(map_id(map, id), name);
    return Switchboard(std::move(elements), std::move(lt), std::move(names));
}

LabeledSwitchboard rename(const LabeledSwitchboard& l,
                          const std::map<ElementId, ElementId>& map) {
    Switchboard base = rename(l.base(), map);
    std::vector<UpFact> up;
    up.reserve(l.up_pairs().size());
    for (const auto& [a, e] : l.up_pairs())
        up.emplace_back(map_id(map, a),
                        Edge(map_id(map, e.lo), map_id(map, e.hi)));
    return LabeledSwitchboard(std::move(base), std::move(up));
}

} // namespace swb
