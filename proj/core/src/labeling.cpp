#include "swb/labeling.hpp"

#include <algorithm>
#include <cstdlib>

#include "swb/validation.hpp"

namespace swb {

LabeledSwitchboard label_canonical(const Switchboard& s) {
    require_valid(s, "label_canonical");
    std::vector<UpFact> up;
    for (ElementId a : s.elements()) {
        for (const Edge& e : s.edges()) {
            if (e.contains(a))
                continue;
            bool favored = false;
            for (ElementId z : s.elements()) {
                if (z == a || e.contains(z))
                    continue;
                if (s.less(Edge(a, z), e)) {
                    favored = true;
                    break;
                }
            }
            if (favored)
                up.emplace_back(a, e);
        }
    }
    return LabeledSwitchboard(s, std::move(up));
}

EnumerationLimits EnumerationLimits::from_env() {
    EnumerationLimits limits;
    if (const char* cap = std::getenv("SWB_SIZE_CAP")) {
        char* rest = nullptr;
        long elems = std::strtol(cap, &rest, 10);
        if (rest == cap || elems <= 0)
            throw format_error("SWB_SIZE_CAP: expected a positive integer");
        limits.max_elements = static_cast<int>(elems);
        if (*rest == ',') {
            char* tail = nullptr;
            long long nodes = std::strtoll(rest + 1, &tail, 10);
            if (tail == rest + 1 || *tail != '\0' || nodes <= 0)
                throw format_error("SWB_SIZE_CAP: bad branch-node cap");
            limits.max_branch_nodes = nodes;
        } else if (*rest != '\0') {
            throw format_error("SWB_SIZE_CAP: trailing garbage");
        }
    }
    return limits;
}

namespace {

enum class Slot : char { unknown, up, down };

struct Enumerator {
    const Switchboard& s;
    const EnumerationLimits& limits;
    std::vector<Edge> edges;
    std::vector<UpFact> slots;            // free (element, edge) pairs
    std::int64_t branch_nodes = 0;
    std::vector<LabeledSwitchboard> results;

    // above[i] / below[i]: indices of edges strictly above / below edge i.
    std::vector<std::vector<int>> above, below;

    int edge_index(const Edge& e) const {
        return static_cast<int>(
            std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    }

    void emit(const std::vector<Slot>& state) {
        std::vector<UpFact> up;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (state[i] == Slot::up)
                up.push_back(slots[i]);
        results.emplace_back(s, std::move(up));
    }

    // Assigns slot i and propagates along the order; false on conflict.
    bool assign(std::vector<Slot>& state, std::size_t i, Slot value) {
        if (state[i] != Slot::unknown)
            return state[i] == value;
        state[i] = value;
        ElementId a = slots[i].first;
        int ei = edge_index(slots[i].second);
        const auto& next = value == Slot::up ? above[ei] : below[ei];
        for (int fj : next) {
            const Edge& f = edges[fj];
            if (f.contains(a))
                return false; // forced fact would hit an incident edge
            auto it = std::lower_bound(slots.begin(), slots.end(),
                                       UpFact{a, f});
            std::size_t j = static_cast<std::size_t>(it - slots.begin());
            if (!assign(state, j, value))
                return false;
        }
        return true;
    }

    void branch(std::vector<Slot> state, std::size_t from) {
        if (++branch_nodes > limits.max_branch_nodes)
            throw cap_exceeded(
                "enumerate_labelings: branch-node cap exceeded (" +
                std::to_string(limits.max_branch_nodes) + ")");
        while (from < slots.size() && state[from] != Slot::unknown)
            ++from;
        if (from == slots.size()) {
            emit(state);
            return;
        }
        for (Slot choice : {Slot::down, Slot::up}) {
            std::vector<Slot> next = state;
            if (assign(next, from, choice))
                branch(std::move(next), from + 1);
        }
    }
};

} // namespace

std::vector<LabeledSwitchboard>
enumerate_labelings(const Switchboard& s, const EnumerationLimits& limits) {
    require_valid(s, "enumerate_labelings");
    if (s.size() > limits.max_elements)
        throw cap_exceeded("enumerate_labelings: " + std::to_string(s.size()) +
                           " elements exceed the cap of " +
                           std::to_string(limits.max_elements));
    Enumerator en{s, limits, s.edges(), {}, 0, {}, {}, {}};
    en.above.resize(en.edges.size());
    en.below.resize(en.edges.size());
    for (const auto& [e, f] : s.lt_pairs()) {
        en.above[en.edge_index(e)].push_back(en.edge_index(f));
        en.below[en.edge_index(f)].push_back(en.edge_index(e));
    }
    for (ElementId a : s.elements())
        for (const Edge& e : en.edges)
            if (!e.contains(a))
                en.slots.emplace_back(a, e);

    std::vector<Slot> state(en.slots.size(), Slot::unknown);
    // Seed the forced facts: an edge through a below e forces favor, one
    // above e forces disfavor.  Both at once cannot happen in a valid input.
    for (std::size_t i = 0; i < en.slots.size(); ++i) {
        const auto& [a, e] = en.slots[i];
        for (ElementId z : s.elements()) {
            if (z == a || e.contains(z))
                continue;
            Edge az(a, z);
            bool ok = true;
            if (s.less(az, e))
                ok = en.assign(state, i, Slot::up);
            else if (s.less(e, az))
                ok = en.assign(state, i, Slot::down);
            if (!ok)
                throw validation_error(
                    "enumerate_labelings: conflicting forced facts");
        }
    }
    en.branch(std::move(state), 0);
    std::sort(en.results.begin(), en.results.end(),
              [](const LabeledSwitchboard& x, const LabeledSwitchboard& y) {
                  return x.up_pairs() < y.up_pairs();
              });
    return en.results;
}

} // namespace swb
