#include "swb/amalg/partial_relation.hpp"

#include <algorithm>

namespace swb::amalg {

PartialRelation::PartialRelation(std::vector<Node> carrier,
                                 std::vector<NodePair> pairs)
    : carrier_(std::move(carrier)), pairs_(std::move(pairs)) {
    std::sort(carrier_.begin(), carrier_.end());
    carrier_.erase(std::unique(carrier_.begin(), carrier_.end()),
                   carrier_.end());
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (const auto& [x, y] : pairs_)
        if (!in_carrier(x) || !in_carrier(y))
            throw format_error("relation fact outside the carrier");
    for (const auto& [x, y] : pairs_)
        for (const auto& [u, v] : pairs_)
            if (y == u && x != v && !has(x, v))
                throw precondition_error(
                    "relation is not transitive: " + to_string(x) + " -> " +
                    to_string(y) + " -> " + to_string(v));
}

bool PartialRelation::has(const Node& x, const Node& y) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), NodePair{x, y});
}

bool PartialRelation::in_carrier(const Node& x) const {
    return std::binary_search(carrier_.begin(), carrier_.end(), x);
}

PartialRelation union_closure(const PartialRelation& r1,
                              const PartialRelation& r2) {
    // The two relations must agree on the shared part of their carriers.
    for (const Node& x : r1.carrier()) {
        if (!r2.in_carrier(x))
            continue;
        for (const Node& y : r1.carrier()) {
            if (!r2.in_carrier(y))
                continue;
            if (r1.has(x, y) != r2.has(x, y))
                throw precondition_error(
                    "union_closure: relations disagree on " + to_string(x) +
                    " vs " + to_string(y));
        }
    }

    std::vector<Node> carrier;
    carrier.reserve(r1.carrier().size() + r2.carrier().size());
    carrier.insert(carrier.end(), r1.carrier().begin(), r1.carrier().end());
    carrier.insert(carrier.end(), r2.carrier().begin(), r2.carrier().end());
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

    const std::size_t n = carrier.size();
    auto index = [&](const Node& x) {
        return static_cast<std::size_t>(
            std::lower_bound(carrier.begin(), carrier.end(), x) -
            carrier.begin());
    };

    // Warshall on a bit matrix.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> reach(n * words, 0);
    auto set = [&](std::size_t i, std::size_t j) {
        reach[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    };
    auto get = [&](std::size_t i, std::size_t j) {
        return (reach[i * words + j / 64] >> (j % 64)) & 1;
    };
    for (const auto& [x, y] : r1.pairs())
        set(index(x), index(y));
    for (const auto& [x, y] : r2.pairs())
        set(index(x), index(y));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (get(i, k))
                for (std::size_t w = 0; w < words; ++w)
                    reach[i * words + w] |= reach[k * words + w];

    std::vector<NodePair> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (get(i, j))
                pairs.emplace_back(carrier[i], carrier[j]);
    return PartialRelation(std::move(carrier), std::move(pairs));
}

PartialRelation restrict_to(const PartialRelation& r,
                            const std::vector<Node>& sub) {
    std::vector<Node> carrier = sub;
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    for (const Node& x : carrier)
        if (!r.in_carrier(x))
            throw precondition_error("restrict: node outside the carrier");
    auto inside = [&](const Node& x) {
        return std::binary_search(carrier.begin(), carrier.end(), x);
    };
    std::vector<NodePair> pairs;
    for (const auto& [x, y] : r.pairs())
        if (inside(x) && inside(y))
            pairs.emplace_back(x, y);
    return PartialRelation(std::move(carrier), std::move(pairs));
}

PartialRelation as_partial_relation(const TriangleRelation& t) {
    std::vector<Node> carrier;
    for (ElementId x : t.elements())
        carrier.push_back(Node::element(x));
    for (std::size_t i = 0; i < t.elements().size(); ++i)
        for (std::size_t j = i + 1; j < t.elements().size(); ++j)
            carrier.push_back(
                Node::edge(Edge(t.elements()[i], t.elements()[j])));
    return PartialRelation(std::move(carrier), t.rel());
}

} // namespace swb::amalg
