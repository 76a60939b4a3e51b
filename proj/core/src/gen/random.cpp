#include "swb/gen/random.hpp"

#include <algorithm>
#include <stdexcept>

#include "swb/validation.hpp"

namespace swb::gen {

std::uint64_t DetRng::below(std::uint64_t bound) {
    if (bound == 0)
        throw precondition_error("DetRng::below: zero bound");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t draw = next();
        if (draw < limit)
            return draw % bound;
    }
}

bool DetRng::coin(double p) {
    if (p <= 0.0)
        return false;
    if (p >= 1.0)
        return true;
    // 53-bit mantissa draw; deterministic under IEEE doubles.
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
}

namespace {

struct OrderBuilder {
    std::vector<Edge> edges;
    // reach[i][j]: edge i strictly below edge j, transitively closed.
    std::vector<std::vector<bool>> reach;

    explicit OrderBuilder(std::vector<Edge> all)
        : edges(std::move(all)),
          reach(edges.size(), std::vector<bool>(edges.size(), false)) {}

    // Accepts the candidate fact e < f if the closure stays a valid
    // switchboard order; returns whether it was added.
    bool try_add(std::size_t i, std::size_t j) {
        if (i == j || reach[i][j] || reach[j][i])
            return false;
        std::vector<std::size_t> preds{i}, succs{j};
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (reach[k][i])
                preds.push_back(k);
            if (reach[j][k])
                succs.push_back(k);
        }
        for (std::size_t p : preds)
            for (std::size_t s : succs) {
                if (p == s)
                    return false; // would close a cycle
                if (!edges[p].disjoint(edges[s]))
                    return false; // incident edges would become comparable
            }
        for (std::size_t p : preds)
            for (std::size_t s : succs)
                reach[p][s] = true;
        return true;
    }
};

} // namespace

LabeledSwitchboard random_labeled(int n, std::uint64_t seed, double density) {
    if (n < 0)
        throw precondition_error("random_labeled: negative n");
    if (density < 0.0 || density > 1.0)
        throw precondition_error("random_labeled: density must be in [0,1]");
    DetRng rng(seed);

    Switchboard plain(n, {});
    OrderBuilder builder(plain.edges());
    const std::size_t m = builder.edges.size();

    // Candidate ordered pairs of disjoint edges, visited in a seeded order.
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && builder.edges[i].disjoint(builder.edges[j]))
                candidates.emplace_back(i, j);
    for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng.below(i)]);

    for (const auto& [i, j] : candidates)
        if (rng.coin(density))
            builder.try_add(i, j);

    std::vector<EdgePair> lt;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (builder.reach[i][j])
                lt.emplace_back(builder.edges[i], builder.edges[j]);
    Switchboard base(n, std::move(lt));

    // Labels along a topological order of the edge poset (Kahn, canonical
    // tie-break): favor when a smaller edge forces it, disfavor when a
    // larger one does, otherwise flip a coin.
    std::vector<std::size_t> topo;
    {
        std::vector<int> indeg(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (builder.reach[i][j])
                    ++indeg[j];
        std::vector<bool> done(m, false);
        for (std::size_t round = 0; round < m; ++round) {
            std::size_t pick = m;
            for (std::size_t i = 0; i < m; ++i)
                if (!done[i] && indeg[i] == 0) {
                    pick = i;
                    break;
                }
            done[pick] = true;
            topo.push_back(pick);
            for (std::size_t j = 0; j < m; ++j)
                if (builder.reach[pick][j])
                    --indeg[j];
        }
    }

    std::vector<UpFact> up;
    auto favored = [&](ElementId a, const Edge& e) {
        return std::find(up.begin(), up.end(), UpFact{a, e}) != up.end();
    };
    for (std::size_t idx : topo) {
        const Edge& e = builder.edges[idx];
        for (ElementId a = 0; a < n; ++a) {
            if (e.contains(a))
                continue;
            bool forced_up = false, forced_down = false;
            for (ElementId z = 0; z < n; ++z) {
                if (z == a || e.contains(z))
                    continue;
                Edge az(a, z);
                forced_up = forced_up || base.less(az, e);
                forced_down = forced_down || base.less(e, az);
            }
            for (std::size_t k = 0; k < m; ++k)
                if (builder.reach[k][idx] && favored(a, builder.edges[k]))
                    forced_up = true;
            if (forced_up && forced_down)
                throw std::logic_error(
                    "random_labeled: conflicting forced labels");
            if (forced_up || (!forced_down && rng.coin(0.5)))
                up.emplace_back(a, e);
        }
    }

    LabeledSwitchboard out(std::move(base), std::move(up));
    require_valid(out, "random_labeled: generated structure");
    return out;
}

} // namespace swb::gen
