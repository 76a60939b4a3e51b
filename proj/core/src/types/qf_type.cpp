#include "swb/types/qf_type.hpp"

#include <algorithm>

#include "swb/errors.hpp"

namespace swb::types {

namespace {

const char* kind_name(FactKind k) {
    switch (k) {
    case FactKind::lt: return "lt";
    case FactKind::up: return "up";
    case FactKind::down: return "down";
    case FactKind::eq: return "eq";
    }
    return "?";
}

std::string arg_name(const TypeArg& a) {
    return (a.is_base ? "b" : "x") + std::to_string(a.index);
}

} // namespace

std::string TypeFact::to_string() const {
    std::string out = kind_name(kind);
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            out += ",";
        out += arg_name(args[i]);
    }
    out += ")";
    return out;
}

std::string QfType::to_string() const {
    std::string out;
    for (const TypeFact& f : facts) {
        if (!out.empty())
            out += " ";
        out += f.to_string();
    }
    return out.empty() ? "(empty)" : out;
}

QfType qf_type(const LabeledSwitchboard& m, std::span<const ElementId> tuple,
               std::span<const ElementId> base) {
    QfType out;
    out.arity = static_cast<int>(tuple.size());
    out.base.assign(base.begin(), base.end());
    std::sort(out.base.begin(), out.base.end());
    out.base.erase(std::unique(out.base.begin(), out.base.end()),
                   out.base.end());

    for (ElementId b : out.base)
        if (!m.has_element(b))
            throw precondition_error("qf_type: base element " +
                                     std::to_string(b) + " not in m");
    for (ElementId t : tuple) {
        if (!m.has_element(t))
            throw precondition_error("qf_type: tuple element " +
                                     std::to_string(t) + " not in m");
        if (std::binary_search(out.base.begin(), out.base.end(), t))
            throw precondition_error(
                "qf_type: tuple and base overlap at " + std::to_string(t));
    }

    // Element -> canonical argument; tuple positions win over base.
    auto arg_of = [&](ElementId x) -> TypeArg {
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (tuple[i] == x)
                return TypeArg{false, static_cast<int>(i)};
        auto it = std::lower_bound(out.base.begin(), out.base.end(), x);
        return TypeArg{true, static_cast<int>(it - out.base.begin())};
    };
    auto edge_args = [&](const Edge& e) {
        TypeArg u = arg_of(e.lo), v = arg_of(e.hi);
        return u < v ? std::pair{u, v} : std::pair{v, u};
    };

    std::vector<ElementId> arena(tuple.begin(), tuple.end());
    arena.insert(arena.end(), out.base.begin(), out.base.end());
    std::sort(arena.begin(), arena.end());
    arena.erase(std::unique(arena.begin(), arena.end()), arena.end());
    auto in_arena = [&](ElementId x) {
        return std::binary_search(arena.begin(), arena.end(), x);
    };
    auto edge_in_arena = [&](const Edge& e) {
        return in_arena(e.lo) && in_arena(e.hi);
    };

    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j])
                out.facts.push_back(
                    {FactKind::eq,
                     {TypeArg{false, static_cast<int>(i)},
                      TypeArg{false, static_cast<int>(j)}}});

    for (const auto& [e, f] : m.lt_pairs())
        if (edge_in_arena(e) && edge_in_arena(f)) {
            auto [e1, e2] = edge_args(e);
            auto [f1, f2] = edge_args(f);
            out.facts.push_back({FactKind::lt, {e1, e2, f1, f2}});
        }

    std::vector<Edge> arena_edges;
    for (std::size_t i = 0; i < arena.size(); ++i)
        for (std::size_t j = i + 1; j < arena.size(); ++j)
            arena_edges.emplace_back(arena[i], arena[j]);
    for (ElementId a : arena)
        for (const Edge& e : arena_edges) {
            if (e.contains(a))
                continue;
            auto [e1, e2] = edge_args(e);
            out.facts.push_back({m.up(a, e) ? FactKind::up : FactKind::down,
                                 {arg_of(a), e1, e2}});
        }

    std::sort(out.facts.begin(), out.facts.end());
    return out;
}

} // namespace swb::types
