#include "commands.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "swb/amalg/amalgamate.hpp"
#include "swb/amalg/free_amalgam.hpp"
#include "swb/amalg/partial_relation.hpp"
#include "swb/format.hpp"
#include "swb/gen/random.hpp"
#include "swb/gen/witness.hpp"
#include "swb/labeling.hpp"
#include "swb/order/chain.hpp"
#include "swb/order/phi_poset.hpp"
#include "swb/triangle.hpp"
#include "swb/types/core_sequence.hpp"
#include "swb/types/qf_type.hpp"
#include "swb/types/symmetry.hpp"
#include "swb/validation.hpp"

namespace swbtool {

using namespace swb;

namespace {

// Reachability closure by BFS, independent of the library's Warshall path.
std::set<NodePair> bfs_closure(const std::vector<NodePair>& pairs) {
    std::map<Node, std::vector<Node>> succ;
    std::set<Node> nodes;
    for (const auto& [x, y] : pairs) {
        succ[x].push_back(y);
        nodes.insert(x);
        nodes.insert(y);
    }
    std::set<NodePair> out;
    for (const Node& start : nodes) {
        std::deque<Node> queue(succ[start].begin(), succ[start].end());
        std::set<Node> seen;
        while (!queue.empty()) {
            Node cur = queue.front();
            queue.pop_front();
            if (!seen.insert(cur).second)
                continue;
            out.insert({start, cur});
            for (const Node& next : succ[cur])
                queue.push_back(next);
        }
    }
    return out;
}

// A base with a correlated pair of one-point extensions, carved out of one
// random structure on two extra elements.
struct ExtensionPair {
    LabeledSwitchboard base, left, right;
    ElementId a1, a2;
};

ExtensionPair carve(int base_size, std::uint64_t seed, double density) {
    LabeledSwitchboard m =
        gen::random_labeled(base_size + 2, seed, density);
    std::vector<ElementId> ids;
    for (int i = 0; i < base_size; ++i)
        ids.push_back(i);
    ExtensionPair out;
    out.base = restrict_to(m, ids);
    ids.push_back(base_size);
    out.left = restrict_to(m, ids);
    ids.back() = base_size + 1;
    out.right = restrict_to(m, ids);
    out.a1 = base_size;
    out.a2 = base_size + 1;
    return out;
}

struct Battery {
    bool all_ok = true;

    void run(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& err) {
            note = err.what();
        }
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok && !note.empty())
            std::cerr << name << ": " << note << "\n";
        all_ok = all_ok && ok;
    }
};

} // namespace

int cmd_check() {
    Battery battery;

    battery.run("labeling-count-3", [] {
        auto all = enumerate_labelings(Switchboard(3, {}));
        if (all.size() != 8)
            return false;
        LabeledSwitchboard canonical = label_canonical(Switchboard(3, {}));
        bool found = false;
        for (const auto& l : all) {
            if (!validate(l).valid)
                return false;
            found = found || l == canonical;
        }
        return found;
    });

    battery.run("three-element-order-empty", [] {
        Switchboard frame(3, {});
        for (const Edge& a : frame.edges())
            for (const Edge& b : frame.edges())
                if (!(a == b) && validate(Switchboard(3, {{a, b}})).valid)
                    return false;
        return true;
    });

    battery.run("triangle-roundtrip", [] {
        for (const auto& l : enumerate_labelings(Switchboard(3, {})))
            if (!(from_triangle(to_triangle(l)) == l))
                return false;
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            LabeledSwitchboard l =
                gen::random_labeled(2 + seed % 6, seed * 3 + 1, 0.4);
            TriangleRelation t = to_triangle(l);
            if (!validate(t).valid || !(from_triangle(t) == l))
                return false;
        }
        return true;
    });

    battery.run("union-closure-oracle", [] {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            gen::DetRng rng(seed);
            int n = 4 + static_cast<int>(rng.below(5));
            std::vector<NodePair> raw;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng.coin(0.3))
                        raw.emplace_back(Node::element(i), Node::element(j));
            auto closure = bfs_closure(raw);
            std::vector<Node> x1, x2;
            for (int i = 0; i < n; ++i) {
                auto bucket = rng.below(3);
                if (bucket != 1)
                    x1.push_back(Node::element(i));
                if (bucket != 0)
                    x2.push_back(Node::element(i));
            }
            auto restrict_pairs = [&](const std::vector<Node>& carrier) {
                std::vector<NodePair> out;
                for (const auto& [x, y] : closure)
                    if (std::count(carrier.begin(), carrier.end(), x) &&
                        std::count(carrier.begin(), carrier.end(), y))
                        out.emplace_back(x, y);
                return out;
            };
            amalg::PartialRelation r1(x1, restrict_pairs(x1));
            amalg::PartialRelation r2(x2, restrict_pairs(x2));
            amalg::PartialRelation u = amalg::union_closure(r1, r2);
            std::vector<NodePair> merged = r1.pairs();
            merged.insert(merged.end(), r2.pairs().begin(), r2.pairs().end());
            auto expected = bfs_closure(merged);
            if (u.pairs() !=
                std::vector<NodePair>(expected.begin(), expected.end()))
                return false;
            if (!(amalg::restrict_to(u, r1.carrier()) == r1) ||
                !(amalg::restrict_to(u, r2.carrier()) == r2))
                return false;
        }
        return true;
    });

    battery.run("free-amalgam", [] {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            ExtensionPair pair = carve(static_cast<int>(seed % 5),
                                       seed * 11 + 3, 0.4);
            LabeledSwitchboard right =
                rename(pair.right, {{pair.a1, pair.a2}});
            // The carve names the right fresh point a2 already; harmless.
            (void)right;
            LabeledSwitchboard out = amalg::free_amalgam_one_point(
                pair.base, pair.left, pair.right);
            if (!validate(out).valid)
                return false;
            if (!(restrict_to(out, pair.left.elements()) == pair.left) ||
                !(restrict_to(out, pair.right.elements()) == pair.right))
                return false;
            if (!amalg::is_freely_amalgamated(out, pair.base.elements(),
                                              pair.a1, pair.a2))
                return false;
        }
        return true;
    });

    battery.run("witness-constructions", [] {
        int ups = 0, downs = 0;
        for (std::uint64_t seed = 0; ups < 25 || downs < 25; ++seed) {
            if (seed >= 400)
                return false;
            LabeledSwitchboard m =
                gen::random_labeled(4 + seed % 4, seed * 7 + 5, 0.5);
            for (ElementId x : m.elements())
                for (const Edge& e : m.edges()) {
                    if (e.contains(x))
                        continue;
                    if (m.up(x, e) && ups < 25) {
                        gen::WitnessResult res = gen::witness_up(m, x, e);
                        if (!validate(res.structure).valid ||
                            !res.structure.less(Edge(x, res.witness), e) ||
                            !(restrict_to(res.structure, m.elements()) == m))
                            return false;
                        ++ups;
                    } else if (m.down(x, e) && downs < 25) {
                        gen::WitnessResult res = gen::witness_down(m, x, e);
                        if (!validate(res.structure).valid ||
                            !res.structure.less(e, Edge(x, res.witness)) ||
                            !(restrict_to(res.structure, m.elements()) == m))
                            return false;
                        ++downs;
                    }
                }
        }
        return true;
    });

    battery.run("chain-heights", [] {
        for (int k = 0; k <= 8; ++k) {
            Switchboard s = order::chain_switchboard(k);
            if (!validate(s).valid ||
                order::hgt_all(order::edge_poset(s)).height != k)
                return false;
        }
        return true;
    });

    battery.run("height-monotonicity", [] {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            LabeledSwitchboard m =
                gen::random_labeled(3 + seed % 6, seed * 13 + 7, 0.5);
            order::FinitePoset p = order::edge_poset(m.base());
            order::HeightResult res = order::hgt_all(p);
            for (const auto& [a, b] : p.pairs())
                if (res.hgt.at(a) >= res.hgt.at(b))
                    return false;
        }
        return true;
    });

    battery.run("formula-roundtrip", [] {
        const char* corpus[] = {
            "lt(x1,x2,y1,y2)",
            "up(y1,x1,@3) & !eq(x1,@3)",
            "!(up(x1,y1,y2) | down(x1,y1,y2))",
            "eq(x1,y1) | eq(x1,y2) & !eq(y1,y2)",
        };
        for (const char* text : corpus) {
            order::FormulaPtr f = order::parse_formula(text);
            std::string printed = order::print_formula(f);
            if (!order::equal(order::parse_formula(printed), f))
                return false;
        }
        return true;
    });

    battery.run("phi-poset-chain", [] {
        LabeledSwitchboard m =
            label_canonical(order::chain_switchboard(2));
        order::FinitePoset p =
            order::phi_poset(m, order::parse_formula("lt(x1,x2,y1,y2)"),
                             {"x1", "x2"}, {"y1", "y2"});
        return p.validate().empty() && order::hgt_all(p).height == 2;
    });

    battery.run("gen-determinism", [] {
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            int n = static_cast<int>(seed % 9);
            LabeledSwitchboard a = gen::random_labeled(n, seed, 0.5);
            LabeledSwitchboard b = gen::random_labeled(n, seed, 0.5);
            if (!validate(a).valid || !(to_text(a) == to_text(b)))
                return false;
        }
        return true;
    });

    battery.run("symmetry-swap-types", [] {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            ExtensionPair pair = carve(3, seed * 17 + 11, 0.4);
            LabeledSwitchboard joint = amalg::free_amalgam_one_point(
                pair.base, pair.left, pair.right);
            const auto& B = pair.base.elements();
            types::QfType t1 = types::qf_type(
                joint, std::vector<ElementId>{pair.a1}, B);
            types::QfType t2 = types::qf_type(
                joint, std::vector<ElementId>{pair.a2}, B);
            if (!(t1 == t2))
                continue; // only same-type pairs feed the predicate
            bool sym = types::is_symmetric(joint, B, pair.a1, pair.a2);
            bool swap_equal =
                types::qf_type(joint,
                               std::vector<ElementId>{pair.a1, pair.a2}, B) ==
                types::qf_type(joint,
                               std::vector<ElementId>{pair.a2, pair.a1}, B);
            if (sym != swap_equal)
                return false;
            if (!types::is_distinguished(joint, B, pair.a1, pair.a2))
                return false;
        }
        return true;
    });

    battery.run("core-sequence-scenario", [] {
        // Base {0,1}; both points favor {0,1} and the cross fact
        // {2,0} < {3,1} holds with its forced labels.
        LabeledSwitchboard structure(
            Switchboard(4, {{Edge(0, 2), Edge(1, 3)}}),
            {{0, Edge(1, 2)},
             {0, Edge(1, 3)},
             {2, Edge(0, 1)},
             {2, Edge(1, 3)},
             {3, Edge(0, 1)}});
        gen::TwoTypeSpec q{structure, 2, 3};
        types::CoreSequenceReport report = types::build_core_sequence(q, 4);
        types::CoreVerdict verdict = types::check_core_conclusions(report);
        if (!verdict.pass || verdict.q_distinguished)
            return false;
        types::TwoStageResult two = types::two_stage_symmetry(q, 2, 3);
        return two.pass;
    });

    std::cout << (battery.all_ok ? "OK" : "FAILURES") << "\n";
    return battery.all_ok ? exit_ok : exit_violation;
}

} // namespace swbtool
