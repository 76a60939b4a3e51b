#include <doctest.h>

#include <functional>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "swb/gen/random.hpp"
#include "swb/order/chain.hpp"
#include "swb/order/formula.hpp"
#include "swb/order/phi_poset.hpp"
#include "swb/order/poset.hpp"
#include "swb/validation.hpp"

using namespace swb;
using namespace swb::order;
using helpers::e;
using helpers::lsb;

namespace {

FinitePoset random_poset(std::uint64_t seed, int max_nodes) {
    gen::DetRng rng(seed);
    int n = 1 + static_cast<int>(rng.below(max_nodes));
    std::vector<Node> carrier;
    std::vector<std::string> keys;
    for (int i = 0; i < n; ++i) {
        carrier.push_back(Node::element(i));
        keys.push_back("k" + std::to_string(i));
    }
    // A random DAG on ranked nodes, transitively closed via the oracle.
    std::vector<NodePair> raw;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin(0.3))
                raw.emplace_back(Node::element(i), Node::element(j));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [x, y] : oracles::bfs_closure(carrier, raw))
        pairs.emplace_back("k" + std::to_string(x.as_element()),
                           "k" + std::to_string(y.as_element()));
    return FinitePoset(std::move(keys), std::move(pairs));
}

} // namespace

TEST_CASE("hgt_all on basic shapes") {
    SUBCASE("a k-chain has heights 0..k-1") {
        int k = 5;
        std::vector<std::string> keys;
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int i = 0; i < k; ++i)
            keys.push_back("c" + std::to_string(i));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                pairs.emplace_back(keys[static_cast<std::size_t>(i)],
                                   keys[static_cast<std::size_t>(j)]);
        HeightResult res = hgt_all(FinitePoset(keys, pairs));
        for (int i = 0; i < k; ++i)
            CHECK(res.hgt.at("c" + std::to_string(i)) == i);
        CHECK(res.height == k);
    }
    SUBCASE("an antichain has height one") {
        HeightResult res = hgt_all(FinitePoset({"a", "b", "c"}, {}));
        CHECK(res.height == 1);
        CHECK(res.hgt.at("a") == 0);
    }
    SUBCASE("the empty poset has height zero") {
        CHECK(hgt_all(FinitePoset({}, {})).height == 0);
    }
    SUBCASE("cyclic or non-closed input is rejected") {
        FinitePoset cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
        CHECK_FALSE(cyc.validate().empty());
        CHECK_THROWS_AS(hgt_all(cyc), validation_error);
        FinitePoset open({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        CHECK_THROWS_AS(hgt_all(open), validation_error);
    }
}

TEST_CASE("hgt_all agrees with the path-enumeration oracle") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        FinitePoset p = random_poset(seed * 3, 10);
        REQUIRE(p.validate().empty());
        HeightResult res = hgt_all(p);
        int max_h = -1;
        for (const std::string& k : p.keys()) {
            int expected = oracles::longest_chain_to(p, k);
            CHECK(res.hgt.at(k) == expected);
            max_h = std::max(max_h, expected);
            // Monotonicity along the order.
            for (const std::string& k2 : p.keys())
                if (p.less(k, k2))
                    CHECK(res.hgt.at(k) < res.hgt.at(k2));
        }
        CHECK(res.height == (p.keys().empty() ? 0 : max_h + 1));
    }
}

TEST_CASE("chain_switchboard") {
    SUBCASE("zero links is the empty structure") {
        Switchboard s = chain_switchboard(0);
        CHECK(s.size() == 0);
        CHECK(validate(s).valid);
    }
    SUBCASE("three links witness edge-poset height three") {
        Switchboard s = chain_switchboard(3);
        CHECK(s.less(e(0, 1), e(2, 3)));
        CHECK(s.less(e(2, 3), e(4, 5)));
        CHECK(s.less(e(0, 1), e(4, 5)));
        CHECK(hgt_all(edge_poset(s)).height == 3);
    }
    SUBCASE("valid and of the right height for all small k") {
        for (int k = 0; k <= 10; ++k) {
            Switchboard s = chain_switchboard(k);
            CHECK(validate(s).valid);
            CHECK(hgt_all(edge_poset(s)).height == k);
        }
    }
}

TEST_CASE("poset serialization round-trips") {
    FinitePoset p = edge_poset(chain_switchboard(2));
    std::ostringstream out;
    write_poset(out, p);
    std::istringstream in(out.str());
    CHECK(read_poset(in) == p);
    std::istringstream with_height(out.str() + "height 2\n");
    CHECK(read_poset(with_height) == p);
}

TEST_CASE("formula parsing and printing") {
    SUBCASE("atoms") {
        FormulaPtr f = parse_formula("lt(x1,x2,y1,y2)");
        CHECK(f->kind == Formula::Kind::atom_lt);
        CHECK(f->args.size() == 4);
        CHECK_FALSE(f->args[0].is_const);
        CHECK(print_formula(f) == "lt(x1,x2,y1,y2)");
    }
    SUBCASE("precedence and constants") {
        FormulaPtr f = parse_formula("up(y1,x1,@3) & !eq(x1,@3)");
        CHECK(f->kind == Formula::Kind::conj);
        CHECK(print_formula(f) == "up(y1,x1,@3) & !eq(x1,@3)");
        CHECK(equal(parse_formula(print_formula(f)), f));
    }
    SUBCASE("arity errors") {
        CHECK_THROWS_AS(parse_formula("lt(x1,x2,y1)"), format_error);
        CHECK_THROWS_AS(parse_formula("eq(x1)"), format_error);
        CHECK_THROWS_AS(parse_formula("up(x1,x2,x3,x4)"), format_error);
    }
    SUBCASE("syntax errors carry positions") {
        try {
            parse_formula("lt(x1,x2,y1,y2) &");
            FAIL("expected format_error");
        } catch (const format_error& err) {
            CHECK(std::string(err.what()).find("position") !=
                  std::string::npos);
        }
        CHECK_THROWS_AS(parse_formula(""), format_error);
        CHECK_THROWS_AS(parse_formula("foo(x1)"), format_error);
        CHECK_THROWS_AS(parse_formula("lt(x1,x2,y1,y2"), format_error);
        CHECK_THROWS_AS(parse_formula("@x"), format_error);
    }
    SUBCASE("print-parse fixpoint on a corpus") {
        const char* corpus[] = {
            "lt(x1,x2,y1,y2)",
            "eq(x1,y1)",
            "up(y1,x1,x2) | down(y1,x1,x2)",
            "!(lt(x1,x2,y1,y2) | lt(y1,y2,x1,x2)) & !eq(x1,y1)",
            "!!up(x1,y1,y2)",
            "(eq(x1,x2) | up(x1,x2,y1)) & (down(y1,x1,x2) | eq(@0,x1))",
            "lt(@0,@1,y1,y2) & up(x1,@2,@3)",
            "!(!(eq(x1,y1) & eq(x2,y2)))",
            "up(x1,y1,y2) & down(x2,y1,y2) & eq(x1,x2)",
            "lt(x1,x2,y1,y2) | lt(x1,x2,y2,y1) | eq(x2,y2)",
        };
        for (const char* text : corpus) {
            FormulaPtr once = parse_formula(text);
            std::string printed = print_formula(once);
            FormulaPtr twice = parse_formula(printed);
            CHECK(equal(once, twice));
            CHECK(print_formula(twice) == printed);
        }
    }
}

TEST_CASE("evaluator semantics") {
    LabeledSwitchboard m = label_canonical(chain_switchboard(2));
    FormulaPtr lt_f = parse_formula("lt(x1,x2,y1,y2)");
    SUBCASE("degenerate edge arguments are false") {
        CHECK_FALSE(evaluate(m, lt_f,
                             {{"x1", 0}, {"x2", 0}, {"y1", 2}, {"y2", 3}}));
        CHECK_FALSE(evaluate(m, parse_formula("up(x1,y1,y2)"),
                             {{"x1", 0}, {"y1", 2}, {"y2", 2}}));
        CHECK_FALSE(evaluate(m, parse_formula("down(x1,y1,y2)"),
                             {{"x1", 0}, {"y1", 2}, {"y2", 2}}));
    }
    SUBCASE("order facts hold in both argument orders") {
        CHECK(evaluate(m, lt_f, {{"x1", 0}, {"x2", 1}, {"y1", 2}, {"y2", 3}}));
        CHECK(evaluate(m, lt_f, {{"x1", 1}, {"x2", 0}, {"y1", 3}, {"y2", 2}}));
        CHECK_FALSE(
            evaluate(m, lt_f, {{"x1", 2}, {"x2", 3}, {"y1", 0}, {"y2", 1}}));
    }
    SUBCASE("down is the derived complement") {
        CHECK(evaluate(m, parse_formula("down(x1,y1,y2)"),
                       {{"x1", 2}, {"y1", 0}, {"y2", 1}}));
        CHECK_FALSE(evaluate(m, parse_formula("down(x1,y1,y2)"),
                             {{"x1", 0}, {"y1", 2}, {"y2", 3}}));
    }
}

TEST_CASE("evaluator agrees with the set-composition oracle") {
    const char* corpus[] = {
        "lt(x1,x2,y1,y2)",
        "up(y1,x1,x2) & !eq(x1,y1)",
        "!(down(x1,y1,y2) | eq(x1,y1)) & up(x1,y1,y2)",
        "lt(x1,x2,y1,y2) | (eq(x1,y1) & !eq(x2,y2))",
        "down(@0,x1,y1) | up(x1,@0,y1)",
    };
    std::vector<std::string> vars{"x1", "x2", "y1", "y2"};
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        int n = 2 + static_cast<int>(seed % 4); // up to 5 elements
        LabeledSwitchboard m = gen::random_labeled(n, seed * 7 + 3, 0.5);
        for (const char* text : corpus) {
            FormulaPtr f = parse_formula(text);
            auto expected = oracles::satisfying_assignments(m, f, vars);
            // Every assignment, compared pointwise.
            std::vector<ElementId> tuple(vars.size(), 0);
            std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == vars.size()) {
                    Assignment a;
                    for (std::size_t k = 0; k < vars.size(); ++k)
                        a[vars[k]] = tuple[k];
                    CHECK(evaluate(m, f, a) == (expected.count(tuple) > 0));
                    return;
                }
                for (ElementId x : m.elements()) {
                    tuple[i] = x;
                    walk(i + 1);
                }
            };
            walk(0);
        }
    }
}

TEST_CASE("phi_poset") {
    SUBCASE("the chain example has height two") {
        LabeledSwitchboard m = label_canonical(chain_switchboard(2));
        FinitePoset p = phi_poset(m, parse_formula("lt(x1,x2,y1,y2)"),
                                  {"x1", "x2"}, {"y1", "y2"});
        CHECK(p.validate().empty());
        HeightResult res = hgt_all(p);
        CHECK(res.height == 2);
        // phi(M;(2,3)) = {(0,1),(1,0)} strictly contains phi(M;(0,1)) = {}.
        CHECK(p.less("(0,1)", "(2,3)"));
        CHECK(p.less("(0,1)", "(3,2)"));
        CHECK_FALSE(p.less("(2,3)", "(3,2)"));
        CHECK(p.keys().size() == 16);
    }
    SUBCASE("distinct singletons are never strictly included") {
        LabeledSwitchboard m = lsb(4, {}, {});
        FinitePoset p = phi_poset(m, parse_formula("eq(x1,y1)"), {"x1"},
                                  {"y1"});
        CHECK(p.pairs().empty());
        CHECK(hgt_all(p).height == 1);
    }
    SUBCASE("undeclared and unknown names are rejected") {
        LabeledSwitchboard m = lsb(3, {}, {});
        CHECK_THROWS_AS(phi_poset(m, parse_formula("eq(x1,z9)"), {"x1"},
                                  {"y1"}),
                        precondition_error);
        CHECK_THROWS_AS(phi_poset(m, parse_formula("eq(x1,@7)"), {"x1"},
                                  {"y1"}),
                        precondition_error);
        CHECK_THROWS_AS(phi_poset(m, parse_formula("eq(x1,y1)"), {"x1"},
                                  {"x1"}),
                        precondition_error);
    }
    SUBCASE("the poset is always a valid strict order") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            LabeledSwitchboard m = gen::random_labeled(4, seed * 13 + 1, 0.5);
            FinitePoset p =
                phi_poset(m, parse_formula("lt(x1,x2,y1,y2) | up(y1,x1,x2)"),
                          {"x1", "x2"}, {"y1", "y2"});
            CHECK(p.validate().empty());
        }
    }
}
