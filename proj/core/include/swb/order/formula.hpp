#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "swb/edge.hpp"

namespace swb::order {

// A term of the formula language: a variable or a named element constant
// (written @<id>).
struct Term {
    bool is_const{false};
    std::string var;
    ElementId value{0};

    friend bool operator==(const Term&, const Term&) = default;
};

// Quantifier-free formulas over the atoms lt(t,t,t,t), up(t,t,t),
// down(t,t,t), eq(t,t) with connectives ! & | (in decreasing binding
// strength) and parentheses.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { atom_lt, atom_up, atom_down, atom_eq, neg, conj, disj };

    Kind kind{Kind::atom_eq};
    std::vector<Term> args;       // atoms only
    std::vector<FormulaPtr> kids; // neg: 1 child; conj/disj: 2, left-assoc
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Parses the grammar above; syntax and arity errors carry the offending
// position.  print . parse is the identity on canonical output, and
// parse . print reproduces the tree.
FormulaPtr parse_formula(const std::string& text);
std::string print_formula(const FormulaPtr& f);

// All variable names occurring in f.
std::set<std::string> formula_variables(const FormulaPtr& f);
// All constants occurring in f.
std::set<ElementId> formula_constants(const FormulaPtr& f);

} // namespace swb::order
