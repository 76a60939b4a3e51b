#include "swb/order/phi_poset.hpp"

#include <algorithm>

#include "swb/validation.hpp"

namespace swb::order {

namespace {

ElementId value_of(const Term& t, const Assignment& assignment) {
    if (t.is_const)
        return t.value;
    auto it = assignment.find(t.var);
    if (it == assignment.end())
        throw precondition_error("evaluate: unbound variable " + t.var);
    return it->second;
}

} // namespace

bool evaluate(const LabeledSwitchboard& m, const FormulaPtr& f,
              const Assignment& assignment) {
    switch (f->kind) {
    case Formula::Kind::atom_lt: {
        ElementId a = value_of(f->args[0], assignment);
        ElementId b = value_of(f->args[1], assignment);
        ElementId c = value_of(f->args[2], assignment);
        ElementId d = value_of(f->args[3], assignment);
        if (a == b || c == d)
            return false;
        return m.less(Edge(a, b), Edge(c, d));
    }
    case Formula::Kind::atom_up:
    case Formula::Kind::atom_down: {
        ElementId a = value_of(f->args[0], assignment);
        ElementId b = value_of(f->args[1], assignment);
        ElementId c = value_of(f->args[2], assignment);
        if (b == c)
            return false;
        return f->kind == Formula::Kind::atom_up ? m.up(a, Edge(b, c))
                                                 : m.down(a, Edge(b, c));
    }
    case Formula::Kind::atom_eq:
        return value_of(f->args[0], assignment) ==
               value_of(f->args[1], assignment);
    case Formula::Kind::neg:
        return !evaluate(m, f->kids[0], assignment);
    case Formula::Kind::conj:
        return evaluate(m, f->kids[0], assignment) &&
               evaluate(m, f->kids[1], assignment);
    case Formula::Kind::disj:
        return evaluate(m, f->kids[0], assignment) ||
               evaluate(m, f->kids[1], assignment);
    }
    throw std::logic_error("evaluate: unknown formula kind");
}

namespace {

std::string tuple_key(const std::vector<ElementId>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(tuple[i]);
    }
    return out + ")";
}

// Enumerates all tuples over the ground set in lexicographic order.
std::vector<std::vector<ElementId>>
all_tuples(const std::vector<ElementId>& ground, std::size_t arity) {
    std::vector<std::vector<ElementId>> out{{}};
    for (std::size_t i = 0; i < arity; ++i) {
        std::vector<std::vector<ElementId>> next;
        next.reserve(out.size() * ground.size());
        for (const auto& prefix : out)
            for (ElementId x : ground) {
                auto tuple = prefix;
                tuple.push_back(x);
                next.push_back(std::move(tuple));
            }
        out = std::move(next);
    }
    return out;
}

void check_vars(const std::vector<std::string>& vars, const char* which) {
    if (vars.empty())
        throw precondition_error(std::string("phi_poset: empty ") + which +
                                 " variable list");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw precondition_error(std::string("phi_poset: duplicate ") + which +
                                 " variable");
}

} // namespace

FinitePoset phi_poset(const LabeledSwitchboard& m, const FormulaPtr& f,
                      const std::vector<std::string>& obj_vars,
                      const std::vector<std::string>& param_vars,
                      const EnumerationLimits& limits) {
    require_valid(m, "phi_poset");
    check_vars(obj_vars, "object");
    check_vars(param_vars, "parameter");
    for (const std::string& v : obj_vars)
        if (std::find(param_vars.begin(), param_vars.end(), v) !=
            param_vars.end())
            throw precondition_error("phi_poset: variable " + v +
                                     " declared both object and parameter");
    std::set<std::string> declared(obj_vars.begin(), obj_vars.end());
    declared.insert(param_vars.begin(), param_vars.end());
    for (const std::string& v : formula_variables(f))
        if (!declared.count(v))
            throw precondition_error("phi_poset: undeclared variable " + v);
    for (ElementId c : formula_constants(f))
        if (!m.has_element(c))
            throw precondition_error("phi_poset: unknown constant @" +
                                     std::to_string(c));

    const auto& ground = m.elements();
    double work = 1.0;
    for (std::size_t i = 0; i < obj_vars.size() + param_vars.size(); ++i)
        work *= static_cast<double>(std::max<std::size_t>(ground.size(), 1));
    if (work > static_cast<double>(limits.max_branch_nodes))
        throw cap_exceeded("phi_poset: evaluation over " +
                           std::to_string(ground.size()) + " elements and " +
                           std::to_string(obj_vars.size() + param_vars.size()) +
                           " variables exceeds the cap");

    auto obj_tuples = all_tuples(ground, obj_vars.size());
    auto param_tuples = all_tuples(ground, param_vars.size());

    // Solution sets as bitsets over object tuples.
    const std::size_t words = (obj_tuples.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> sets(
        param_tuples.size(), std::vector<std::uint64_t>(words, 0));
    Assignment assignment;
    for (std::size_t pi = 0; pi < param_tuples.size(); ++pi) {
        for (std::size_t k = 0; k < param_vars.size(); ++k)
            assignment[param_vars[k]] = param_tuples[pi][k];
        for (std::size_t oi = 0; oi < obj_tuples.size(); ++oi) {
            for (std::size_t k = 0; k < obj_vars.size(); ++k)
                assignment[obj_vars[k]] = obj_tuples[oi][k];
            if (evaluate(m, f, assignment))
                sets[pi][oi / 64] |= std::uint64_t{1} << (oi % 64);
        }
    }

    auto strictly_included = [&](std::size_t a, std::size_t b) {
        bool equal = true;
        for (std::size_t w = 0; w < words; ++w) {
            if (sets[a][w] & ~sets[b][w])
                return false;
            equal = equal && sets[a][w] == sets[b][w];
        }
        return !equal;
    };

    std::vector<std::string> keys;
    keys.reserve(param_tuples.size());
    for (const auto& tuple : param_tuples)
        keys.push_back(tuple_key(tuple));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t a = 0; a < param_tuples.size(); ++a)
        for (std::size_t b = 0; b < param_tuples.size(); ++b)
            if (a != b && strictly_included(a, b))
                pairs.emplace_back(keys[a], keys[b]);
    return FinitePoset(std::move(keys), std::move(pairs));
}

} // namespace swb::order
