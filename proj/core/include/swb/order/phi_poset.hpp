#pragma once

#include <map>
#include <string>
#include <vector>

#include "swb/labeling.hpp"
#include "swb/order/formula.hpp"
#include "swb/order/poset.hpp"
#include "swb/switchboard.hpp"

namespace swb::order {

using Assignment = std::map<std::string, ElementId>;

// Evaluates a formula under an assignment of its variables.  The lt/up/down
// atoms are false whenever their edge arguments coincide; up and down follow
// the structure's favor facts and the derived disfavor facts.
bool evaluate(const LabeledSwitchboard& m, const FormulaPtr& f,
              const Assignment& assignment);

// The poset of definable sets: nodes are all parameter tuples (keyed as
// "(i,j,...)"), and a tuple lies below another exactly when its solution set
// is strictly included in the other's.  The total evaluation work is capped
// by limits.max_branch_nodes.
FinitePoset phi_poset(const LabeledSwitchboard& m, const FormulaPtr& f,
                      const std::vector<std::string>& obj_vars,
                      const std::vector<std::string>& param_vars,
                      const EnumerationLimits& limits = EnumerationLimits{});

} // namespace swb::order
