#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "swb/switchboard.hpp"

namespace swb::types {

// An argument of a type fact: either a slot of the tuple (by position) or a
// base element (by position in the canonically sorted base).  Slots sort
// before base references.
struct TypeArg {
    bool is_base{false};
    int index{0};

    friend auto operator<=>(const TypeArg&, const TypeArg&) = default;
};

enum class FactKind { lt, up, down, eq };

// One atomic fact of the diagram; lt takes four arguments (two edges), up
// and down take three (element, edge), eq takes two.  Edge argument pairs
// are stored in canonical order.
struct TypeFact {
    FactKind kind{FactKind::eq};
    std::vector<TypeArg> args;

    friend auto operator<=>(const TypeFact&, const TypeFact&) = default;
    std::string to_string() const;
};

// The canonical atomic diagram of a tuple over a base set: exactly the
// facts that hold on tuple ∪ base, no more.  Two types are equal iff the
// two configurations are isomorphic over the base by the slot map.
struct QfType {
    int arity{0};
    std::vector<ElementId> base; // sorted
    std::vector<TypeFact> facts; // sorted

    friend bool operator==(const QfType&, const QfType&) = default;
    std::string to_string() const;
};

QfType qf_type(const LabeledSwitchboard& m, std::span<const ElementId> tuple,
               std::span<const ElementId> base);

} // namespace swb::types
