#pragma once

#include <iosfwd>
#include <vector>

#include "swb/format.hpp"
#include "swb/switchboard.hpp"

namespace swb::gen {

// A quantifier-free 1-type over a base, given as a structure on the base
// plus one distinguished fresh point.
struct OneTypeSpec {
    LabeledSwitchboard structure;
    ElementId point{0};

    std::vector<ElementId> base() const;
    // Throws unless the structure is valid and the point belongs to it.
    void check() const;
};

// A quantifier-free 2-type over a base: a structure on the base plus an
// ordered pair of distinguished fresh points.
struct TwoTypeSpec {
    LabeledSwitchboard structure;
    ElementId first{0};
    ElementId second{0};

    std::vector<ElementId> base() const;
    void check() const;
};

OneTypeSpec read_one_type_spec(const ParsedFile& file);
TwoTypeSpec read_two_type_spec(const ParsedFile& file);
void write_one_type_spec(std::ostream& out, const OneTypeSpec& spec);
void write_two_type_spec(std::ostream& out, const TwoTypeSpec& spec);

} // namespace swb::gen
