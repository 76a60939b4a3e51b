#include "swb/gen/specs.hpp"

#include <algorithm>
#include <ostream>

#include "swb/validation.hpp"

namespace swb::gen {

namespace {

std::vector<ElementId> without(const std::vector<ElementId>& all,
                               std::initializer_list<ElementId> removed) {
    std::vector<ElementId> out;
    for (ElementId x : all)
        if (std::find(removed.begin(), removed.end(), x) == removed.end())
            out.push_back(x);
    return out;
}

} // namespace

std::vector<ElementId> OneTypeSpec::base() const {
    return without(structure.elements(), {point});
}

void OneTypeSpec::check() const {
    if (!structure.has_element(point))
        throw precondition_error(
            "one-type spec: distinguished point not in the structure");
    require_valid(structure, "one-type spec");
}

std::vector<ElementId> TwoTypeSpec::base() const {
    return without(structure.elements(), {first, second});
}

void TwoTypeSpec::check() const {
    if (first == second || !structure.has_element(first) ||
        !structure.has_element(second))
        throw precondition_error(
            "two-type spec: distinguished pair must be two distinct elements "
            "of the structure");
    require_valid(structure, "two-type spec");
}

OneTypeSpec read_one_type_spec(const ParsedFile& file) {
    if (!file.point)
        throw format_error("one-type spec requires a 'point <id>' trailer");
    OneTypeSpec spec{file.require_labeled(), *file.point};
    spec.check();
    return spec;
}

TwoTypeSpec read_two_type_spec(const ParsedFile& file) {
    if (!file.pair)
        throw format_error("two-type spec requires a 'pair <id> <id>' trailer");
    TwoTypeSpec spec{file.require_labeled(), file.pair->first,
                     file.pair->second};
    spec.check();
    return spec;
}

void write_one_type_spec(std::ostream& out, const OneTypeSpec& spec) {
    write_labeled(out, spec.structure);
    out << "point " << spec.point << "\n";
}

void write_two_type_spec(std::ostream& out, const TwoTypeSpec& spec) {
    write_labeled(out, spec.structure);
    out << "pair " << spec.first << " " << spec.second << "\n";
}

} // namespace swb::gen
