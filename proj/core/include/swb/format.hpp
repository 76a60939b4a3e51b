#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swb/switchboard.hpp"

namespace swb {

// Canonical text format (ASCII, LF line endings, '#' comments, blank lines
// ignored):
//
//   %sb 1              header: unlabeled switchboard
//   %lsb 1             header: labeled switchboard
//   n <count>          elements are 0..count-1
//   name <id> <token>  optional display names
//   lt a b c d         {a,b} < {c,d} with a<b, c<d; closure listed in full
//   up a b c           a favors {b,c}, with b<c
//   dn a b c           optional; must agree with the derived disfavor facts
//
// Trailer directives carried by some files:
//
//   point <id>         distinguished point of a one-type spec
//   pair <id> <id>     distinguished pair of a two-type spec
//   map <from> <to>    embedding entries appended by amalgamation
//
// The canonical writer emits header, n, names, lt, up only, each fact list
// sorted lexicographically.

enum class StructureKind { switchboard, labeled };

struct ParsedFile {
    StructureKind kind{StructureKind::switchboard};
    Switchboard sb;       // always populated
    LabeledSwitchboard lsb; // populated when kind == labeled
    std::optional<ElementId> point;
    std::optional<std::pair<ElementId, ElementId>> pair;
    std::vector<std::pair<ElementId, ElementId>> maps;

    // The labeled structure, or a format_error if the file was unlabeled.
    const LabeledSwitchboard& require_labeled() const;
    const Switchboard& require_switchboard() const;
};

ParsedFile read_structure(std::istream& in);
ParsedFile read_structure_file(const std::string& path);

void write_switchboard(std::ostream& out, const Switchboard& s);
void write_labeled(std::ostream& out, const LabeledSwitchboard& l);

std::string to_text(const Switchboard& s);
std::string to_text(const LabeledSwitchboard& l);

} // namespace swb
