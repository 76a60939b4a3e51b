#pragma once

#include <string>
#include <vector>

#include "swb/switchboard.hpp"

namespace swb {

class TriangleRelation;

enum class Axiom {
    irreflexive,
    asymmetric,
    transitive,
    switchboard,
    trichotomy,
    upward,
    downward,
    triangle_transitive,
    triangle_projection,
    triangle_target,
    triangle_irreflexive,
    triangle_incidence,
};

std::string to_string(Axiom a);

// One axiom violation, with the minimal witness tuple that exhibits it.
// Replaying the witness against the structure reproduces the violation.
struct Violation {
    Axiom axiom;
    std::vector<Node> witness;

    std::string to_string() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    bool valid{true};
    std::vector<Violation> violations;

    std::string to_string() const;
};

ValidationReport validate(const Switchboard& s);
ValidationReport validate(const LabeledSwitchboard& l);
ValidationReport validate(const TriangleRelation& t);

// Re-evaluates a single reported violation against the structure; true when
// the witness still exhibits it.
bool replay(const Switchboard& s, const Violation& v);
bool replay(const LabeledSwitchboard& l, const Violation& v);
bool replay(const TriangleRelation& t, const Violation& v);

// Raised when an operation requiring a valid structure receives an invalid
// one; carries the offending report.
struct validation_error : error {
    ValidationReport report;
    validation_error(const std::string& what, ValidationReport rep)
        : error(what + "\n" + rep.to_string()), report(std::move(rep)) {}
    explicit validation_error(const std::string& what)
        : error(what), report{false, {}} {}
};

// Validates and throws validation_error on failure; used by operations whose
// precondition is a valid input.
void require_valid(const Switchboard& s, const std::string& who);
void require_valid(const LabeledSwitchboard& l, const std::string& who);

} // namespace swb
