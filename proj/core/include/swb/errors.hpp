#pragma once

#include <stdexcept>
#include <string>

namespace swb {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: out-of-range ids, non-canonical edges, bad file syntax.
// Distinct from axiom violations, which are reported through ValidationReport.
struct format_error : error {
    explicit format_error(const std::string& what) : error(what) {}
};

// An operation was called outside its contract (wrong arguments, mismatched
// bases, missing facts).
struct precondition_error : error {
    explicit precondition_error(const std::string& what) : error(what) {}
};

// An enumeration would exceed the configured size cap.  Raised instead of
// silently truncating results.
struct cap_exceeded : error {
    explicit cap_exceeded(const std::string& what) : error(what) {}
};

} // namespace swb
