#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "swb/switchboard.hpp"

namespace swbtool {

// A certified amalgamation failure for unlabeled switchboards: two one-point
// extensions of a base admitting no common extension, shown by exhausting
// every order completion on the pushout carrier and the identified carrier.
struct ApFailure {
    swb::Switchboard base;
    swb::Switchboard left;   // base plus fresh element |base|
    swb::Switchboard right;  // base plus fresh element |base|
    std::int64_t completions{0}; // assignments exhausted on the carrier
};

// Checks whether (base, left, right) has no amalgam; fills in the
// enumeration bound.  The carrier search covers every switchboard structure
// on base ∪ {b, c} extending both sides, plus the identified gluing b = c.
bool exhaust_amalgams(const swb::Switchboard& base,
                      const swb::Switchboard& left,
                      const swb::Switchboard& right,
                      std::int64_t& completions);

// Searches bases of increasing size (pushout carrier at most max_n) in a
// fixed order and returns the first failure found.
std::optional<ApFailure> ap_failure_search(int max_n);

void write_certificate(std::ostream& out, const ApFailure& failure);
ApFailure read_certificate(std::istream& in);

// Replays the certificate: re-runs the exhaustion and compares the bound.
bool verify_certificate(const ApFailure& failure, std::string& diagnostics);

} // namespace swbtool
