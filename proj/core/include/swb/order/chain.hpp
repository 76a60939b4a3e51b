#pragma once

#include "swb/switchboard.hpp"

namespace swb::order {

// The finite chain witness on 2k elements: {0,1} < {2,3} < ... <
// {2k-2,2k-1}, transitively closed, everything else incomparable.  Its edge
// poset has height exactly k.
Switchboard chain_switchboard(int k);

} // namespace swb::order
