#include "swb/edge.hpp"

namespace swb {

std::string to_string(const Edge& e) {
    return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
}

std::string to_string(const Node& n) {
    if (n.is_element())
        return std::to_string(n.as_element());
    return to_string(n.as_edge());
}

} // namespace swb
