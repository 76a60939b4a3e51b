#include "swb/order/chain.hpp"

namespace swb::order {

Switchboard chain_switchboard(int k) {
    if (k < 0)
        throw precondition_error("chain_switchboard: negative k");
    std::vector<EdgePair> lt;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            lt.emplace_back(Edge(2 * i, 2 * i + 1), Edge(2 * j, 2 * j + 1));
    return Switchboard(2 * k, std::move(lt));
}

} // namespace swb::order
