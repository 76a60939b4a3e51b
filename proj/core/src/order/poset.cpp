#include "swb/order/poset.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "swb/validation.hpp"

namespace swb::order {

FinitePoset::FinitePoset(std::vector<std::string> keys,
                         std::vector<std::pair<std::string, std::string>> pairs)
    : keys_(std::move(keys)), pairs_(std::move(pairs)) {
    std::sort(keys_.begin(), keys_.end());
    if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
        throw format_error("duplicate poset key");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    auto known = [&](const std::string& k) {
        return std::binary_search(keys_.begin(), keys_.end(), k);
    };
    for (const auto& [a, b] : pairs_)
        if (!known(a) || !known(b))
            throw format_error("poset pair over unknown key");
}

bool FinitePoset::less(const std::string& a, const std::string& b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(),
                              std::pair<std::string, std::string>{a, b});
}

std::string FinitePoset::validate() const {
    for (const auto& [a, b] : pairs_) {
        if (a == b)
            return "irreflexivity fails at " + a;
        if (less(b, a))
            return "asymmetry fails at " + a + " vs " + b;
    }
    for (const auto& [a, b] : pairs_)
        for (const auto& [c, d] : pairs_)
            if (b == c && a != d && !less(a, d))
                return "transitivity fails at " + a + " < " + b + " < " + d;
    return {};
}

HeightResult hgt_all(const FinitePoset& p) {
    if (std::string err = p.validate(); !err.empty())
        throw validation_error("hgt_all: not a strict partial order: " + err);

    // Predecessor lists by key index.
    const auto& keys = p.keys();
    auto index = [&](const std::string& k) {
        return static_cast<std::size_t>(
            std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
    };
    std::vector<std::vector<std::size_t>> preds(keys.size());
    for (const auto& [a, b] : p.pairs())
        preds[index(b)].push_back(index(a));

    std::vector<int> hgt(keys.size(), -1);
    std::function<int(std::size_t)> compute = [&](std::size_t i) -> int {
        if (hgt[i] >= 0)
            return hgt[i];
        int best = 0;
        for (std::size_t j : preds[i])
            best = std::max(best, compute(j) + 1);
        return hgt[i] = best;
    };

    HeightResult out;
    int max_h = -1;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        int h = compute(i);
        out.hgt[keys[i]] = h;
        max_h = std::max(max_h, h);
    }
    out.height = keys.empty() ? 0 : max_h + 1;
    return out;
}

FinitePoset edge_poset(const Switchboard& s) {
    require_valid(s, "edge_poset");
    auto key = [](const Edge& e) {
        return "(" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")";
    };
    std::vector<std::string> keys;
    for (const Edge& e : s.edges())
        keys.push_back(key(e));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [e, f] : s.lt_pairs())
        pairs.emplace_back(key(e), key(f));
    return FinitePoset(std::move(keys), std::move(pairs));
}

void write_poset(std::ostream& out, const FinitePoset& p) {
    out << "%poset 1\n";
    for (const std::string& k : p.keys())
        out << "node " << k << "\n";
    for (const auto& [a, b] : p.pairs())
        out << "lt " << a << " " << b << "\n";
}

FinitePoset read_poset(std::istream& in) {
    std::vector<std::string> keys;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string raw;
    int number = 0;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        std::vector<std::string> tok;
        std::string t;
        while (words >> t)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "%poset" || tok[1] != "1")
                throw format_error("line " + std::to_string(number) +
                                   ": expected %poset 1 header");
            saw_header = true;
            continue;
        }
        if (tok[0] == "node" && tok.size() == 2)
            keys.push_back(tok[1]);
        else if (tok[0] == "lt" && tok.size() == 3)
            pairs.emplace_back(tok[1], tok[2]);
        else if (tok[0] == "height" && tok.size() == 2)
            continue;
        else
            throw format_error("line " + std::to_string(number) +
                               ": bad poset line");
    }
    if (!saw_header)
        throw format_error("empty input: missing %poset header");
    return FinitePoset(std::move(keys), std::move(pairs));
}

} // namespace swb::order
