#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swb/switchboard.hpp"

namespace swb::order {

// A strict partial order on opaque string keys.  As elsewhere, the stored
// pairs are raw data; validate() checks the axioms.
class FinitePoset {
public:
    FinitePoset() = default;
    FinitePoset(std::vector<std::string> keys,
                std::vector<std::pair<std::string, std::string>> pairs);

    const std::vector<std::string>& keys() const { return keys_; }
    const std::vector<std::pair<std::string, std::string>>& pairs() const {
        return pairs_;
    }
    bool less(const std::string& a, const std::string& b) const;

    // Empty string when the pairs form a strict partial order, otherwise a
    // description of the first violation found.
    std::string validate() const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
    std::vector<std::string> keys_;
    std::vector<std::pair<std::string, std::string>> pairs_;
};

struct HeightResult {
    std::map<std::string, int> hgt; // longest chain strictly below each key
    int height{0};                  // maximal chain cardinality; 0 if empty
};

// Heights of all keys: hgt(a) is the length of the longest ascending chain
// ending at a, minimal keys get 0, and a < b implies hgt(a) < hgt(b).
// Rejects invalid (in particular cyclic) input.
HeightResult hgt_all(const FinitePoset& p);

// The edge poset of a switchboard, with edges keyed as "(lo,hi)".
FinitePoset edge_poset(const Switchboard& s);

// Serialization: "%poset 1" header, then "node <key>" and "lt <key> <key>"
// lines.  The reader also accepts a trailing "height <k>" line and ignores
// it, so evaluator output loads back.
void write_poset(std::ostream& out, const FinitePoset& p);
FinitePoset read_poset(std::istream& in);

} // namespace swb::order
