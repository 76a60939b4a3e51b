#include "ap_failure.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "swb/format.hpp"
#include "swb/validation.hpp"

namespace swbtool {

using namespace swb;

namespace {

// Ternary counter over slots; returns false when the counter wraps.
bool advance(std::vector<int>& state) {
    std::size_t i = 0;
    while (i < state.size() && state[i] == 2)
        state[i++] = 0;
    if (i == state.size())
        return false;
    ++state[i];
    return true;
}

std::vector<EdgePair> assigned_facts(const std::vector<EdgePair>& slots,
                                     const std::vector<int>& state,
                                     std::vector<EdgePair> fixed) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (state[i] == 1)
            fixed.push_back(slots[i]);
        else if (state[i] == 2)
            fixed.emplace_back(slots[i].second, slots[i].first);
    }
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    return fixed;
}

// All valid one-point extensions of base by the element |base|, in a fixed
// enumeration order.
std::vector<Switchboard> one_point_order_extensions(const Switchboard& base) {
    ElementId fresh = base.size();
    std::vector<ElementId> ground = base.elements();
    ground.push_back(fresh);
    std::vector<EdgePair> slots;
    for (ElementId x : base.elements())
        for (const Edge& f : base.edges())
            if (!f.contains(x))
                slots.emplace_back(Edge(fresh, x), f);
    std::vector<Switchboard> out;
    std::vector<int> state(slots.size(), 0);
    do {
        Switchboard candidate(ground,
                              assigned_facts(slots, state, base.lt_pairs()));
        if (validate(candidate).valid &&
            restrict_to(candidate, base.elements()) == base)
            out.push_back(std::move(candidate));
    } while (advance(state));
    return out;
}

} // namespace

bool exhaust_amalgams(const Switchboard& base, const Switchboard& left,
                      const Switchboard& right, std::int64_t& completions) {
    ElementId b = base.size();
    ElementId c = base.size() + 1;
    Switchboard renamed_right = rename(right, {{b, c}});
    std::vector<ElementId> carrier = base.elements();
    carrier.push_back(b);
    carrier.push_back(c);

    std::vector<EdgePair> fixed = left.lt_pairs();
    fixed.insert(fixed.end(), renamed_right.lt_pairs().begin(),
                 renamed_right.lt_pairs().end());

    // Unknown slots: unordered disjoint edge pairs mixing the two sides.
    // Each ordered (p, q) with p != q names a distinct pair of edges, since
    // the first edge carries b and the second carries c.
    std::vector<EdgePair> slots;
    for (ElementId p : base.elements())
        for (ElementId q : base.elements())
            if (p != q)
                slots.emplace_back(Edge(b, p), Edge(c, q));
    for (const Edge& e : base.edges())
        slots.emplace_back(Edge(b, c), e);

    completions = 0;
    std::vector<int> state(slots.size(), 0);
    bool amalgam_found = false;
    do {
        ++completions;
        Switchboard candidate(carrier, assigned_facts(slots, state, fixed));
        if (validate(candidate).valid) {
            amalgam_found = true;
            break;
        }
    } while (advance(state));
    if (amalgam_found)
        return false;

    // The identified gluing b = c: both sides' facts must merge into a valid
    // structure on base plus one fresh point.
    std::vector<EdgePair> merged = left.lt_pairs();
    merged.insert(merged.end(), right.lt_pairs().begin(),
                  right.lt_pairs().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<ElementId> small = base.elements();
    small.push_back(b);
    if (validate(Switchboard(small, merged)).valid)
        return false;
    return true;
}

std::optional<ApFailure> ap_failure_search(int max_n) {
    if (max_n < 2)
        return std::nullopt;
    for (int size = 0; size + 2 <= max_n; ++size) {
        // All switchboard orders over `size` elements.
        std::vector<EdgePair> slots;
        Switchboard frame(size, {});
        std::vector<Edge> edges = frame.edges();
        for (const Edge& x : edges)
            for (const Edge& y : edges)
                if (x < y && x.disjoint(y))
                    slots.emplace_back(x, y);
        std::vector<int> state(slots.size(), 0);
        do {
            Switchboard base(size, assigned_facts(slots, state, {}));
            if (!validate(base).valid)
                continue;
            std::vector<Switchboard> exts = one_point_order_extensions(base);
            for (std::size_t i = 0; i < exts.size(); ++i)
                for (std::size_t j = i; j < exts.size(); ++j) {
                    std::int64_t completions = 0;
                    if (exhaust_amalgams(base, exts[i], exts[j],
                                         completions))
                        return ApFailure{base, exts[i], exts[j], completions};
                }
        } while (advance(state));
    }
    return std::nullopt;
}

void write_certificate(std::ostream& out, const ApFailure& failure) {
    out << "%apcert 1\n";
    out << "# amalgamation failure over the shared base; replay with\n";
    out << "# `swb ap-failure --verify <this file>`\n";
    out << "section base\n";
    write_switchboard(out, failure.base);
    out << "end\nsection left\n";
    write_switchboard(out, failure.left);
    out << "end\nsection right\n";
    write_switchboard(out, failure.right);
    out << "end\n";
    out << "completions " << failure.completions << "\n";
    out << "identified invalid\n";
}

ApFailure read_certificate(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("%apcert 1", 0) != 0)
        throw format_error("expected %apcert 1 header");
    ApFailure out;
    bool saw_completions = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string kw;
        if (!(words >> kw))
            continue;
        if (kw == "section") {
            std::string which;
            words >> which;
            std::ostringstream body;
            while (std::getline(in, line) && line != "end")
                body << line << "\n";
            std::istringstream section(body.str());
            Switchboard sb = read_structure(section).require_switchboard();
            if (which == "base")
                out.base = std::move(sb);
            else if (which == "left")
                out.left = std::move(sb);
            else if (which == "right")
                out.right = std::move(sb);
            else
                throw format_error("unknown certificate section " + which);
        } else if (kw == "completions") {
            words >> out.completions;
            saw_completions = true;
        } else if (kw == "identified") {
            std::string status;
            words >> status;
            if (status != "invalid")
                throw format_error(
                    "certificate does not claim an identified failure");
        } else {
            throw format_error("unknown certificate line: " + kw);
        }
    }
    if (!saw_completions)
        throw format_error("certificate is missing the exhaustion bound");
    return out;
}

bool verify_certificate(const ApFailure& failure, std::string& diagnostics) {
    for (const Switchboard* s : {&failure.base, &failure.left, &failure.right})
        if (!validate(*s).valid) {
            diagnostics = "certificate structure is not a valid switchboard";
            return false;
        }
    for (const Switchboard* s : {&failure.left, &failure.right}) {
        if (s->size() != failure.base.size() + 1 ||
            restrict_to(*s, failure.base.elements()) != failure.base) {
            diagnostics = "certificate sides do not extend the base";
            return false;
        }
    }
    std::int64_t completions = 0;
    if (!exhaust_amalgams(failure.base, failure.left, failure.right,
                          completions)) {
        diagnostics = "an amalgam exists; the certificate is wrong";
        return false;
    }
    if (completions != failure.completions) {
        diagnostics = "exhaustion bound mismatch: replayed " +
                      std::to_string(completions) + ", certificate says " +
                      std::to_string(failure.completions);
        return false;
    }
    return true;
}

} // namespace swbtool
