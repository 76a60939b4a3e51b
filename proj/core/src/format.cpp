#include "swb/format.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace swb {

const LabeledSwitchboard& ParsedFile::require_labeled() const {
    if (kind != StructureKind::labeled)
        throw format_error("expected a labeled switchboard (%lsb) file");
    return lsb;
}

const Switchboard& ParsedFile::require_switchboard() const {
    if (kind != StructureKind::switchboard)
        throw format_error("expected an unlabeled switchboard (%sb) file");
    return sb;
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw format_error("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        std::string tok;
        while (words >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

ElementId parse_id(const Line& line, const std::string& tok, int n) {
    std::size_t used = 0;
    long value = -1;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        fail(line.number, "expected an element id, got '" + tok + "'");
    }
    if (used != tok.size() || value < 0)
        fail(line.number, "expected an element id, got '" + tok + "'");
    if (n >= 0 && value >= n)
        fail(line.number, "element id " + tok + " out of range (n = " +
                              std::to_string(n) + ")");
    return static_cast<ElementId>(value);
}

Edge parse_edge(const Line& line, const std::string& lo,
                const std::string& hi, int n) {
    ElementId a = parse_id(line, lo, n);
    ElementId b = parse_id(line, hi, n);
    if (a >= b)
        fail(line.number, "edge endpoints must satisfy " + lo + " < " + hi);
    return Edge(a, b);
}

} // namespace

ParsedFile read_structure(std::istream& in) {
    std::vector<Line> lines = tokenize(in);
    if (lines.empty())
        throw format_error("empty input: missing %sb/%lsb header");

    const Line& header = lines.front();
    bool labeled;
    if (header.tokens[0] == "%sb")
        labeled = false;
    else if (header.tokens[0] == "%lsb")
        labeled = true;
    else
        fail(header.number, "expected %sb or %lsb header");
    if (header.tokens.size() != 2 || header.tokens[1] != "1")
        fail(header.number, "unsupported format version");

    int n = -1;
    std::vector<EdgePair> lt;
    std::vector<UpFact> up;
    std::vector<UpFact> dn;
    std::map<ElementId, std::string> names;
    ParsedFile out;
    out.kind = labeled ? StructureKind::labeled : StructureKind::switchboard;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& kw = line.tokens[0];
        auto want = [&](std::size_t count) {
            if (line.tokens.size() != count + 1)
                fail(line.number, kw + " takes " + std::to_string(count) +
                                      " arguments");
        };
        if (kw == "n") {
            want(1);
            if (n >= 0)
                fail(line.number, "duplicate n line");
            n = static_cast<int>(parse_id(line, line.tokens[1], -1));
            continue;
        }
        if (n < 0)
            fail(line.number, "n must precede " + kw);
        if (kw == "name") {
            want(2);
            ElementId id = parse_id(line, line.tokens[1], n);
            if (!names.emplace(id, line.tokens[2]).second)
                fail(line.number, "duplicate name for element " +
                                      line.tokens[1]);
        } else if (kw == "lt") {
            want(4);
            lt.emplace_back(parse_edge(line, line.tokens[1], line.tokens[2], n),
                            parse_edge(line, line.tokens[3], line.tokens[4], n));
        } else if (kw == "up" || kw == "dn") {
            want(3);
            if (!labeled)
                fail(line.number, kw + " is not allowed in a %sb file");
            ElementId a = parse_id(line, line.tokens[1], n);
            Edge e = parse_edge(line, line.tokens[2], line.tokens[3], n);
            (kw == "up" ? up : dn).emplace_back(a, e);
        } else if (kw == "point") {
            want(1);
            if (out.point || out.pair)
                fail(line.number, "duplicate trailer");
            out.point = parse_id(line, line.tokens[1], n);
        } else if (kw == "pair") {
            want(2);
            if (out.point || out.pair)
                fail(line.number, "duplicate trailer");
            out.pair = {parse_id(line, line.tokens[1], n),
                        parse_id(line, line.tokens[2], n)};
        } else if (kw == "map") {
            want(2);
            out.maps.emplace_back(parse_id(line, line.tokens[1], -1),
                                  parse_id(line, line.tokens[2], -1));
        } else {
            fail(line.number, "unknown directive '" + kw + "'");
        }
    }
    if (n < 0)
        throw format_error("missing n line");

    try {
        out.sb = Switchboard(n, lt, names);
        if (labeled)
            out.lsb = LabeledSwitchboard(out.sb, up);
    } catch (const format_error& e) {
        throw format_error(std::string("malformed structure: ") + e.what());
    }
    // Explicit dn facts are accepted but must agree with the derived
    // disfavor relation.
    for (const auto& [a, e] : dn)
        if (!out.lsb.down(a, e))
            throw format_error("dn " + std::to_string(a) + " " +
                               std::to_string(e.lo) + " " +
                               std::to_string(e.hi) +
                               " disagrees with the derived disfavor facts");
    return out;
}

ParsedFile read_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw format_error("cannot open '" + path + "'");
    try {
        return read_structure(in);
    } catch (const format_error& e) {
        throw format_error(path + ": " + e.what());
    }
}

namespace {

void write_common(std::ostream& out, const Switchboard& s, const char* header) {
    if (!s.contiguous())
        throw precondition_error(
            "canonical writer requires a contiguous ground set 0..n-1");
    out << header << " 1\n";
    out << "n " << s.size() << "\n";
    for (const auto& [id, name] : s.names())
        out << "name " << id << " " << name << "\n";
    for (const auto& [e, f] : s.lt_pairs())
        out << "lt " << e.lo << " " << e.hi << " " << f.lo << " " << f.hi
            << "\n";
}

} // namespace

void write_switchboard(std::ostream& out, const Switchboard& s) {
    write_common(out, s, "%sb");
}

void write_labeled(std::ostream& out, const LabeledSwitchboard& l) {
    write_common(out, l.base(), "%lsb");
    for (const auto& [a, e] : l.up_pairs())
        out << "up " << a << " " << e.lo << " " << e.hi << "\n";
}

std::string to_text(const Switchboard& s) {
    std::ostringstream out;
    write_switchboard(out, s);
    return out.str();
}

std::string to_text(const LabeledSwitchboard& l) {
    std::ostringstream out;
    write_labeled(out, l);
    return out.str();
}

} // namespace swb
