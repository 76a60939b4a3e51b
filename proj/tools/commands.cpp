#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ap_failure.hpp"
#include "swb/amalg/amalgamate.hpp"
#include "swb/amalg/free_amalgam.hpp"
#include "swb/format.hpp"
#include "swb/gen/random.hpp"
#include "swb/gen/specs.hpp"
#include "swb/gen/witness.hpp"
#include "swb/labeling.hpp"
#include "swb/order/phi_poset.hpp"
#include "swb/order/poset.hpp"
#include "swb/types/core_sequence.hpp"
#include "swb/validation.hpp"

namespace swbtool {

using namespace swb;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

Edge parse_edge_arg(const std::string& text) {
    auto parts = split_commas(text);
    if (parts.size() != 2)
        throw format_error("--edge expects '<i>,<j>'");
    try {
        return Edge(std::stoi(parts[0]), std::stoi(parts[1]));
    } catch (const std::invalid_argument&) {
        throw format_error("--edge expects numeric endpoints");
    } catch (const std::out_of_range&) {
        throw format_error("--edge endpoint out of range");
    }
}

} // namespace

int cmd_validate(const std::string& path) {
    ParsedFile file = read_structure_file(path);
    ValidationReport rep = file.kind == StructureKind::labeled
                               ? validate(file.lsb)
                               : validate(file.sb);
    std::cout << rep.to_string() << "\n";
    return rep.valid ? exit_ok : exit_violation;
}

int cmd_label(const std::string& path) {
    ParsedFile file = read_structure_file(path);
    write_labeled(std::cout, label_canonical(file.require_switchboard()));
    return exit_ok;
}

int cmd_labelings(const std::string& path, bool list) {
    ParsedFile file = read_structure_file(path);
    const Switchboard& s = file.kind == StructureKind::labeled
                               ? file.lsb.base()
                               : file.sb;
    auto all = enumerate_labelings(s, EnumerationLimits::from_env());
    std::cout << all.size() << "\n";
    if (list)
        for (const auto& l : all) {
            std::cout << "\n";
            write_labeled(std::cout, l);
        }
    return exit_ok;
}

int cmd_amalgamate(const std::string& base, const std::string& left,
                   const std::string& right) {
    const LabeledSwitchboard a = read_structure_file(base).require_labeled();
    const LabeledSwitchboard b = read_structure_file(left).require_labeled();
    const LabeledSwitchboard c = read_structure_file(right).require_labeled();
    amalg::AmalgamResult res = amalg::amalgamate(a, b, c);
    write_labeled(std::cout, res.result);
    std::cout << "# left embedding\n";
    for (const auto& [from, to] : res.left_embedding)
        std::cout << "map " << from << " " << to << "\n";
    std::cout << "# right embedding\n";
    for (const auto& [from, to] : res.right_embedding)
        std::cout << "map " << from << " " << to << "\n";
    return exit_ok;
}

int cmd_free_amalgam(const std::string& base, const std::string& left,
                     const std::string& right) {
    const LabeledSwitchboard s = read_structure_file(base).require_labeled();
    const LabeledSwitchboard a1 = read_structure_file(left).require_labeled();
    LabeledSwitchboard a2 = read_structure_file(right).require_labeled();
    // By convention the two extension files may both use id |S| for their
    // fresh point; the right one is then moved to |S|+1.
    if (a1.size() == s.size() + 1 && a2.size() == s.size() + 1 &&
        a1.has_element(s.size()) && a2.has_element(s.size()))
        a2 = rename(a2, {{s.size(), s.size() + 1}});
    write_labeled(std::cout, amalg::free_amalgam_one_point(s, a1, a2));
    return exit_ok;
}

int cmd_witness(const std::string& dir, int x, const std::string& edge,
                const std::string& path) {
    const LabeledSwitchboard m = read_structure_file(path).require_labeled();
    Edge e = parse_edge_arg(edge);
    gen::WitnessResult res;
    if (dir == "up")
        res = gen::witness_up(m, x, e);
    else if (dir == "down")
        res = gen::witness_down(m, x, e);
    else
        throw format_error("--dir expects 'up' or 'down'");
    std::cout << "# witness element " << res.witness << "\n";
    write_labeled(std::cout, res.structure);
    return exit_ok;
}

int cmd_height(const std::string& edges_path, const std::string& poset_path) {
    if (edges_path.empty() == poset_path.empty())
        throw format_error("height expects exactly one of --edges/--poset");
    order::FinitePoset poset;
    if (!edges_path.empty()) {
        ParsedFile file = read_structure_file(edges_path);
        poset = order::edge_poset(file.kind == StructureKind::labeled
                                      ? file.lsb.base()
                                      : file.sb);
    } else {
        std::ifstream in(poset_path);
        if (!in)
            throw format_error("cannot open '" + poset_path + "'");
        poset = order::read_poset(in);
    }
    std::cout << order::hgt_all(poset).height << "\n";
    return exit_ok;
}

int cmd_eval(const std::string& formula, const std::string& obj,
             const std::string& param, const std::string& path) {
    const LabeledSwitchboard m = read_structure_file(path).require_labeled();
    order::FormulaPtr f = order::parse_formula(formula);
    order::FinitePoset poset =
        order::phi_poset(m, f, split_commas(obj), split_commas(param),
                         EnumerationLimits::from_env());
    order::write_poset(std::cout, poset);
    std::cout << "height " << order::hgt_all(poset).height << "\n";
    return exit_ok;
}

int cmd_gen(int n, std::uint64_t seed, double density) {
    write_labeled(std::cout, gen::random_labeled(n, seed, density));
    return exit_ok;
}

int cmd_sequence(const std::string& spec_path, int length, bool check,
                 const std::string& out_path) {
    gen::TwoTypeSpec q =
        gen::read_two_type_spec(read_structure_file(spec_path));
    types::CoreSequenceReport report = types::build_core_sequence(q, length);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw format_error("cannot write '" + out_path + "'");
        write_labeled(out, report.structure);
    }
    std::cout << "elements";
    for (ElementId c : report.sequence)
        std::cout << " " << c;
    std::cout << "\n";
    if (!check) {
        for (const std::string& line : report.verdict_lines())
            std::cout << line << "\n";
        return exit_ok;
    }
    types::CoreVerdict verdict = types::check_core_conclusions(report);
    std::cout << "q-distinguished "
              << (verdict.q_distinguished ? "true" : "false") << "\n";
    for (const std::string& line : verdict.lines)
        std::cout << line << "\n";
    std::cout << (verdict.pass ? "PASS" : "FAIL") << "\n";
    return verdict.pass ? exit_ok : exit_violation;
}

int cmd_two_stage(const std::string& spec_path, int k1, int k2) {
    gen::TwoTypeSpec q =
        gen::read_two_type_spec(read_structure_file(spec_path));
    types::TwoStageResult res = types::two_stage_symmetry(q, k1, k2);
    for (const std::string& line : res.trace)
        std::cout << line << "\n";
    std::cout << (res.pass ? "PASS" : "FAIL") << "\n";
    return res.pass ? exit_ok : exit_violation;
}

int cmd_ap_failure(int max_n, const std::string& verify_path) {
    if (!verify_path.empty()) {
        std::ifstream in(verify_path);
        if (!in)
            throw format_error("cannot open '" + verify_path + "'");
        ApFailure cert = read_certificate(in);
        std::string diagnostics;
        if (verify_certificate(cert, diagnostics)) {
            std::cout << "verified: no amalgam exists (bound "
                      << cert.completions << ")\n";
            return exit_ok;
        }
        std::cerr << "certificate rejected: " << diagnostics << "\n";
        return exit_violation;
    }
    std::optional<ApFailure> failure = ap_failure_search(max_n);
    if (!failure) {
        std::cerr << "no amalgamation failure with carrier size <= " << max_n
                  << "\n";
        return exit_violation;
    }
    write_certificate(std::cout, *failure);
    return exit_ok;
}

} // namespace swbtool
