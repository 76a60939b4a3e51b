#include "swb/types/core_sequence.hpp"

#include <algorithm>

#include "swb/amalg/amalgamate.hpp"
#include "swb/amalg/free_amalgam.hpp"
#include "swb/types/qf_type.hpp"
#include "swb/types/symmetry.hpp"
#include "swb/validation.hpp"

namespace swb::types {

namespace {

std::vector<ElementId> with(std::vector<ElementId> ids,
                            std::initializer_list<ElementId> more) {
    ids.insert(ids.end(), more);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::string flag_line(const char* name, int i, bool value) {
    return std::string(name) + " " + std::to_string(i) + " " +
           (value ? "true" : "false");
}

} // namespace

std::vector<std::string> CoreSequenceReport::verdict_lines() const {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        const SequenceFlags& f = flags[i];
        int idx = static_cast<int>(i);
        if (f.realizes_q)
            lines.push_back(flag_line("realizes-q", idx, *f.realizes_q));
        if (f.freely_amalgamated)
            lines.push_back(
                flag_line("freely-amalgamated", idx, *f.freely_amalgamated));
        if (f.distinguished)
            lines.push_back(flag_line("distinguished", idx, *f.distinguished));
        if (f.symmetric)
            lines.push_back(flag_line("symmetric", idx, *f.symmetric));
    }
    return lines;
}

CoreSequenceReport build_core_sequence(const gen::TwoTypeSpec& q, int length) {
    q.check();
    if (length < 1)
        throw precondition_error("build_core_sequence: length must be >= 1");
    std::vector<ElementId> base = q.base();

    QfType p1 = qf_type(q.structure, std::vector<ElementId>{q.first}, base);
    QfType p2 = qf_type(q.structure, std::vector<ElementId>{q.second}, base);
    if (p1 != p2)
        throw precondition_error(
            "build_core_sequence: the coordinates of q realize different "
            "1-types over the base");
    // The 1-type must not be realized in the base.  A complete type of a
    // fresh point contains its inequality with every base element, so no
    // base element can realize it; nothing to reject here.

    ElementId start = q.structure.elements().back() + 1;
    auto c = [&](int i) { return start + i; };

    CoreSequenceReport report;
    report.q = q;
    report.base = base;
    for (int i = 0; i <= length; ++i)
        report.sequence.push_back(c(i));

    LabeledSwitchboard m =
        rename(q.structure, {{q.first, c(0)}, {q.second, c(1)}});
    for (int i = 2; i <= length; ++i) {
        std::vector<ElementId> prev_ids = with(base, {c(i - 1)});
        LabeledSwitchboard prev = restrict_to(m, prev_ids);
        LabeledSwitchboard qi =
            rename(q.structure, {{q.first, c(i - 1)}, {q.second, c(i)}});
        LabeledSwitchboard back =
            restrict_to(m, with(base, {c(i - 1), c(0)}));
        LabeledSwitchboard glued =
            amalg::free_amalgam_one_point(prev, back, qi);
        m = amalg::amalgamate(back, m, glued).result;
    }
    report.structure = m;

    QfType qt = qf_type(q.structure,
                        std::vector<ElementId>{q.first, q.second}, base);
    for (int i = 0; i <= length; ++i) {
        SequenceFlags f;
        if (i < length)
            f.realizes_q =
                qf_type(m, std::vector<ElementId>{c(i), c(i + 1)}, base) == qt;
        if (i >= 2)
            f.freely_amalgamated = amalg::is_freely_amalgamated(
                m, with(base, {c(i - 1)}), c(i), c(0));
        if (i >= 1) {
            f.distinguished = is_distinguished(m, base, c(0), c(i));
            f.symmetric = is_symmetric(m, base, c(0), c(i));
        }
        report.flags.push_back(std::move(f));
    }
    return report;
}

CoreVerdict check_core_conclusions(const CoreSequenceReport& report) {
    int k = static_cast<int>(report.sequence.size()) - 1;
    int nb = static_cast<int>(report.base.size());
    if (k <= nb)
        throw precondition_error(
            "check_core_conclusions: sequence too short (need length > |B|)");
    CoreVerdict verdict;
    verdict.q_distinguished = is_distinguished(
        report.q.structure, report.base, report.q.first, report.q.second);
    verdict.pass = true;
    for (int i = nb; i <= k; ++i) {
        bool d = report.flags[i].distinguished.value_or(false);
        verdict.lines.push_back(flag_line("distinguished", i, d));
        verdict.pass = verdict.pass && d;
    }
    if (verdict.q_distinguished) {
        for (int i = nb + 1; i <= k; ++i) {
            bool s = report.flags[i].symmetric.value_or(false);
            verdict.lines.push_back(flag_line("symmetric", i, s));
            verdict.pass = verdict.pass && s;
        }
    }
    return verdict;
}

TwoStageResult two_stage_symmetry(const gen::TwoTypeSpec& q, int k1, int k2) {
    q.check();
    int nb = static_cast<int>(q.base().size());
    if (k1 < nb)
        throw precondition_error("two_stage_symmetry: k1 must be >= |B|");
    if (k2 < nb + 1)
        throw precondition_error("two_stage_symmetry: k2 must be > |B|");

    TwoStageResult out;
    out.stage1 = build_core_sequence(q, k1);
    const auto& m1 = out.stage1.structure;
    ElementId c0 = out.stage1.sequence[0];
    ElementId cn = out.stage1.sequence[static_cast<std::size_t>(nb)];
    out.q_prime = gen::TwoTypeSpec{
        restrict_to(m1, with(out.stage1.base, {c0, cn})), c0, cn};

    bool qp_dist =
        is_distinguished(m1, out.stage1.base, c0, cn);
    out.trace.push_back(std::string("q-prime-distinguished ") +
                        (qp_dist ? "true" : "false"));
    if (!qp_dist) {
        out.pass = false;
        out.trace.push_back("FAIL q' = tp(c_0,c_" + std::to_string(nb) +
                            "/B) is not distinguished");
        return out;
    }

    out.stage2 = build_core_sequence(out.q_prime, k2);
    const auto& m2 = out.stage2.structure;
    ElementId d0 = out.stage2.sequence[0];
    ElementId dn = out.stage2.sequence[static_cast<std::size_t>(nb) + 1];
    bool sym = is_symmetric(m2, out.stage2.base, d0, dn);
    out.trace.push_back(std::string("second-stage-symmetric ") +
                        (sym ? "true" : "false"));
    if (!sym) {
        out.pass = false;
        out.trace.push_back("FAIL tp(c'_0,c'_" + std::to_string(nb + 1) +
                            "/B) is not symmetric");
        return out;
    }
    out.pass = true;
    return out;
}

} // namespace swb::types
