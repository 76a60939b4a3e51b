#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "swb/errors.hpp"
#include "swb/validation.hpp"

int main(int argc, char** argv) {
    using namespace swbtool;
    CLI::App app{"switchboard toolkit"};
    app.require_subcommand(1);

    std::string path, base, left, right, dir, edge, formula, obj, param;
    std::string out_path, verify_path;
    int x = 0, length = 0, k1 = 0, k2 = 0, n = 0, max_n = 6;
    std::uint64_t seed = 0;
    double density = 0.25;
    bool list = false, check = false;

    auto* validate_cmd =
        app.add_subcommand("validate", "check a structure file");
    validate_cmd->add_option("file", path)->required();

    auto* label_cmd =
        app.add_subcommand("label", "canonical labeling of a switchboard");
    label_cmd->add_option("file", path)->required();

    auto* labelings_cmd = app.add_subcommand(
        "labelings", "count (and optionally list) all labeled expansions");
    labelings_cmd->add_option("file", path)->required();
    labelings_cmd->add_flag("--list", list, "print each expansion");

    auto* amalgamate_cmd =
        app.add_subcommand("amalgamate", "amalgamate two extensions");
    amalgamate_cmd->add_option("--base", base)->required();
    amalgamate_cmd->add_option("--left", left)->required();
    amalgamate_cmd->add_option("--right", right)->required();

    auto* free_cmd = app.add_subcommand(
        "free-amalgam", "single-element free amalgamation");
    free_cmd->add_option("--base", base)->required();
    free_cmd->add_option("--left", left)->required();
    free_cmd->add_option("--right", right)->required();

    auto* witness_cmd = app.add_subcommand(
        "witness", "extend by a point witnessing a favor/disfavor fact");
    witness_cmd->add_option("--dir", dir)->required()
        ->check(CLI::IsMember({"up", "down"}));
    witness_cmd->add_option("--x", x)->required();
    witness_cmd->add_option("--edge", edge)->required();
    witness_cmd->add_option("file", path)->required();

    auto* height_cmd =
        app.add_subcommand("height", "height of an edge poset or poset file");
    std::string edges_path, poset_path;
    height_cmd->add_option("--edges", edges_path);
    height_cmd->add_option("--poset", poset_path);

    auto* eval_cmd = app.add_subcommand(
        "eval", "evaluate a formula and print its definable-set poset");
    eval_cmd->add_option("--formula", formula)->required();
    eval_cmd->add_option("--obj", obj)->required();
    eval_cmd->add_option("--param", param)->required();
    eval_cmd->add_option("file", path)->required();

    auto* gen_cmd =
        app.add_subcommand("gen", "seeded random labeled switchboard");
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--density", density)->required();

    auto* sequence_cmd = app.add_subcommand(
        "sequence", "build a core sequence from a two-type spec");
    sequence_cmd->add_option("--q", path)->required();
    sequence_cmd->add_option("--length", length)->required();
    sequence_cmd->add_flag("--check", check, "verify the conclusions");
    sequence_cmd->add_option("--out", out_path,
                             "write the final structure to a file");

    auto* two_stage_cmd = app.add_subcommand(
        "two-stage", "two-stage symmetry scenario from a two-type spec");
    two_stage_cmd->add_option("--q", path)->required();
    two_stage_cmd->add_option("--k1", k1)->required();
    two_stage_cmd->add_option("--k2", k2)->required();

    auto* ap_cmd = app.add_subcommand(
        "ap-failure", "search for an unlabeled amalgamation failure");
    ap_cmd->add_option("--max-n", max_n);
    ap_cmd->add_option("--verify", verify_path,
                       "replay a certificate instead of searching");

    app.add_subcommand("check", "run the built-in property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) // --help
            return app.exit(err);
        app.exit(err);
        return exit_usage;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(path);
        if (label_cmd->parsed())
            return cmd_label(path);
        if (labelings_cmd->parsed())
            return cmd_labelings(path, list);
        if (amalgamate_cmd->parsed())
            return cmd_amalgamate(base, left, right);
        if (free_cmd->parsed())
            return cmd_free_amalgam(base, left, right);
        if (witness_cmd->parsed())
            return cmd_witness(dir, x, edge, path);
        if (height_cmd->parsed())
            return cmd_height(edges_path, poset_path);
        if (eval_cmd->parsed())
            return cmd_eval(formula, obj, param, path);
        if (gen_cmd->parsed())
            return cmd_gen(n, seed, density);
        if (sequence_cmd->parsed())
            return cmd_sequence(path, length, check, out_path);
        if (two_stage_cmd->parsed())
            return cmd_two_stage(path, k1, k2);
        if (ap_cmd->parsed())
            return cmd_ap_failure(max_n, verify_path);
        return cmd_check();
    } catch (const swb::validation_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_violation;
    } catch (const swb::error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return exit_usage;
    }
}
