#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "swb/format.hpp"
#include "swb/labeling.hpp"
#include "swb/order/chain.hpp"

using namespace swb;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(SWB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        out.append(buffer.data(), got);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/swb_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli validate") {
    std::string good = write_temp("chain2.sb", to_text(order::chain_switchboard(2)));
    RunResult ok = run_cli("validate " + good);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "valid\n");

    std::string bad =
        write_temp("bad.sb", "%sb 1\nn 3\nlt 0 1 0 2\n");
    RunResult violation = run_cli("validate " + bad);
    CHECK(violation.exit_code == 1);
    CHECK(violation.out.find("violation switchboard 0 {0,1} {0,2}") !=
          std::string::npos);

    std::string malformed = write_temp("mal.sb", "%sb 1\nn 2\nlt 1 0 2 3\n");
    CHECK(run_cli("validate " + malformed).exit_code == 2);
    CHECK(run_cli("validate /nonexistent.sb").exit_code == 2);
}

TEST_CASE("cli label and labelings") {
    std::string chain2 =
        write_temp("chain2b.sb", to_text(order::chain_switchboard(2)));
    RunResult labeled = run_cli("label " + chain2);
    CHECK(labeled.exit_code == 0);
    CHECK(labeled.out ==
          to_text(label_canonical(order::chain_switchboard(2))));

    std::string empty3 = write_temp("empty3.sb", "%sb 1\nn 3\n");
    RunResult count = run_cli("labelings " + empty3);
    CHECK(count.exit_code == 0);
    CHECK(count.out == "8\n");

    RunResult listed = run_cli("labelings --list " + empty3);
    CHECK(listed.exit_code == 0);
    // 8 structures follow the count.
    std::size_t headers = 0, at = 0;
    while ((at = listed.out.find("%lsb 1", at)) != std::string::npos) {
        ++headers;
        ++at;
    }
    CHECK(headers == 8);
}

TEST_CASE("cli height") {
    std::string chain3 =
        write_temp("chain3.sb", to_text(order::chain_switchboard(3)));
    RunResult res = run_cli("height --edges " + chain3);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "3\n");

    std::string poset = write_temp(
        "poset.txt", "%poset 1\nnode a\nnode b\nnode c\nlt a b\nlt b c\nlt a c\n");
    RunResult res2 = run_cli("height --poset " + poset);
    CHECK(res2.exit_code == 0);
    CHECK(res2.out == "3\n");

    CHECK(run_cli("height " + chain3).exit_code == 2);
}

TEST_CASE("cli eval prints the poset and its height") {
    std::string chain2 = write_temp(
        "chain2c.lsb", to_text(label_canonical(order::chain_switchboard(2))));
    RunResult res = run_cli(
        "eval --formula 'lt(x1,x2,y1,y2)' --obj x1,x2 --param y1,y2 " +
        chain2);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("%poset 1\n") == 0);
    CHECK(res.out.find("\nheight 2\n") != std::string::npos);
    CHECK(res.out.find("lt (0,1) (2,3)") != std::string::npos);

    CHECK(run_cli("eval --formula 'lt(x1,x2,y1)' --obj x1,x2 --param y1 " +
                  chain2)
              .exit_code == 2);
    CHECK(run_cli("eval --formula 'eq(x1,z1)' --obj x1 --param y1 " + chain2)
              .exit_code == 2);
}

TEST_CASE("cli gen is deterministic and validates") {
    RunResult a = run_cli("gen --n 6 --seed 42 --density 0.5");
    RunResult b = run_cli("gen --n 6 --seed 42 --density 0.5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::string path = write_temp("gen.lsb", a.out);
    CHECK(run_cli("validate " + path).exit_code == 0);
    CHECK(run_cli("label " + path).exit_code == 2); // labeled, not %sb
}

TEST_CASE("cli amalgamation commands") {
    // Base: two unordered elements.  Left adds 2 favoring {0,1}; right adds
    // 2 disfavoring it (renamed internally to 3).
    std::string base = write_temp("amalg_base.lsb", "%lsb 1\nn 2\n");
    std::string left = write_temp("amalg_left.lsb", "%lsb 1\nn 3\nup 2 0 1\n");
    std::string right = write_temp("amalg_right.lsb", "%lsb 1\nn 3\n");
    RunResult free = run_cli("free-amalgam --base " + base + " --left " +
                             left + " --right " + right);
    CHECK(free.exit_code == 0);
    CHECK(free.out == "%lsb 1\nn 4\nup 2 0 1\n");

    RunResult full = run_cli("amalgamate --base " + base + " --left " + left +
                             " --right " + right);
    CHECK(full.exit_code == 0);
    CHECK(full.out.find("map 2 3") != std::string::npos);

    // The result file parses even with the map trailer attached.
    std::string out_path = write_temp("amalg_out.lsb", full.out);
    CHECK(run_cli("validate " + out_path).exit_code == 0);
}

TEST_CASE("cli witness") {
    std::string chain2 = write_temp(
        "chain2d.lsb", to_text(label_canonical(order::chain_switchboard(2))));
    RunResult res = run_cli("witness --dir up --x 0 --edge 2,3 " + chain2);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("# witness element 4\n") == 0);
    CHECK(res.out.find("lt 0 4 2 3") != std::string::npos);
    CHECK(run_cli("witness --dir up --x 2 --edge 2,3 " + chain2).exit_code ==
          2);
    CHECK(run_cli("witness --dir sideways --x 0 --edge 2,3 " + chain2)
              .exit_code == 2);
}

TEST_CASE("cli sequence and two-stage") {
    // The worked cross-fact spec over base {0,1}.
    std::string spec = write_temp("spec.lsb",
                                  "%lsb 1\nn 4\nlt 0 2 1 3\n"
                                  "up 0 1 2\nup 0 1 3\nup 2 0 1\n"
                                  "up 2 1 3\nup 3 0 1\npair 2 3\n");
    RunResult run = run_cli("sequence --q " + spec + " --length 4 --check");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("elements 4 5 6 7 8\n") == 0);
    CHECK(run.out.find("q-distinguished false") != std::string::npos);
    CHECK(run.out.find("distinguished 2 true") != std::string::npos);
    CHECK(run.out.rfind("PASS\n") == run.out.size() - 5);

    RunResult stage = run_cli("two-stage --q " + spec + " --k1 2 --k2 3");
    CHECK(stage.exit_code == 0);
    CHECK(stage.out.find("q-prime-distinguished true") != std::string::npos);
    CHECK(stage.out.find("second-stage-symmetric true") != std::string::npos);
    CHECK(stage.out.rfind("PASS\n") == stage.out.size() - 5);

    CHECK(run_cli("two-stage --q " + spec + " --k1 2 --k2 2").exit_code == 2);
    CHECK(run_cli("sequence --q " + spec + " --length 0 --check").exit_code ==
          2);
}

TEST_CASE("cli ap-failure emits a replayable certificate") {
    RunResult found = run_cli("ap-failure --max-n 5");
    CHECK(found.exit_code == 0);
    CHECK(found.out.find("%apcert 1") == 0);
    std::string cert = write_temp("cert.txt", found.out);
    CHECK(run_cli("ap-failure --verify " + cert).exit_code == 0);

    // Below the minimal carrier there is nothing to find.
    CHECK(run_cli("ap-failure --max-n 4").exit_code == 1);

    // Tampered certificates are rejected.
    std::string tampered = found.out;
    auto at = tampered.find("lt 0 3 1 2");
    REQUIRE(at != std::string::npos);
    tampered.erase(at, 11);
    std::string bad = write_temp("cert_bad.txt", tampered);
    CHECK(run_cli("ap-failure --verify " + bad).exit_code == 1);
}

TEST_CASE("cli determinism: identical invocations, identical bytes") {
    std::string empty3 = write_temp("empty3b.sb", "%sb 1\nn 3\n");
    for (const std::string& args :
         {std::string("labelings --list ") + empty3,
          std::string("ap-failure --max-n 5"),
          std::string("gen --n 7 --seed 9 --density 0.4")}) {
        RunResult first = run_cli(args);
        RunResult second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("validate").exit_code == 2);
    CHECK(run_cli("labelings --unknown-flag /tmp/x").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli check runs the property battery") {
    RunResult res = run_cli("check");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("PASS labeling-count-3") != std::string::npos);
    CHECK(res.out.rfind("OK\n") == res.out.size() - 3);
}

TEST_CASE("size cap environment variable") {
    std::string empty3 = write_temp("empty3c.sb", "%sb 1\nn 3\n");
    std::string command = std::string("SWB_SIZE_CAP=2 ") + SWB_CLI_PATH +
                          " labelings " + empty3 + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[256];
    while (fgets(buffer, sizeof buffer, pipe))
        ;
    CHECK(WEXITSTATUS(pclose(pipe)) == 2);
}
