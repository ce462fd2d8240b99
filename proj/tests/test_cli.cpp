#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/cli.hpp"
#include "wreath/finite_group.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = wreath::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool mentions(const std::string& text, const std::string& phrase) {
    return text.find(phrase) != std::string::npos;
}

}  // namespace

TEST_CASE("cli order prints the bare tower order") {
    const CliRun r = run_cli({"order", "--group", "cyclic:2", "--level", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "128\n");
}

TEST_CASE("cli build output is frozen") {
    const CliRun r = run_cli({"build", "--group", "cyclic:2", "--level", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "group: cyclic:2\n"
          "level: 2\n"
          "degree: 4\n"
          "order: 8\n"
          "gen: (0 1)\n"
          "gen: (0 2)(1 3)\n");
}

TEST_CASE("cli normalizer output is frozen") {
    const std::vector<std::string> args = {"normalizer", "--group", "cyclic:3", "--level", "2"};
    const CliRun r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "group: cyclic:3\n"
          "level: 2\n"
          "degree: 9\n"
          "aut-order: 2\n"
          "predicted-order: 324\n"
          "gen: (1 2)(4 5)(7 8)\n"
          "gen: (3 6)(4 7)(5 8)\n");

    SUBCASE("reruns are byte-identical") {
        CHECK(run_cli(args).out == r.out);
    }
}

TEST_CASE("cli verify reports the order bookkeeping and the checks") {
    const CliRun r = run_cli({"verify", "--group", "cyclic:3", "--level", "2"});
    CHECK(r.code == 0);
    CHECK(mentions(r.out, "tower-order: 81\n"));
    CHECK(mentions(r.out, "complement-order: 4\n"));
    CHECK(mentions(r.out, "combined-order: 324\n"));
    CHECK(mentions(r.out, "predicted-order: 324\n"));
    CHECK(mentions(r.out, "normalizes: PASS\n"));
    CHECK(mentions(r.out, "semidirect-order: PASS\n"));
    CHECK(mentions(r.out, "commutators: PASS\n"));
    CHECK(mentions(r.out, "complement-structure: PASS\n"));
    CHECK(mentions(r.out, "result: PASS\n"));

    CHECK(run_cli({"verify", "--group", "klein4", "--level", "1"}).code == 0);
}

TEST_CASE("cli brute scans and optionally compares") {
    SUBCASE("plain scan") {
        const CliRun r = run_cli({"brute", "--group", "cyclic:2", "--level", "2"});
        CHECK(r.code == 0);
        CHECK(r.out == "degree: 4\norder: 8\n");
        CHECK(mentions(r.err, "scanned 24 permutations of degree 4"));
    }

    SUBCASE("comparison against the constructed normalizer") {
        const CliRun r = run_cli({"brute", "--group", "cyclic:3", "--level", "1", "--compare"});
        CHECK(r.code == 0);
        CHECK(r.out ==
              "degree: 3\n"
              "order: 6\n"
              "predicted: 6\n"
              "MATCH\n");
    }

    SUBCASE("worker count does not change the report") {
        const CliRun a = run_cli({"brute", "--group", "cyclic:3", "--level", "1"});
        const CliRun b =
            run_cli({"brute", "--group", "cyclic:3", "--level", "1", "--workers", "2"});
        CHECK(a.out == b.out);
    }

    SUBCASE("oracle manifest lands in the requested file") {
        const std::string path = "tmp_cli_oracle.txt";
        const CliRun r =
            run_cli({"brute", "--group", "cyclic:3", "--level", "1", "--out", path});
        CHECK(r.code == 0);
        std::ifstream f(path);
        std::stringstream content;
        content << f.rdbuf();
        f.close();
        std::remove(path.c_str());
        CHECK(mentions(content.str(), "degree: 3\norder: 6\n"));
        CHECK(mentions(content.str(), "gen: (0 1 2)\n"));
    }
}

TEST_CASE("cli sylow derives the prime from the group") {
    const CliRun r = run_cli({"sylow", "--group", "cyclic:2", "--level", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "p: 2\n"
          "level: 3\n"
          "sylow-check: PASS\n");

    SUBCASE("non-prime orders are rejected") {
        const CliRun bad = run_cli({"sylow", "--group", "klein4", "--level", "1"});
        CHECK(bad.code == 2);
        CHECK(bad.out.empty());
        CHECK(mentions(bad.err, "not prime"));
    }
}

TEST_CASE("cli export writes the tower manifest") {
    const std::string path = "tmp_cli_export.txt";
    const CliRun r =
        run_cli({"export", "--group", "cyclic:2", "--level", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(mentions(r.err, "wrote tower manifest"));
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    f.close();
    std::remove(path.c_str());
    CHECK(content.str() ==
          "group: cyclic:2\n"
          "level: 2\n"
          "degree: 4\n"
          "gen: (0 1)\n"
          "gen: (0 2)(1 3)\n");

    SUBCASE("the destination is required") {
        CHECK(run_cli({"export", "--group", "cyclic:2", "--level", "2"}).code == 2);
    }
}

TEST_CASE("cli accepts cayley table files as group specs") {
    const std::string path = "tmp_cli_group.txt";
    {
        std::ofstream f(path);
        wreath::write_cayley_table(f, wreath::FiniteGroup::klein4());
    }
    const CliRun r = run_cli({"order", "--group", "@" + path, "--level", "1"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("cli usage and input errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"order", "--level", "1"}).code == 2);
    CHECK(run_cli({"order", "--group", "cyclic:2"}).code == 2);
    CHECK(run_cli({"order", "--group", "cyclic:abc", "--level", "1"}).code == 2);
    CHECK(run_cli({"order", "--group", "cyclic:2", "--level", "-1"}).code == 2);

    SUBCASE("tower degree cap") {
        const CliRun r = run_cli({"order", "--group", "cyclic:2", "--level", "13"});
        CHECK(r.code == 2);
        CHECK(mentions(r.err, "exceeds cap"));
        CHECK(run_cli({"order", "--group", "cyclic:2", "--level", "3", "--max-degree", "8"})
                  .code == 0);
        CHECK(run_cli({"order", "--group", "cyclic:2", "--level", "3", "--max-degree", "7"})
                  .code == 2);
    }

    SUBCASE("oracle degree cap") {
        const CliRun r = run_cli({"brute", "--group", "cyclic:4", "--level", "2"});
        CHECK(r.code == 2);
        CHECK(mentions(r.err, "outside the exhaustive range"));
    }

    SUBCASE("automorphism cap is adjustable") {
        CHECK(run_cli({"normalizer", "--group", "cyclic:25", "--level", "1"}).code == 2);
        const CliRun ok = run_cli({"normalizer", "--group", "cyclic:25", "--level", "1",
                                   "--max-aut-order", "30"});
        CHECK(ok.code == 0);
        CHECK(mentions(ok.out, "aut-order: 20\n"));
    }
}

TEST_CASE("cli help exits cleanly") {
    const CliRun r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(mentions(r.out, "build"));
    CHECK(mentions(r.out, "brute"));
}
