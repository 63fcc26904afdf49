#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "expanso/instance.hpp"

namespace {

struct run_result {
    int exit_code = -1;
    std::string out; // stdout + stderr interleaved
};

run_result run(const std::string& args) {
    const std::string cmd = std::string(EXPANSO_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) {
    return std::string("\"") + EXPANSO_DATA_DIR + "/" + name + "\"";
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli: axioms") {
    const run_result r = run("axioms " + data("chain3.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "t0=yes"));
    CHECK(contains(r.out, "t1=no"));
    CHECK(contains(r.out, "closure({0}) = {0}"));
    CHECK(contains(r.out, "closure({2}) = {0,1,2}"));
}

TEST_CASE("cli: check exit codes and certificates") {
    {
        const run_result r =
            run("check " + data("chain3.json") + " --cover all --mode refinement");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "verdict: yes"));
        CHECK(contains(r.out, "uniform radius 0"));
    }
    {
        const run_result r =
            run("check " + data("discrete2.json") + " --cover all --mode orbit");
        CHECK(r.exit_code == 1);
        CHECK(contains(r.out, "verdict: no"));
        CHECK(contains(r.out, "witness pair (0, 1) with period 1"));
    }
    {
        const run_result r = run("check " + data("threecycle.json") +
                                 " --cover two --mode uniform --target singletons");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "uniform N: 1"));
    }
    { // Unknown cover name is a usage error.
        const run_result r =
            run("check " + data("chain3.json") + " --cover nope --mode orbit");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.out, "error[bad-argument]"));
    }
}

TEST_CASE("cli: decide") {
    CHECK(run("decide " + data("chain3.json") + " --mode orbit").exit_code == 1);
    CHECK(run("decide " + data("chain3.json") + " --mode refinement").exit_code == 0);
    CHECK(run("decide " + data("threecycle.json") + " --mode orbit").exit_code == 0);
}

TEST_CASE("cli: construct") {
    { // Doubling the closed fixed point 0 of the chain, to stdout.
        const run_result r =
            run("construct " + data("chain3.json") + " --op duplicate --k 0");
        CHECK(r.exit_code == 0);
        const expanso::instance_doc doc = expanso::parse_instance(r.out);
        REQUIRE(doc.is_finite());
        CHECK(doc.finite->space.points() == 4);
        CHECK(doc.finite->space.min_nbhd(3) == expanso::point_set::of(4, {1, 2, 3}));
        CHECK(doc.finite->covers.count("all") == 1);
    }
    { // --out writes a loadable instance file.
        const std::string path = "/tmp/expanso_cli_dup.json";
        const run_result r = run("construct " + data("chain3.json") +
                                 " --op duplicate --k 0 --out \"" + path + "\"");
        CHECK(r.exit_code == 0);
        const expanso::instance_doc doc = expanso::load_instance(path);
        CHECK(doc.finite->space.points() == 4);
        std::remove(path.c_str());
    }
    { // Collapsing an indiscrete pair to its t0 quotient.
        const std::string path = "/tmp/expanso_cli_ind.json";
        std::ofstream f(path);
        f << R"({"kind": "finite", "points": 2,
                 "topology": {"min_nbhd": [[0, 1], [0, 1]]},
                 "map": [1, 0], "covers": {"all": [[0, 1]]}})";
        f.close();
        const run_result r =
            run("construct \"" + path + "\" --op quotient-t0");
        CHECK(r.exit_code == 0);
        const expanso::instance_doc doc = expanso::parse_instance(r.out);
        CHECK(doc.finite->space.points() == 1);
        std::remove(path.c_str());
    }
    { // Powers need a nonzero exponent.
        const run_result r =
            run("construct " + data("chain3.json") + " --op power --r 0");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.out, "error[bad-argument]"));
    }
    { // Subspace restriction to an invariant carrier.
        const run_result r = run("construct " + data("chain3.json") +
                                 " --op subspace --carrier 1,2");
        CHECK(r.exit_code == 0);
        const expanso::instance_doc doc = expanso::parse_instance(r.out);
        CHECK(doc.finite->space.points() == 2);
    }
}

TEST_CASE("cli: sft") {
    {
        const run_result r =
            run("sft " + data("goldenmean.json") + " --op check-cover --cover sep");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "verdict: yes"));
    }
    {
        const run_result r =
            run("sft " + data("goldenmean.json") + " --op check-cover --cover all");
        CHECK(r.exit_code == 1);
        CHECK(contains(r.out, "periodic pair"));
    }
    {
        const run_result r = run("sft " + data("full2.json") + " --op periodic --n 3");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "periodic points: 8"));
    }
    {
        const run_result r =
            run("sft " + data("full2.json") + " --op duplicated --cover dupgood");
        CHECK(r.exit_code == 0);
    }
    {
        const run_result r =
            run("sft " + data("full2.json") + " --op duplicated --cover dup");
        CHECK(r.exit_code == 1);
        CHECK(contains(r.out, "glued point left=[0] core=[1] right=[0]"));
    }
    { // duplicated mode needs a fixed_symbol in the document.
        const run_result r =
            run("sft " + data("goldenmean.json") + " --op duplicated --cover all");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.out, "error[bad-argument]"));
    }
}

TEST_CASE("cli: errors and usage") {
    {
        const run_result r = run("axioms /no/such/file.json");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.out, "error[parse-error]"));
    }
    { // A family that misses the whole space is rejected as a non-topology.
        const std::string path = "/tmp/expanso_cli_bad.json";
        std::ofstream f(path);
        f << R"({"kind": "finite", "points": 2,
                 "topology": {"opens": [[], [0]]},
                 "map": [0, 1], "covers": {"all": [[0, 1]]}})";
        f.close();
        const run_result r = run("axioms \"" + path + "\"");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.out, "error[not-a-topology]"));
        std::remove(path.c_str());
    }
    { // sft command on a finite instance.
        const run_result r =
            run("sft " + data("chain3.json") + " --op periodic --n 1");
        CHECK(r.exit_code == 2);
    }
    CHECK(run("--help").exit_code == 0);
    CHECK(run("check").exit_code == 2);           // missing required options
    CHECK(run("decide " + data("chain3.json") + " --mode sideways").exit_code == 2);
}

TEST_CASE("cli: suite smoke run") {
    {
        const run_result r = run("suite --max-points 2 --jobs 2");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "certificates:"));
        CHECK(contains(r.out, "violations=0"));
    }
    { // Above the enumeration cap.
        const run_result r = run("suite --max-points 6");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.out, "error[scale-cap]"));
    }
}

TEST_CASE("cli: machine output is valid json and deterministic") {
    const std::string cmd = "--format machine check " + data("chain3.json") +
                            " --cover all --mode refinement";
    const run_result a = run(cmd);
    const run_result b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j.at("yes") == true);
    CHECK(j.at("certificate").at("type") == "uniform-radius");
    CHECK(j.at("seconds").is_null());

    const run_result s1 = run("--format machine suite --max-points 2 --jobs 1");
    const run_result s2 = run("--format machine suite --max-points 2 --jobs 3");
    CHECK(s1.exit_code == 0);
    CHECK(s1.out == s2.out); // independent of worker count
    const nlohmann::json sj = nlohmann::json::parse(s1.out);
    CHECK(sj.at("totals").at("violations") == 0);
    CHECK(sj.at("certificates").at("failed") == 0);

    // The stderr line and the stdout JSON may interleave either way through
    // the pipe, so cut the JSON out by its braces (the message has none).
    const run_result e = run("--format machine axioms /no/such/file.json");
    CHECK(e.exit_code == 2);
    const auto lb = e.out.find('{');
    const auto rb = e.out.rfind('}');
    REQUIRE(lb != std::string::npos);
    REQUIRE(rb != std::string::npos);
    const nlohmann::json ej = nlohmann::json::parse(e.out.substr(lb, rb - lb + 1));
    CHECK(ej.at("kind") == "parse-error");
}
