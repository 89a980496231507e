#include "doctest.h"
#include "test_support.hpp"

#include "qlf/job.hpp"

using namespace qlf;
using namespace qlf::test;

TEST_CASE("parse_job: spec examples") {
    SUBCASE("valid pform job") {
        auto job = parse_job(R"({"p":2,"vars":["x","y"],"command":"pform","entries":["1","x"]})");
        CHECK(job.command == "pform");
        CHECK(job.field->p() == 2);
        CHECK(std::get<PformPayload>(job.payload).form.dim() == 2);
    }
    SUBCASE("p = 4 is rejected") {
        try {
            parse_job(R"({"p":4,"vars":["x"],"command":"pform","entries":["1"]})");
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SemanticError);
        }
    }
    SUBCASE("valid ann job") {
        auto job = parse_job(R"({"p":2,"vars":["x"],"command":"ann","sets":[["x"]],"n":1})");
        CHECK(job.command == "ann");
        CHECK(job.n == 1);
    }
    SUBCASE("unknown fields are rejected everywhere") {
        CHECK_THROWS_AS(parse_job(R"({"p":2,"vars":["x"],"command":"ann","sets":[["x"]],"n":1,"zz":0})"),
                        Error);
        CHECK_THROWS_AS(
            parse_job(
                R"({"p":2,"vars":["x"],"command":"pform","entries":["x"],"other":{"entries":["x"],"zz":1}})"),
            Error);
    }
    SUBCASE("bad JSON carries ParseError") {
        try {
            parse_job("{nope");
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
    SUBCASE("unknown variable in an expression") {
        CHECK_THROWS_AS(parse_job(R"({"p":2,"vars":["x"],"command":"ann","sets":[["q"]],"n":1})"),
                        Error);
    }
}

TEST_CASE("run_job: kernel report for the two-form tower") {
    auto job = parse_job(
        R"({"p":2,"vars":["x","y","z"],"command":"kernel","tower":[{"entries":["1","x"]},{"entries":["1","y"]}],"n":1})");
    auto rep = run_job(job, true);
    CHECK(!rep.failed_crosscheck);
    CHECK(rep.json["s"] == 2);
    CHECK(rep.json["basis"]["dimension"] == 2);
    CHECK(rep.json["closed"]["matches_solver"] == true);
    // the basis is {dx, dy}
    CHECK(rep.json["basis"]["basis"][0][0]["indices"][0] == 1);
    CHECK(rep.json["basis"]["basis"][1][0]["indices"][0] == 2);
}

TEST_CASE("run_job: power annihilator with r > k reports the full space") {
    auto job = parse_job(
        R"({"p":2,"vars":["x","y","z"],"command":"ann","set":["x","y"],"r":3,"n":1})");
    auto rep = run_job(job, true);
    CHECK(rep.json["full_space"] == true);
    CHECK(rep.json["basis"]["dimension"] == 3); // C(3,1)
    CHECK(!rep.failed_crosscheck);
}

TEST_CASE("run_job: witt compositum verifies its samples") {
    auto job = parse_job(
        R"({"p":2,"vars":["x","y"],"command":"witt","compositum":{"roots":["x"],"form":{"entries":["1","y"]}},"budget":4})");
    auto rep = run_job(job);
    CHECK(rep.json["kernel"]["all_verified"] == true);
    CHECK(rep.json["kernel"]["case"] == "compositum");
    CHECK(!rep.failed_crosscheck);
}

TEST_CASE("reports are byte-identical for a fixed job and seed") {
    const std::string text =
        R"({"p":2,"vars":["x","y"],"command":"witt","forms":[{"entries":["1","x","y"]}],"seed":9,"budget":5})";
    auto a = run_job(parse_job(text));
    auto b = run_job(parse_job(text));
    CHECK(a.json.dump() == b.json.dump());
}

TEST_CASE("serialize-parse round trip on job expressions") {
    auto f = make_field(2, {"x", "y"});
    Rng rng(119);
    for (int iter = 0; iter < 10; ++iter) {
        auto a = random_rf(rng, f);
        CHECK(parse_expression(f, a.to_string()) == a);
    }
}

TEST_CASE("exit codes by error class") {
    CHECK(exit_code_for(Error(ErrorCode::ParseError, "")) == 2);
    CHECK(exit_code_for(Error(ErrorCode::SemanticError, "")) == 2);
    CHECK(exit_code_for(Error(ErrorCode::HypothesisViolated, "")) == 3);
    CHECK(exit_code_for(Error(ErrorCode::NormDegreeCollapsed, "")) == 3);
    CHECK(exit_code_for(Error(ErrorCode::CaseNotCovered, "")) == 3);
    CHECK(exit_code_for(Error(ErrorCode::CrosscheckFailed, "")) == 4);
}

TEST_CASE("crosscheck command aggregates suite results") {
    auto job = parse_job(
        R"({"p":2,"vars":["x"],"command":"crosscheck","suites":["worked-identities"],"seed":3})");
    auto rep = run_job(job);
    CHECK(rep.json["all_pass"] == true);
    CHECK(!rep.failed_crosscheck);
    CHECK_THROWS_AS(
        parse_job(R"({"p":2,"vars":["x"],"command":"crosscheck","suites":["nope"]})"), Error);
}

TEST_CASE("modular kernel job ignores exponents and checks out") {
    auto j1 = parse_job(
        R"({"p":3,"vars":["x","y"],"command":"kernel","modular":{"elements":["x"],"exponents":[4]},"n":1})");
    auto j2 = parse_job(
        R"({"p":3,"vars":["x","y"],"command":"kernel","modular":{"elements":["x"]},"n":1})");
    auto r1 = run_job(j1, true);
    auto r2 = run_job(j2, true);
    CHECK(!r1.failed_crosscheck);
    CHECK(r1.json["basis"].dump() == r2.json["basis"].dump());
}
