#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "coxpoly/verify.hpp"

using namespace coxpoly;

namespace {

void check_suite(const SuiteResult& r) {
    INFO("suite " << r.name << ", " << r.checks << " checks, " << r.failures << " failed"
                  << (r.counterexamples.empty() ? "" : "; first: " + r.counterexamples[0]));
    CHECK(r.passed());
    CHECK(r.checks > 0);
    // every Coxeter polynomial produced along the way is monic, has constant
    // term 1 and is palindromic
    for (const Poly& p : r.produced) {
        CHECK(p.is_monic());
        CHECK(p.coeff(0) == 1);
        CHECK(p.is_palindromic());
    }
}

}  // namespace

TEST_CASE("closed-form suite", "[verify]") { check_suite(suite_closed_forms(8)); }

TEST_CASE("one-point extension suite", "[verify]") { check_suite(suite_ope(5, 60)); }

TEST_CASE("trace identity suite", "[verify]") { check_suite(suite_traces(5, 6, 4, 15)); }

TEST_CASE("Waring suite", "[verify]") { check_suite(suite_waring(4, 40)); }

TEST_CASE("separation suite", "[verify]") { check_suite(suite_separation(8)); }

TEST_CASE("suite dispatch", "[verify]") {
    const SuiteResult r = run_suite("waring", 3);
    CHECK(r.name == "waring");
    CHECK(r.passed());
    CHECK_THROWS_AS(run_suite("nonsense", 3), EmptyInputError);
}

TEST_CASE("failures are reported with counterexamples", "[verify]") {
    SuiteResult r{"demo"};
    r.expect(true, "fine");
    r.expect(false, "broken case");
    CHECK_FALSE(r.passed());
    CHECK(r.checks == 2);
    CHECK(r.failures == 1);
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(r.counterexamples[0] == "broken case");
}
