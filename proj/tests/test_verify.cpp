#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtab/verify.hpp"

using namespace mtab;

namespace {

VerifyOptions small_grid()
{
    VerifyOptions o;
    o.n_max = 3;
    o.degree_max = 3;
    o.k_max = 4;
    o.fill_degree_max = 3;
    o.inv_n_max = 2;
    return o;
}

} // namespace

TEST_CASE("grid helpers")
{
    CHECK(bounded_vectors(0, 3).size() == 1);
    CHECK(bounded_vectors(2, 2).size() == 6);
    CHECK(compositions_up_to(3).size() == 1 + 1 + 2 + 4);
}

TEST_CASE("small grid passes every suite")
{
    auto rep = run_verification(small_grid());
    CHECK(rep.ok());
    CHECK(rep.suites.size() == suite_names().size());
    for (const auto& s : rep.suites) {
        CHECK_MESSAGE(s.cases > 0, s.name);
        CHECK_MESSAGE(s.failed == 0, s.name);
    }
}

TEST_CASE("parallel runs report the same thing")
{
    auto o = small_grid();
    o.suites = {"triangle", "grouped", "reduction"};
    auto one = run_verification(o);
    o.jobs = 3;
    o.inject_sign_bug = true;
    auto a = run_verification(o);
    auto b = run_verification(o);
    REQUIRE(a.suites.size() == 3);
    for (std::size_t i = 0; i < a.suites.size(); ++i) {
        CHECK(a.suites[i].failures == b.suites[i].failures);
        CHECK(a.suites[i].cases == one.suites[i].cases);
    }
}

TEST_CASE("dropping trace signs is caught and located")
{
    auto o = small_grid();
    o.suites = {"triangle"};
    o.inject_sign_bug = true;
    auto rep = run_verification(o);
    CHECK_FALSE(rep.ok());
    REQUIRE(!rep.suites[0].failures.empty());
    CHECK(rep.suites[0].failures[0] == "n=2 alpha=[] beta=[2] lambda=[2]: tableaux 0, symbolic 0, brute 1");
}

TEST_CASE("unknown suite")
{
    VerifyOptions o;
    o.suites = {"nope"};
    CHECK_THROWS_AS(run_verification(o), std::invalid_argument);
}
