#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtab/superpoly.hpp"
#include "mtab/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace mtab;

namespace {

using SP = SuperPolynomial;

SP random_poly(RingDims d, std::mt19937& rng)
{
    std::uniform_int_distribution<int> terms(1, 4), coef(-3, 3), row(1, d.n), xcol(1, d.m), tcol(1, d.m_bar),
        factors(0, 3);
    SP out(d);
    for (int t = terms(rng); t > 0; --t) {
        SP mono = SP::one(d) * Rational(coef(rng));
        for (int f = factors(rng); f > 0; --f)
            mono = mono * (f % 2 ? SP::x(d, row(rng), xcol(rng)) : SP::theta(d, row(rng), tcol(rng)));
        out += mono;
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) // a after b
{
    Permutation c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = a[b[i]];
    return c;
}

} // namespace

TEST_CASE("products")
{
    RingDims d{2, 1, 2};
    CHECK(SP::theta(d, 1, 1) * SP::theta(d, 2, 1) == SP::theta(d, 1, 1) * SP::theta(d, 2, 1));
    CHECK(SP::theta(d, 2, 1) * SP::theta(d, 1, 1) == SP::theta(d, 1, 1) * SP::theta(d, 2, 1) * Rational(-1));
    CHECK((SP::theta(d, 1, 1) * SP::theta(d, 1, 1)).is_zero());
    CHECK(SP::x(d, 1, 1) * SP::theta(d, 1, 2) * SP::x(d, 1, 1) ==
          SP::x(d, 1, 1) * SP::x(d, 1, 1) * SP::theta(d, 1, 2));
    CHECK_THROWS_AS(SP::x(d, 1, 1) * SP::x({3, 1, 2}, 1, 1), std::invalid_argument);
    CHECK((SP::x(d, 1, 1) * SP::theta(d, 2, 2) * SP::theta(d, 1, 1)).str() == "-x_{1,1}*t_{1,1'}*t_{2,2'}");
}

TEST_CASE("random products are associative and signs are consistent")
{
    std::mt19937 rng(11);
    RingDims d{3, 2, 2};
    for (int trial = 0; trial < 200; ++trial) {
        SP a = random_poly(d, rng), b = random_poly(d, rng), c = random_poly(d, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    // odd elements anticommute
    for (int trial = 0; trial < 50; ++trial) {
        SP t1 = SP::theta(d, 1 + trial % 3, 1 + trial % 2) * SP::x(d, 2, 1);
        SP t2 = SP::theta(d, 1 + (trial / 3) % 3, 2);
        CHECK(t1 * t2 == t2 * t1 * Rational(-1));
    }
}

TEST_CASE("action")
{
    RingDims d{2, 1, 1};
    const Permutation swap{1, 0};
    CHECK(act(swap, SP::theta(d, 1, 1) * SP::theta(d, 2, 1)) == SP::theta(d, 1, 1) * SP::theta(d, 2, 1) * Rational(-1));
    CHECK(act(swap, SP::x(d, 1, 1)) == SP::x(d, 2, 1));

    std::mt19937 rng(5);
    RingDims e{4, 2, 2};
    Permutation s(4), t(4);
    std::iota(s.begin(), s.end(), 0);
    std::iota(t.begin(), t.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
        std::shuffle(s.begin(), s.end(), rng);
        std::shuffle(t.begin(), t.end(), rng);
        SP p = random_poly(e, rng), q = random_poly(e, rng);
        CHECK(act(compose(s, t), p) == act(s, act(t, p)));
        CHECK(act(s, p * q) == act(s, p) * act(s, q));
    }
}

TEST_CASE("component bases")
{
    CHECK(component_basis(2, {1}, {}).size() == 2);
    auto b = component_basis(2, {}, {2});
    REQUIRE(b.size() == 1);
    CHECK(b[0].theta.size() == 2);
    CHECK(component_basis(2, {1}, {1}).size() == 4);
    CHECK(component_basis(2, {}, {3}).empty());
    for (int n = 1; n <= 4; ++n)
        for (auto [a, bb] : {std::pair<std::vector<int>, std::vector<int>>{{2, 1}, {1}}, {{3}, {2, 1}}, {{}, {1, 1}}})
            CHECK(component_dimension(n, a, bb) == static_cast<long>(component_basis(n, a, bb).size()));
    CHECK_THROWS_AS(component_basis(6, {4, 4}, {}, 100), std::length_error);
}

TEST_CASE("traces and brute multiplicities")
{
    CHECK(trace_character(2, {}, {2}, {2}) == -1);
    CHECK(trace_character(2, {1}, {}, {1, 1}) == 2);
    CHECK(brute_multiplicity(2, {1, 1}, {}, {2}) == 1);
    CHECK(brute_multiplicity(2, {2}, {}, {2}) == 0);
    CHECK(brute_multiplicity(2, {2}, {}, {}) == 1);
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            SymFunc he = to_p(SymFunc::term(Basis::h, {2, 1})) * to_p(SymFunc::term(Basis::e, {2}));
            CHECK(Rational(trace_character(n, {2, 1}, {2}, mu)) == eval_xi(he, mu));
        }
}

TEST_CASE("power sums")
{
    RingDims d{2, 1, 2};
    CHECK(power_sum(parse_multiset("{1',2'}"), d) ==
          SP::theta(d, 1, 1) * SP::theta(d, 1, 2) + SP::theta(d, 2, 1) * SP::theta(d, 2, 2));
    CHECK(power_sum(parse_multiset("{1,1,1'}"), d) ==
          SP::x(d, 1, 1) * SP::x(d, 1, 1) * SP::theta(d, 1, 1) + SP::x(d, 2, 1) * SP::x(d, 2, 1) * SP::theta(d, 2, 1));
    RingDims three{3, 1, 0};
    CHECK(is_invariant(power_sum(parse_multiset("{1}"), three)));
    CHECK_FALSE(is_invariant(SP::x({2, 1, 0}, 1, 1)));
}

TEST_CASE("monomial symmetric polynomials")
{
    RingDims d{3, 1, 0};
    CHECK(monomial_sym(parse_multiset_partition("{{1}}"), d) == SP::x(d, 1, 1) + SP::x(d, 2, 1) + SP::x(d, 3, 1));
    CHECK(monomial_sym(parse_multiset_partition("{{1'},{1'}}"), {3, 0, 1}).is_zero());
    CHECK(monomial_sym(parse_multiset_partition("{{1},{1}}"), {1, 1, 0}).is_zero());

    // sum over distinct (a,b,c,d) with c < d
    RingDims e{4, 1, 2};
    SP want(e);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int dd = c + 1; dd <= 4; ++dd) {
                    if (a == b || a == c || a == dd || b == c || b == dd)
                        continue;
                    want += SP::x(e, a, 1) * SP::x(e, a, 1) * SP::theta(e, a, 1) * SP::x(e, b, 1) * SP::x(e, b, 1) *
                            SP::theta(e, b, 2) * SP::theta(e, c, 1) * SP::theta(e, c, 2) * SP::theta(e, dd, 1) *
                            SP::theta(e, dd, 2);
                }
    CHECK(monomial_sym(parse_multiset_partition("{{1,1,1'},{1,1,2'},{1',2'},{1',2'}}"), e) == want);
}

TEST_CASE("invariance of m_pi and p_pi")
{
    RingDims d{3, 1, 2};
    for (const auto& pi : enumerate_multiset_partitions({{2}, {1, 1}}, 3, true)) {
        CHECK(is_invariant(monomial_sym(pi, d)));
        CHECK(is_invariant(power_prod(pi, d)));
    }
}
