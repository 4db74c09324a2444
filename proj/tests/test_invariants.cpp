#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtab/invariants.hpp"

using namespace mtab;

namespace {

Multiset M(const char* s) { return parse_multiset(s); }
MultisetPartition P(const char* s) { return parse_multiset_partition(s); }
PExpression gen(const char* s) { return PExpression::generator(M(s)); }

// Number of distinct rows used by a monomial.
int rows_used(const SuperMonomial& mono, RingDims d)
{
    int used = 0;
    for (int r = 0; r < d.n; ++r) {
        bool hit = false;
        for (int j = 0; j < d.m; ++j)
            hit = hit || mono.x_exp[r * d.m + j] > 0;
        for (int v : mono.theta)
            hit = hit || v / d.m_bar == r;
        used += hit;
    }
    return used;
}

} // namespace

TEST_CASE("ordered products carry the reordering sign")
{
    const auto a = M("{1'}"), b = M("{2'}"), c = M("{1}");
    CHECK(reorder_sign({a, b}) == 1);
    CHECK(reorder_sign({b, a}) == -1);
    CHECK(reorder_sign({b, c, a}) == -1);
    CHECK(reorder_sign({a, a}) == 0);
    CHECK(reorder_sign({c, c}) == 1);
    CHECK(gen("{2'}") * gen("{1'}") == gen("{1'}") * gen("{2'}") * Rational(-1));
    CHECK((gen("{1'}") * gen("{1'}")).is_zero());
    CHECK((gen("{1,1'}") * gen("{1}")).coeff(P("{{1},{1,1'}}")) == 1);
}

TEST_CASE("counting invariants")
{
    CHECK(count_invariants(2, {2}, {}) == 2);
    CHECK(count_invariants(2, {}, {2}) == 0);
    CHECK(count_invariants(1, {2}, {}) == 1);
    CHECK(count_invariants(3, {1}, {1, 1}) == 5);
}

TEST_CASE("c(S) and a_pi")
{
    CHECK(c_of_S(M("{1,1}")) == 1);
    CHECK(c_of_S(M("{1,1'}")) == 2);
    CHECK(c_of_S(M("{1,1,2'}")) == 3);
    CHECK(a_of_pi(P("{{1,1}}")) == Rational(1, 2));
    CHECK(a_of_pi(P("{{1},{1}}")) == Rational(1, 2));
    CHECK(a_of_pi(P("{{1}}")) == 1);
    CHECK(z_sign(P("{{1',3'},{2'}}")) == -1);
    CHECK(z_sign(P("{{1'},{2'}}")) == 1);
}

TEST_CASE("expansions of P and E")
{
    const Alphabet ab{1, 2};
    auto p = expand_P(3, ab);
    CHECK(p.at(M("{1}")) == gen("{1}"));
    CHECK(p.at(M("{1,1}")) == gen("{1,1}") * Rational(1, 2));
    CHECK(p.at(M("{1',2'}")) == gen("{1',2'}"));
    auto e = expand_E(3, ab);
    CHECK(e.at(M("{1}")) == gen("{1}"));
    CHECK(e.at(M("{1,1}")) == gen("{1,1}") * Rational(-1, 2) + gen("{1}") * gen("{1}") * Rational(1, 2));
    // n = 1 makes the {1,1} coefficient vanish
    CHECK(e.at(M("{1,1}")).realize({1, 1, 2}).is_zero());
}

TEST_CASE("expansions agree with the product and logarithm series")
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m)
            for (int mb = 0; mb <= 2; ++mb) {
                const RingDims d{n, m, mb};
                const GenSeries e = series_E(d, 4);
                const GenSeries p = series_P(d, 4);
                CHECK(series_equal(e, realize(expand_E(4, {m, mb}), d)));
                CHECK(series_equal(p, realize(expand_P(4, {m, mb}), d)));
                CHECK(series_equal(e, series_exp_neg_P_neg(p, d, 4)));
            }
}

TEST_CASE("coefficients of E above degree n vanish")
{
    for (int n = 1; n <= 3; ++n) {
        const RingDims d{n, 2, 2};
        for (const auto& [s, expr] : expand_E(n + 2, {2, 2}))
            if (s.size() > n)
                CHECK(expr.realize(d).is_zero());
    }
}

TEST_CASE("rewriting p_S")
{
    CHECK(reduce_pS(M("{1,1}"), 1) == gen("{1}") * gen("{1}"));
    CHECK_THROWS_AS(reduce_pS(M("{1,1}"), 2), std::invalid_argument);

    long reductions = 0;
    auto r = reduce_pS(M("{1,1,1}"), 2, &reductions);
    CHECK(r.max_part_size() <= 2);
    CHECK(reductions >= 1);
    CHECK(r.realize({2, 1, 0}) == power_sum(M("{1,1,1}"), {2, 1, 0}));

    auto mixed = reduce_pS(M("{1,1'}"), 1);
    CHECK(mixed == gen("{1}") * gen("{1'}"));
    CHECK(mixed.realize({1, 1, 1}) == power_sum(M("{1,1'}"), {1, 1, 1}));

    // the rewrite is an identity once realized at any n below |S|
    for (const char* s : {"{1,1,2'}", "{1',2'}", "{1,2,1',2'}"}) {
        const Multiset S = M(s);
        for (int n = 1; n < S.size(); ++n) {
            const RingDims d{n, 2, 2};
            CHECK(relation_rhs(S).realize(d) == power_sum(S, d));
        }
    }
}

TEST_CASE("rank")
{
    RingDims d{2, 1, 0};
    auto x1 = SuperPolynomial::x(d, 1, 1), x2 = SuperPolynomial::x(d, 2, 1);
    CHECK(rank({x1, x2, x1 + x2}) == 2);
    CHECK(rank({x1 * Rational(2), x1 * Rational(-3)}) == 1);
    CHECK(rank({}) == 0);
    CHECK(rank({SuperPolynomial(d)}) == 0);
}

TEST_CASE("spanning")
{
    auto r = verify_spanning(2, {2}, {});
    CHECK(r.ok);
    CHECK(r.basis_rank == 2);
    CHECK(r.count == 2);
    CHECK(verify_spanning(2, {2, 0}, {1}).ok);
    for (int a = 0; a <= 3; ++a) {
        auto one = verify_spanning(1, {a}, {});
        CHECK(one.ok);
        CHECK(one.basis_rank == 1);
    }
}

TEST_CASE("p_pi leads with a nonzero multiple of m_pi")
{
    for (int n = 1; n <= 3; ++n) {
        const RingDims d{n, 2, 2};
        for (const auto& pi : enumerate_multiset_partitions({{2, 1}, {1, 1}}, n, true)) {
            const SuperPolynomial p = power_prod(pi, d);
            const SuperPolynomial m = monomial_sym(pi, d);
            REQUIRE_FALSE(m.is_zero());
            const auto& [lead_mono, lead_c] = *m.terms().begin();
            const Rational c = p.coeff(lead_mono) / lead_c;
            CHECK(c != 0);
            // p_pi - c m_pi only uses monomials on fewer rows
            const SuperPolynomial rest = p - m * c;
            for (const auto& [mono, v] : rest.terms())
                CHECK(rows_used(mono, d) < pi.length());
        }
    }
}

TEST_CASE("the four-factor product is twice the stated sum")
{
    for (int n : {4, 5}) {
        const RingDims d{n, 1, 2};
        const auto c = power_sum(M("{1',2'}"), d);
        const auto lhs = power_sum(M("{1,1,1'}"), d) * power_sum(M("{1,1,2'}"), d) * c * c;
        const auto rhs = monomial_sym(P("{{1,1,1'},{1,1,2'},{1',2'},{1',2'}}"), d) +
                         monomial_sym(P("{{1,1,1,1,1',2'},{1',2'},{1',2'}}"), d);
        CHECK(lhs == rhs * Rational(2));
        CHECK(c * c == monomial_sym(P("{{1',2'},{1',2'}}"), d) * Rational(2));
    }
}

TEST_CASE("sign relations")
{
    const RingDims d{3, 2, 2};
    CHECK(power_sum(M("{1'}"), d) * power_sum(M("{2'}"), d) ==
          power_sum(M("{2'}"), d) * power_sum(M("{1'}"), d) * Rational(-1));
    CHECK((power_sum(M("{1'}"), d) * power_sum(M("{1'}"), d)).is_zero());
    CHECK(power_sum(M("{1,1}"), d) * power_sum(M("{2,2}"), d) == power_sum(M("{2,2}"), d) * power_sum(M("{1,1}"), d));
    auto rep = check_relations(d, 3);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked > 0);
    CHECK(rep.squares_checked > 0);
}
