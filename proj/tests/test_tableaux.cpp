#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtab/symfunc.hpp"
#include "mtab/tableaux.hpp"

#include <functional>
#include <set>

using namespace mtab;

namespace {

Multiset M(const char* s) { return *s ? parse_multiset(s) : Multiset{}; }

std::vector<Multiset> row(std::initializer_list<const char*> cells)
{
    std::vector<Multiset> r;
    for (const char* c : cells)
        r.push_back(M(c));
    return r;
}

// Sub-multisets of the remaining content usable as one cell label.
std::vector<Multiset> candidate_labels(const std::vector<int>& alpha, const std::vector<int>& beta)
{
    std::vector<Multiset> out;
    std::vector<int> counts(alpha.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == alpha.size()) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << beta.size()); ++mask) {
                bool ok = true;
                for (std::size_t b = 0; b < beta.size(); ++b)
                    if (((mask >> b) & 1) && beta[b] == 0)
                        ok = false;
                if (!ok)
                    continue;
                std::vector<int> c = counts;
                while (!c.empty() && c.back() == 0)
                    c.pop_back();
                out.emplace_back(c, mask);
            }
            return;
        }
        for (int k = 0; k <= alpha[i]; ++k) {
            counts[i] = k;
            rec(i + 1);
        }
        counts[i] = 0;
    };
    rec(0);
    return out;
}

// Assign every cell independently, keep what validates.
std::set<std::string> naive_tableaux(const Partition& shape, std::vector<int> alpha, std::vector<int> beta)
{
    std::set<std::string> out;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            cells.emplace_back(r, c);
    MultisetTableau t{shape, {}};
    for (int r = 0; r < shape.length(); ++r)
        t.rows.emplace_back(shape[r]);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            for (int a : alpha)
                if (a)
                    return;
            for (int b : beta)
                if (b)
                    return;
            if (validate(t).ok)
                out.insert(render_text(t));
            return;
        }
        for (const auto& s : candidate_labels(alpha, beta)) {
            for (std::size_t j = 0; j < alpha.size(); ++j)
                alpha[j] -= s.count(static_cast<int>(j) + 1);
            for (std::size_t j = 0; j < beta.size(); ++j)
                beta[j] -= s.has_barred(static_cast<int>(j) + 1);
            t.rows[cells[i].first][cells[i].second] = s;
            rec(i + 1);
            for (std::size_t j = 0; j < alpha.size(); ++j)
                alpha[j] += s.count(static_cast<int>(j) + 1);
            for (std::size_t j = 0; j < beta.size(); ++j)
                beta[j] += s.has_barred(static_cast<int>(j) + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("validate: the worked example tableau")
{
    MultisetTableau t{{7, 3, 2, 2, 1},
                      {row({"", "", "{2}", "{2}", "{1',2'}", "{1',2'}", "{2'}"}),
                       row({"{1,1'}", "{2}", "{1',2'}"}),
                       row({"{1,1'}", "{2'}"}),
                       row({"{1,1'}", "{2'}"}),
                       row({"{2}"})}};
    auto rep = validate(t);
    CHECK(rep.ok);
    DegreeVector want{{3, 4}, {6, 6}};
    CHECK(t.content() == want);
}

TEST_CASE("validate: violations")
{
    auto r4 = validate({{2}, {row({"{1'}", "{1'}"})}});
    CHECK_FALSE(r4.ok);
    CHECK(r4.condition == 4);
    CHECK(r4.cells.size() == 2);

    auto r3 = validate({{1, 1}, {row({"{1}"}), row({"{1}"})}});
    CHECK_FALSE(r3.ok);
    CHECK(r3.condition == 3);

    auto r2 = validate({{2}, {row({"{2}", "{1}"})}});
    CHECK_FALSE(r2.ok);
    CHECK(r2.condition == 2);

    Alphabet small{1, 0};
    auto r1 = validate({{1}, {row({"{2}"})}}, &small);
    CHECK_FALSE(r1.ok);
    CHECK(r1.condition == 1);

    CHECK_THROWS_AS(validate({{2}, {row({"{1}"})}}), std::invalid_argument);
}

TEST_CASE("enumerate: examples")
{
    auto a = enumerate_tableaux({2}, {{1}, {}});
    REQUIRE(a.size() == 1);
    CHECK(a[0].rows[0] == row({"", "{1}"}));
    auto b = enumerate_tableaux({1, 1}, {{}, {2}});
    REQUIRE(b.size() == 1);
    CHECK(b[0].rows[0][0] == M("{1'}"));
    CHECK(b[0].rows[1][0] == M("{1'}"));
    CHECK(enumerate_tableaux({2}, {{}, {2}}).empty());
}

TEST_CASE("enumerate agrees with naive cell assignment")
{
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> contents{
        {{1}, {}}, {{2}, {}}, {{}, {1}}, {{}, {2}}, {{1}, {1}}, {{1, 1}, {}}, {{2}, {1}},
        {{1}, {1, 1}}, {{}, {1, 1}}, {{1, 1}, {1}}, {{3}, {}}, {{}, {3}}};
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : enumerate_partitions(n))
            for (const auto& [alpha, beta] : contents) {
                if (n == 4 && alpha.size() + beta.size() > 2)
                    continue;
                auto got = enumerate_tableaux(shape, {alpha, beta});
                std::set<std::string> rendered;
                for (const auto& t : got) {
                    CHECK(validate(t).ok);
                    DegreeVector c = t.content();
                    c.alpha.resize(alpha.size(), 0);
                    c.beta.resize(beta.size(), 0);
                    CHECK(c == DegreeVector{alpha, beta});
                    rendered.insert(render_text(t));
                }
                CHECK(rendered.size() == got.size());
                CHECK(rendered == naive_tableaux(shape, alpha, beta));
                CHECK(multiplicity(shape, alpha, beta, n) == static_cast<long>(got.size()));
            }
}

TEST_CASE("counts by entry multiset")
{
    CHECK(count_with_entry_multiset({5}, parse_multiset_partition("{{1}}"), 5) == 1);
    CHECK(count_with_entry_multiset({1, 1}, parse_multiset_partition("{{1},{1}}"), 2) == 0);
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (auto [a, b] : {std::pair<std::vector<int>, std::vector<int>>{{2}, {1}}, {{1}, {1, 1}}, {{1, 1}, {2}}}) {
                Integer sum = 0;
                for (const auto& pi : enumerate_multiset_partitions({a, b}, n, false)) {
                    const Integer c = count_with_entry_multiset(lambda, pi, n);
                    CHECK(c == static_cast<long>(enumerate_with_entries(lambda, pi, n).size()));
                    // iterated Pieri coefficient of s_lambda
                    auto [me, mo] = m_tilde(pi);
                    std::vector<int> h = me.parts();
                    h.push_back(n - me.size() - mo.size());
                    SymFunc prod = to_p(SymFunc::term(Basis::h, h)) * to_p(SymFunc::term(Basis::e, mo.parts()));
                    CHECK(Rational(c) == hall_inner(prod, SymFunc::term(Basis::s, lambda.parts())));
                    sum += c;
                }
                CHECK(sum == multiplicity(lambda, a, b, n));
            }
}

TEST_CASE("multiplicity: examples")
{
    CHECK(multiplicity({2}, {1}, {}, 2) == 1);
    CHECK(multiplicity({1, 1}, {}, {2}, 2) == 1);
    for (int n = 1; n <= 6; ++n)
        CHECK(multiplicity(Partition{n}, {0}, {0}, n) == 1);
}

TEST_CASE("render")
{
    MultisetTableau t{{3, 1}, {row({"", "{1}", "{1,2'}"}), row({"{2}"})}};
    CHECK(render_text(t) == "2\n.   1   12'\n");
}
