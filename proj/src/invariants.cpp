#include "mtab/invariants.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mtab {

namespace {

DegreeVector content_of(const Multiset& s)
{
    DegreeVector d;
    d.alpha = s.counts();
    for (int b = 1; b <= s.max_barred(); ++b)
        d.beta.push_back(s.has_barred(b) ? 1 : 0);
    return d;
}

Rational sign_of(int exponent) { return exponent % 2 ? Rational(-1) : Rational(1); }

} // namespace

// -------------------------------------------------------------- PExpression

int reorder_sign(const std::vector<Multiset>& factors)
{
    int inversions = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].odd())
            continue;
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (!factors[j].odd())
                continue;
            auto c = compare_multisets(factors[i], factors[j]);
            if (c == 0)
                return 0;
            if (c > 0)
                ++inversions;
        }
    }
    return inversions % 2 ? -1 : 1;
}

PExpression PExpression::one()
{
    PExpression e;
    e.terms_.emplace(MultisetPartition{}, 1);
    return e;
}

PExpression PExpression::generator(const Multiset& s) { return ordered_product({s}); }

PExpression PExpression::ordered_product(const std::vector<Multiset>& parts, const Rational& c)
{
    PExpression e;
    const int sign = reorder_sign(parts);
    if (sign != 0)
        e.add_term(MultisetPartition(parts), c * sign);
    return e;
}

Rational PExpression::coeff(const MultisetPartition& pi) const
{
    auto it = terms_.find(pi);
    return it == terms_.end() ? Rational(0) : it->second;
}

int PExpression::max_part_size() const
{
    int mx = 0;
    for (const auto& [pi, _] : terms_)
        for (const auto& [s, k] : pi.parts())
            mx = std::max(mx, s.size());
    return mx;
}

void PExpression::add_term(const MultisetPartition& pi, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

PExpression& PExpression::operator+=(const PExpression& o)
{
    for (const auto& [pi, c] : o.terms_)
        add_term(pi, c);
    return *this;
}

PExpression& PExpression::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [_, v] : terms_)
        v *= c;
    return *this;
}

PExpression PExpression::operator*(const PExpression& o) const
{
    PExpression out;
    for (const auto& [a, ca] : terms_) {
        const auto fa = a.flat();
        for (const auto& [b, cb] : o.terms_) {
            auto factors = fa;
            const auto fb = b.flat();
            factors.insert(factors.end(), fb.begin(), fb.end());
            out += ordered_product(factors, ca * cb);
        }
    }
    return out;
}

SuperPolynomial PExpression::realize(RingDims dims) const
{
    SuperPolynomial out(dims);
    for (const auto& [pi, c] : terms_)
        out += power_prod(pi, dims) * c;
    return out;
}

std::string PExpression::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [pi, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        std::string body;
        for (const auto& [part, k] : pi.parts()) {
            if (!body.empty())
                body += "*";
            body += "p" + part.str();
            if (k > 1)
                body += "^" + std::to_string(k);
        }
        if (body.empty())
            s += mag.get_str();
        else
            s += (mag != 1 ? mag.get_str() + "*" : "") + body;
        first = false;
    }
    return s;
}

// ------------------------------------------------------------ coefficients

Integer count_invariants(int n, const std::vector<int>& alpha, const std::vector<int>& beta)
{
    return Integer(static_cast<unsigned long>(enumerate_multiset_partitions({alpha, beta}, n, true).size()));
}

Integer c_of_S(const Multiset& s)
{
    Integer c = factorial(static_cast<unsigned>(s.size()));
    for (int a : s.counts())
        c /= factorial(static_cast<unsigned>(a));
    return c;
}

Rational a_of_pi(const MultisetPartition& pi)
{
    Rational a = 1;
    for (const auto& [s, k] : pi.parts()) {
        Rational ratio = Rational(c_of_S(s)) / Rational(s.size());
        for (int i = 0; i < k; ++i)
            a *= ratio;
        a /= Rational(factorial(static_cast<unsigned>(k)));
    }
    return a;
}

int z_sign(const MultisetPartition& pi)
{
    std::vector<int> letters;
    for (const auto& s : pi.flat())
        for (int b = 1; b <= s.max_barred(); ++b)
            if (s.has_barred(b))
                letters.push_back(b);
    return sort_with_sign(letters);
}

std::vector<Multiset> enumerate_multisets(const Alphabet& alphabet, int min_size, int max_size)
{
    std::vector<Multiset> out;
    std::vector<int> counts(alphabet.m, 0);
    const std::uint64_t full = alphabet.m_bar >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << alphabet.m_bar) - 1;
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == alphabet.m) {
            for (std::uint64_t mask = 0;; ++mask) {
                if ((mask & full) == mask) {
                    Multiset s(counts, mask);
                    if (s.size() >= min_size && s.size() <= max_size)
                        out.push_back(s);
                }
                if (mask == full)
                    break;
            }
            return;
        }
        for (int c = 0; used + c <= max_size; ++c) {
            counts[i] = c;
            rec(i + 1, used + c);
        }
        counts[i] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), MultisetLess{});
    return out;
}

std::map<Multiset, PExpression, MultisetLess> expand_P(int degree_bound, const Alphabet& alphabet)
{
    if (degree_bound < 1)
        throw std::invalid_argument("expand_P: degree bound must be at least 1");
    std::map<Multiset, PExpression, MultisetLess> out;
    for (const auto& s : enumerate_multisets(alphabet, 1, degree_bound))
        out.emplace(s, PExpression::generator(s) * (Rational(c_of_S(s)) / Rational(s.size())));
    return out;
}

static PExpression e_coefficient(const Multiset& s, bool skip_single_part)
{
    PExpression out;
    if (s.empty())
        return PExpression::one();
    for (const auto& pi : enumerate_multiset_partitions(content_of(s), s.size(), true)) {
        if (skip_single_part && pi.length() == 1)
            continue;
        const Rational c = sign_of(s.size() + pi.length()) * a_of_pi(pi) * z_sign(pi);
        out += PExpression::ordered_product(pi.flat(), c);
    }
    return out;
}

std::map<Multiset, PExpression, MultisetLess> expand_E(int degree_bound, const Alphabet& alphabet)
{
    std::map<Multiset, PExpression, MultisetLess> out;
    for (const auto& s : enumerate_multisets(alphabet, 0, degree_bound))
        out.emplace(s, e_coefficient(s, false));
    return out;
}

PExpression relation_rhs(const Multiset& s)
{
    if (s.empty())
        throw std::invalid_argument("relation_rhs: S must be nonempty");
    // E_S = lead * p_S + rest = 0 with lead = (-1)^{|S|+1} c(S)/|S|.
    const Rational lead = sign_of(s.size() + 1) * Rational(c_of_S(s)) / Rational(s.size());
    return e_coefficient(s, true) * (Rational(-1) / lead);
}

PExpression normal_form(const PExpression& expr, int n, long* reductions)
{
    std::map<Multiset, PExpression, MultisetLess> cache;
    std::function<PExpression(const PExpression&)> reduce_expr;
    std::function<PExpression(const Multiset&)> reduced_generator = [&](const Multiset& s) {
        if (s.size() <= n)
            return PExpression::generator(s);
        if (auto it = cache.find(s); it != cache.end())
            return it->second;
        if (reductions)
            ++*reductions;
        PExpression r = reduce_expr(relation_rhs(s));
        cache.emplace(s, r);
        return r;
    };
    reduce_expr = [&](const PExpression& e) {
        PExpression out;
        for (const auto& [pi, c] : e.terms()) {
            PExpression acc = PExpression::one() * c;
            for (const auto& s : pi.flat())
                acc = acc * reduced_generator(s);
            out += acc;
        }
        return out;
    };
    return reduce_expr(expr);
}

PExpression reduce_pS(const Multiset& s, int n, long* reductions)
{
    if (s.size() <= n)
        throw std::invalid_argument("reduce_pS: |S| = " + std::to_string(s.size()) +
                                    " does not exceed n = " + std::to_string(n));
    return normal_form(PExpression::generator(s), n, reductions);
}

// ---------------------------------------------------------------- series

GenSeries series_multiply(const GenSeries& a, const GenSeries& b, int degree_bound)
{
    GenSeries out;
    std::vector<int> merged;
    for (const auto& [sa, ca] : a) {
        for (const auto& [sb, cb] : b) {
            if (sa.size() + sb.size() > degree_bound || (sa.barred_mask() & sb.barred_mask()))
                continue;
            // z_A z_B against z_{A+B}: count pairs a in A, b in B with a > b.
            int inversions = 0;
            for (int x = 1; x <= sa.max_barred(); ++x)
                if (sa.has_barred(x))
                    for (int y = 1; y < x; ++y)
                        if (sb.has_barred(y))
                            ++inversions;
            SuperPolynomial prod = ca * cb;
            if (inversions % 2)
                prod *= -1;
            const Multiset key = sa + sb;
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, std::move(prod));
            else
                it->second += prod;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

static GenSeries row_series(RingDims dims, int row, bool with_one)
{
    GenSeries y;
    if (with_one)
        y.emplace(Multiset{}, SuperPolynomial::one(dims));
    for (int j = 1; j <= dims.m; ++j) {
        std::vector<int> counts(j, 0);
        counts[j - 1] = 1;
        y.emplace(Multiset(counts, 0), SuperPolynomial::x(dims, row, j));
    }
    for (int j = 1; j <= dims.m_bar; ++j)
        y.emplace(Multiset({}, std::uint64_t{1} << (j - 1)), SuperPolynomial::theta(dims, row, j));
    return y;
}

GenSeries series_E(RingDims dims, int degree_bound)
{
    GenSeries e{{Multiset{}, SuperPolynomial::one(dims)}};
    for (int i = 1; i <= dims.n; ++i)
        e = series_multiply(e, row_series(dims, i, true), degree_bound);
    return e;
}

static void series_add(GenSeries& acc, const GenSeries& t, const Rational& c)
{
    for (const auto& [k, v] : t) {
        auto it = acc.find(k);
        if (it == acc.end())
            acc.emplace(k, v * c);
        else
            it->second += v * c;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
}

GenSeries series_P(RingDims dims, int degree_bound)
{
    GenSeries p;
    for (int i = 1; i <= dims.n; ++i) {
        const GenSeries y = row_series(dims, i, false);
        GenSeries power = y;
        for (int r = 1; r <= degree_bound && !power.empty(); ++r) {
            series_add(p, power, Rational(1, r));
            power = series_multiply(power, y, degree_bound);
        }
    }
    return p;
}

GenSeries series_exp_neg_P_neg(const GenSeries& p, RingDims dims, int degree_bound)
{
    GenSeries x;
    for (const auto& [k, v] : p) {
        if (k.empty())
            throw std::invalid_argument("series_exp_neg_P_neg: P must have no constant term");
        x.emplace(k, v * (k.size() % 2 ? Rational(1) : Rational(-1))); // -(-1)^{|S|}
    }
    GenSeries out{{Multiset{}, SuperPolynomial::one(dims)}};
    GenSeries power{{Multiset{}, SuperPolynomial::one(dims)}};
    Integer fact = 1;
    for (int k = 1; k <= degree_bound; ++k) {
        power = series_multiply(power, x, degree_bound);
        fact *= k;
        series_add(out, power, Rational(1) / Rational(fact));
    }
    return out;
}

GenSeries realize(const std::map<Multiset, PExpression, MultisetLess>& coeffs, RingDims dims)
{
    GenSeries out;
    for (const auto& [s, e] : coeffs) {
        SuperPolynomial v = e.realize(dims);
        if (!v.is_zero())
            out.emplace(s, std::move(v));
    }
    return out;
}

bool series_equal(const GenSeries& a, const GenSeries& b)
{
    auto nonzero = [](const GenSeries& s) {
        GenSeries t;
        for (const auto& [k, v] : s)
            if (!v.is_zero())
                t.emplace(k, v);
        return t;
    };
    return nonzero(a) == nonzero(b);
}

// ------------------------------------------------------------------- rank

long rank(const std::vector<SuperPolynomial>& polys)
{
    std::map<SuperMonomial, int> column;
    for (const auto& p : polys)
        for (const auto& [mono, _] : p.terms())
            column.emplace(mono, 0);
    int next = 0;
    for (auto& [_, idx] : column)
        idx = next++;

    using Row = std::map<int, Rational>;
    std::map<int, Row> pivots; // leading column -> row with leading entry 1
    for (const auto& p : polys) {
        Row row;
        for (const auto& [mono, c] : p.terms())
            row.emplace(column.at(mono), c);
        while (!row.empty()) {
            const auto [lead_col, lead_val] = *row.begin();
            auto pv = pivots.find(lead_col);
            if (pv == pivots.end()) {
                const Rational inv = Rational(1) / lead_val;
                for (auto& [_, v] : row)
                    v *= inv;
                pivots.emplace(lead_col, std::move(row));
                break;
            }
            const Rational factor = lead_val;
            for (const auto& [col, v] : pv->second) {
                auto [it, inserted] = row.try_emplace(col, -factor * v);
                if (!inserted) {
                    it->second -= factor * v;
                    if (it->second == 0)
                        row.erase(it);
                }
            }
        }
    }
    return static_cast<long>(pivots.size());
}

// ------------------------------------------------------------ verification

SpanReport verify_spanning(int n, const std::vector<int>& alpha, const std::vector<int>& beta, long long cap)
{
    SpanReport rep;
    rep.n = n;
    rep.alpha = alpha;
    rep.beta = beta;
    const RingDims dims{n, static_cast<int>(alpha.size()), static_cast<int>(beta.size())};
    if (component_dimension(n, alpha, beta) > Integer(std::to_string(cap)))
        throw std::length_error("component dimension exceeds the cap");

    const auto basis_index = enumerate_multiset_partitions({alpha, beta}, n, true);
    rep.count = static_cast<long>(basis_index.size());

    std::vector<SuperPolynomial> basis;
    for (const auto& pi : basis_index) {
        SuperPolynomial p = power_prod(pi, dims);
        if (!is_invariant(p))
            rep.all_invariant = false;
        basis.push_back(std::move(p));
        for (const auto& [s, _] : pi.parts())
            if (s.size() > n) {
                ++rep.reductions_applied;
                break;
            }
    }
    rep.basis_rank = rank(basis);

    const DegreeVector content{alpha, beta};
    std::vector<SuperPolynomial> products;
    for (const auto& pi : enumerate_multiset_partitions(content, content.total(), true)) {
        bool small = std::all_of(pi.parts().begin(), pi.parts().end(),
                                 [n](const auto& part) { return part.first.size() <= n; });
        if (small)
            products.push_back(power_prod(pi, dims));
    }
    rep.generators_used = static_cast<long>(products.size());
    rep.generator_rank = rank(products);

    rep.dimension = brute_multiplicity(n, Partition::from_unsorted({n}), alpha, beta, cap).get_si();

    rep.ok = rep.all_invariant && rep.basis_rank == rep.count && rep.generator_rank == rep.count &&
             rep.dimension == rep.count;
    if (!rep.ok) {
        rep.message = "count " + std::to_string(rep.count) + ", invariant dimension " +
                      std::to_string(rep.dimension) + ", basis rank " + std::to_string(rep.basis_rank) +
                      ", generator rank " + std::to_string(rep.generator_rank) +
                      (rep.all_invariant ? "" : ", some p_pi not invariant");
    }
    return rep;
}

RelationsReport check_relations(RingDims dims, int max_size)
{
    RelationsReport rep;
    const auto sets = enumerate_multisets({dims.m, dims.m_bar}, 1, max_size);
    std::vector<SuperPolynomial> ps;
    for (const auto& s : sets)
        ps.push_back(power_sum(s, dims));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].odd()) {
            ++rep.squares_checked;
            if (!(ps[i] * ps[i]).is_zero())
                rep.failures.push_back("p" + sets[i].str() + "^2 != 0");
        }
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            ++rep.pairs_checked;
            const int sign = (sets[i].barred_count() * sets[j].barred_count()) % 2 ? -1 : 1;
            if (!(ps[i] * ps[j] == ps[j] * ps[i] * Rational(sign)))
                rep.failures.push_back("p" + sets[i].str() + " p" + sets[j].str() + " sign relation fails");
        }
    }
    return rep;
}

} // namespace mtab
