#include "mtab/verify.hpp"

#include "mtab/fillings.hpp"
#include "mtab/invariants.hpp"
#include "mtab/symfunc.hpp"
#include "mtab/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mtab {

namespace {

constexpr std::size_t kKeptFailures = 20;

using Failures = std::vector<std::string>;

struct Case {
    int suite;
    std::function<Failures()> run;
};

std::string vec_str(const std::vector<int>& v) { return "[" + int_list_str(v) + "]"; }

std::string component_str(int n, const std::vector<int>& alpha, const std::vector<int>& beta)
{
    return "n=" + std::to_string(n) + " alpha=" + vec_str(alpha) + " beta=" + vec_str(beta);
}

SymFunc h_times_e(const std::vector<int>& h_index, const std::vector<int>& e_index)
{
    return to_p(SymFunc::term(Basis::h, h_index)) * to_p(SymFunc::term(Basis::e, e_index));
}

Failures triangle_case(int n, std::vector<int> alpha, std::vector<int> beta, const VerifyOptions& opts)
{
    Failures out;
    const std::string where = component_str(n, alpha, beta);
    const SymFunc frob = module_frobenius(n, alpha, beta);
    auto traces = trace_table(n, alpha, beta, opts.cap);
    if (opts.inject_sign_bug)
        for (auto& [_, t] : traces)
            t = abs(t);
    for (const auto& lambda : enumerate_partitions(n)) {
        const Integer tab = multiplicity(lambda, alpha, beta, n);
        const Rational sym = frob.coeff(lambda);
        std::string brute;
        try {
            brute = multiplicity_from_traces(lambda, traces).get_str();
        } catch (const std::logic_error& e) {
            brute = std::string("error (") + e.what() + ")";
        }
        if (Rational(tab) != sym || tab.get_str() != brute)
            out.push_back(where + " lambda=" + lambda.str() + ": tableaux " + tab.get_str() + ", symbolic " +
                          sym.get_str() + ", brute " + brute);
    }
    return out;
}

Failures trace_case(int n, std::vector<int> alpha, std::vector<int> beta, const VerifyOptions& opts)
{
    Failures out;
    const SymFunc he = h_times_e(alpha, beta);
    for (const auto& [mu, t] : trace_table(n, alpha, beta, opts.cap)) {
        const Rational v = eval_xi(he, mu);
        if (v != Rational(t))
            out.push_back(component_str(n, alpha, beta) + " mu=" + mu.str() + ": trace " + t.get_str() +
                          ", h_alpha e_beta at eigenvalues " + v.get_str());
    }
    return out;
}

Failures row_fillings_case(const std::vector<int>& alpha, const Partition& mu)
{
    const Integer count = count_T(alpha, mu);
    const Rational v = eval_xi(SymFunc::term(Basis::h, alpha), mu);
    if (Rational(count) == v)
        return {};
    return {"alpha=" + vec_str(alpha) + " mu=" + mu.str() + ": fillings " + count.get_str() + ", h_alpha " +
            v.get_str()};
}

Failures signed_fillings_case(const std::vector<int>& beta, const Partition& mu)
{
    const Integer sum = signed_sum_Tbar(beta, mu);
    const Rational v = eval_xi(SymFunc::term(Basis::e, beta), mu);
    if (Rational(sum) == v)
        return {};
    return {"beta=" + vec_str(beta) + " mu=" + mu.str() + ": signed fillings " + sum.get_str() + ", e_beta " +
            v.get_str()};
}

std::vector<int> multiplicities(const std::vector<MultisetPartition::Part>& parts, bool odd)
{
    std::vector<int> out;
    for (const auto& [s, k] : parts)
        if (s.odd() == odd)
            out.push_back(k);
    return out;
}

Failures grouped_case(std::vector<int> alpha, std::vector<int> beta, const Partition& mu)
{
    Failures out;
    const auto grouped = mixed_fillings_by_msp(alpha, beta, mu);
    const DegreeVector content{alpha, beta};
    for (const auto& pi : enumerate_multiset_partitions(content, mu.size(), false)) {
        auto it = grouped.find(pi);
        const Integer got = it == grouped.end() ? Integer(0) : it->second;
        const Integer want = evalhet_sum(multiplicities(pi.parts(), false), multiplicities(pi.parts(), true), mu);
        if (got != want)
            out.push_back("alpha=" + vec_str(alpha) + " beta=" + vec_str(beta) + " mu=" + mu.str() +
                          " pi=" + pi.str() + ": grouped " + got.get_str() + ", labelled fillings " + want.get_str());
    }
    return out;
}

Failures evalhet_case(const Partition& lambda, const Partition& tau, const Partition& mu)
{
    const Integer sum = evalhet_sum(lambda.parts(), tau.parts(), mu);
    std::vector<int> h_index = lambda.parts();
    h_index.push_back(mu.size() - lambda.size() - tau.size());
    const Rational v = hall_inner(h_times_e(h_index, tau.parts()), SymFunc::term(Basis::p, mu.parts()));
    if (Rational(sum) == v)
        return {};
    return {"lambda=" + lambda.str() + " tau=" + tau.str() + " mu=" + mu.str() + ": fillings " + sum.get_str() +
            ", scalar product " + v.get_str()};
}

Failures plethysm_case(int n, std::vector<int> a)
{
    Failures out;
    for (const auto& lambda : enumerate_partitions(n)) {
        const Integer ple = plethysm_multiplicity(a, lambda, n);
        const Integer tab = multiplicity(lambda, a, {}, n);
        if (ple != tab)
            out.push_back("n=" + std::to_string(n) + " a=" + vec_str(a) + " lambda=" + lambda.str() +
                          ": plethysm " + ple.get_str() + ", tableaux " + tab.get_str());
    }
    return out;
}

Failures reduction_case(RingDims dims, const Multiset& s)
{
    const std::string where = "n=" + std::to_string(dims.n) + " m=" + std::to_string(dims.m) +
                              " m'=" + std::to_string(dims.m_bar) + " S=" + s.str();
    const PExpression r = reduce_pS(s, dims.n);
    Failures out;
    if (r.max_part_size() > dims.n)
        out.push_back(where + ": normal form keeps a part of size " + std::to_string(r.max_part_size()));
    if (!(r.realize(dims) == power_sum(s, dims)))
        out.push_back(where + ": realized rewrite differs from p_S");
    return out;
}

Failures spanning_case(int n, std::vector<int> alpha, std::vector<int> beta, const VerifyOptions& opts)
{
    const SpanReport rep = verify_spanning(n, alpha, beta, opts.cap);
    if (rep.ok)
        return {};
    return {component_str(n, alpha, beta) + ": " + rep.message};
}

Failures duality_case(RingDims dims, int degree)
{
    Failures out;
    const std::string where = "n=" + std::to_string(dims.n) + " m=" + std::to_string(dims.m) +
                              " m'=" + std::to_string(dims.m_bar);
    const Alphabet alphabet{dims.m, dims.m_bar};
    const GenSeries e = series_E(dims, degree);
    const GenSeries p = series_P(dims, degree);
    if (!series_equal(e, series_exp_neg_P_neg(p, dims, degree)))
        out.push_back(where + ": E differs from exp(-P(-q,-z))");
    if (!series_equal(e, realize(expand_E(degree, alphabet), dims)))
        out.push_back(where + ": power sum expansion of E differs from the product");
    if (!series_equal(p, realize(expand_P(degree, alphabet), dims)))
        out.push_back(where + ": power sum expansion of P differs from the logarithm");
    return out;
}

Failures relations_case(RingDims dims, int max_size)
{
    const RelationsReport rep = check_relations(dims, max_size);
    Failures out;
    for (const auto& f : rep.failures)
        out.push_back("n=" + std::to_string(dims.n) + ": " + f);
    return out;
}

Failures stability_case(std::vector<int> alpha, std::vector<int> beta, const Partition& nu, const VerifyOptions& opts)
{
    const int k = nu.size();
    std::vector<std::pair<int, Integer>> values;
    for (int n = std::max(opts.stable_n_min, 4 * k); n <= opts.stable_n_max; ++n) {
        if (n - k < nu[0])
            continue;
        std::vector<int> parts{n - k};
        parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
        values.emplace_back(n, multiplicity(Partition(parts), alpha, beta, n));
    }
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].second != values[0].second)
            return {"alpha=" + vec_str(alpha) + " beta=" + vec_str(beta) + " nu=" + nu.str() + ": n=" +
                    std::to_string(values[0].first) + " gives " + values[0].second.get_str() + ", n=" +
                    std::to_string(values[i].first) + " gives " + values[i].second.get_str()};
    return {};
}

void for_each_component(int m_max, int m_bar_max, int degree_max,
                        const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f)
{
    for (int m = 0; m <= m_max; ++m)
        for (int mb = 0; mb <= m_bar_max; ++mb)
            for (const auto& alpha : bounded_vectors(m, degree_max)) {
                int used = 0;
                for (int a : alpha)
                    used += a;
                for (const auto& beta : bounded_vectors(mb, degree_max - used))
                    f(alpha, beta);
            }
}

} // namespace

bool VerifyReport::ok() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"triangle",  "trace",     "row-fillings", "signed-fillings",
                                                "grouped",   "evalhet",   "plethysm",     "reduction",
                                                "spanning",  "duality",   "relations",    "stability"};
    return names;
}

std::vector<std::vector<int>> bounded_vectors(int len, int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == len) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[i] = v;
            rec(i + 1, rem - v);
        }
        cur[i] = 0;
    };
    rec(0, total);
    return out;
}

std::vector<std::vector<int>> compositions_up_to(int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        out.push_back(cur);
        for (int v = 1; v <= rem; ++v) {
            cur.push_back(v);
            rec(rem - v);
            cur.pop_back();
        }
    };
    rec(total);
    return out;
}

VerifyReport run_verification(const VerifyOptions& opts)
{
    const auto& names = suite_names();
    for (const auto& s : opts.suites)
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw std::invalid_argument("unknown suite: " + s);
    auto wanted = [&](const std::string& s) {
        return opts.suites.empty() || std::find(opts.suites.begin(), opts.suites.end(), s) != opts.suites.end();
    };
    auto index_of = [&](const std::string& s) {
        return static_cast<int>(std::find(names.begin(), names.end(), s) - names.begin());
    };

    std::vector<Case> cases;
    auto add = [&](const std::string& suite, std::function<Failures()> run) {
        if (wanted(suite))
            cases.push_back({index_of(suite), std::move(run)});
    };

    for (int n = 1; n <= opts.n_max; ++n)
        for_each_component(opts.m_max, opts.m_bar_max, opts.degree_max,
                           [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
                               add("triangle", [=, &opts] { return triangle_case(n, alpha, beta, opts); });
                               add("trace", [=, &opts] { return trace_case(n, alpha, beta, opts); });
                           });

    for (int k = 1; k <= opts.k_max; ++k)
        for (const auto& mu : enumerate_partitions(k)) {
            for (const auto& c : compositions_up_to(opts.fill_degree_max)) {
                add("row-fillings", [=] { return row_fillings_case(c, mu); });
                add("signed-fillings", [=] { return signed_fillings_case(c, mu); });
            }
            for (int a = 0; a <= k; ++a)
                for (const auto& lambda : enumerate_partitions(a))
                    for (int b = 0; a + b <= k; ++b)
                        for (const auto& tau : enumerate_partitions(b))
                            add("evalhet", [=] { return evalhet_case(lambda, tau, mu); });
        }

    for (int k = 1; k <= std::min(opts.k_max, 5); ++k)
        for (const auto& mu : enumerate_partitions(k))
            for_each_component(std::min(opts.m_max, 2), std::min(opts.m_bar_max, 2), std::min(opts.degree_max, 4),
                               [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
                                   add("grouped", [=] { return grouped_case(alpha, beta, mu); });
                               });

    for (int n = 1; n <= opts.n_max; ++n)
        for (const auto& a : compositions_up_to(opts.degree_max))
            add("plethysm", [=] { return plethysm_case(n, a); });

    for (int n = 1; n <= opts.inv_n_max; ++n)
        for (int m = 0; m <= opts.m_max; ++m)
            for (int mb = 0; mb <= opts.m_bar_max; ++mb) {
                const RingDims dims{n, m, mb};
                for (const auto& s : enumerate_multisets({m, mb}, n + 1, n + 2))
                    add("reduction", [=] { return reduction_case(dims, s); });
                add("duality", [=] { return duality_case(dims, opts.degree_max); });
                add("relations", [=] { return relations_case(dims, 3); });
            }

    for (int n = 1; n <= opts.inv_n_max; ++n)
        for_each_component(opts.m_max, opts.m_bar_max, opts.degree_max,
                           [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
                               add("spanning", [=, &opts] { return spanning_case(n, alpha, beta, opts); });
                           });

    for (int k = 0; 4 * k <= opts.stable_n_max; ++k)
        for (const auto& nu : enumerate_partitions(k))
            for_each_component(opts.m_max, opts.m_bar_max, opts.stable_degree_max,
                               [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
                                   add("stability", [=, &opts] { return stability_case(alpha, beta, nu, opts); });
                               });

    std::vector<Failures> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                results[i] = cases[i].run();
            } catch (const std::exception& e) {
                results[i] = {std::string("exception: ") + e.what()};
            }
        }
    };
    const int jobs = std::max(1, opts.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    VerifyReport report;
    for (const auto& name : names)
        if (wanted(name))
            report.suites.push_back({name, 0, 0, {}});
    auto find_suite = [&](int idx) -> SuiteResult& {
        return *std::find_if(report.suites.begin(), report.suites.end(),
                             [&](const SuiteResult& s) { return s.name == names[idx]; });
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        SuiteResult& s = find_suite(cases[i].suite);
        ++s.cases;
        if (!results[i].empty()) {
            ++s.failed;
            for (const auto& f : results[i])
                if (s.failures.size() < kKeptFailures)
                    s.failures.push_back(f);
        }
    }
    return report;
}

} // namespace mtab
