#include "mtab/superpoly.hpp"

#include "mtab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mtab {

int sort_with_sign(std::vector<int>& vars)
{
    // insertion sort, counting transpositions
    int swaps = 0;
    for (std::size_t i = 1; i < vars.size(); ++i) {
        for (std::size_t j = i; j > 0 && vars[j - 1] > vars[j]; --j) {
            std::swap(vars[j - 1], vars[j]);
            ++swaps;
        }
    }
    for (std::size_t i = 1; i < vars.size(); ++i)
        if (vars[i] == vars[i - 1])
            return 0;
    return swaps % 2 ? -1 : 1;
}

// ---------------------------------------------------------- SuperPolynomial

SuperPolynomial::SuperPolynomial(RingDims dims) : dims_(dims)
{
    if (dims.n < 0 || dims.m < 0 || dims.m_bar < 0)
        throw std::invalid_argument("ring dimensions must be non-negative");
}

SuperPolynomial SuperPolynomial::one(RingDims dims)
{
    return monomial(dims, SuperMonomial{std::vector<int>(dims.n * dims.m, 0), {}});
}

SuperPolynomial SuperPolynomial::x(RingDims dims, int i, int j)
{
    if (i < 1 || i > dims.n || j < 1 || j > dims.m)
        throw std::out_of_range("x variable index out of range");
    SuperMonomial mono{std::vector<int>(dims.n * dims.m, 0), {}};
    mono.x_exp[(i - 1) * dims.m + (j - 1)] = 1;
    return monomial(dims, std::move(mono));
}

SuperPolynomial SuperPolynomial::theta(RingDims dims, int i, int j)
{
    if (i < 1 || i > dims.n || j < 1 || j > dims.m_bar)
        throw std::out_of_range("theta variable index out of range");
    return monomial(dims, SuperMonomial{std::vector<int>(dims.n * dims.m, 0), {(i - 1) * dims.m_bar + (j - 1)}});
}

SuperPolynomial SuperPolynomial::monomial(RingDims dims, SuperMonomial mono, const Rational& c)
{
    SuperPolynomial p(dims);
    if (static_cast<int>(mono.x_exp.size()) != dims.n * dims.m)
        throw std::invalid_argument("monomial does not match the ring dimensions");
    int sign = sort_with_sign(mono.theta);
    if (sign != 0)
        p.add_term(mono, c * sign);
    return p;
}

Rational SuperPolynomial::coeff(const SuperMonomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const SuperMonomial& mono, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o)
{
    if (!(dims_ == o.dims_))
        throw std::invalid_argument("polynomials live in different rings");
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o)
{
    if (!(dims_ == o.dims_))
        throw std::invalid_argument("polynomials live in different rings");
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

// Sign of concatenating two increasing theta lists, 0 on a collision.
static int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out)
{
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        } else {
            return 0;
        }
    }
    return inversions % 2 ? -1 : 1;
}

SuperPolynomial SuperPolynomial::multiply(const SuperPolynomial& o) const
{
    if (!(dims_ == o.dims_))
        throw std::invalid_argument("polynomials live in different rings");
    SuperPolynomial out(dims_);
    SuperMonomial prod;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            int sign = merge_sign(a.theta, b.theta, prod.theta);
            if (sign == 0)
                continue;
            prod.x_exp = a.x_exp;
            for (std::size_t k = 0; k < prod.x_exp.size(); ++k)
                prod.x_exp[k] += b.x_exp[k];
            out.add_term(prod, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
        }
    }
    return out;
}

std::string SuperPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        std::vector<std::string> factors;
        for (int i = 0; i < dims_.n; ++i)
            for (int j = 0; j < dims_.m; ++j) {
                int e = mono.x_exp[i * dims_.m + j];
                if (e == 0)
                    continue;
                std::string f = "x_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
                if (e > 1)
                    f += "^" + std::to_string(e);
                factors.push_back(f);
            }
        for (int v : mono.theta)
            factors.push_back("t_{" + std::to_string(v / dims_.m_bar + 1) + "," + std::to_string(v % dims_.m_bar + 1) +
                              "'}");
        std::string body;
        for (std::size_t k = 0; k < factors.size(); ++k)
            body += (k ? "*" : "") + factors[k];
        if (body.empty())
            s += mag.get_str();
        else
            s += (mag != 1 ? mag.get_str() + "*" : "") + body;
        first = false;
    }
    return s;
}

// ----------------------------------------------------------------- action

Permutation permutation_of_type(const Partition& mu)
{
    Permutation sigma(mu.size());
    int start = 0;
    for (int k : mu.parts()) {
        for (int i = 0; i < k; ++i)
            sigma[start + i] = start + (i + 1) % k;
        start += k;
    }
    return sigma;
}

std::pair<int, SuperMonomial> act(const Permutation& sigma, const SuperMonomial& mono, RingDims dims)
{
    SuperMonomial out;
    out.x_exp.assign(mono.x_exp.size(), 0);
    for (int i = 0; i < dims.n; ++i)
        for (int j = 0; j < dims.m; ++j)
            out.x_exp[sigma[i] * dims.m + j] = mono.x_exp[i * dims.m + j];
    out.theta.reserve(mono.theta.size());
    for (int v : mono.theta)
        out.theta.push_back(sigma[v / dims.m_bar] * dims.m_bar + v % dims.m_bar);
    int sign = sort_with_sign(out.theta);
    return {sign, std::move(out)};
}

SuperPolynomial act(const Permutation& sigma, const SuperPolynomial& p)
{
    const RingDims dims = p.dims();
    if (static_cast<int>(sigma.size()) != dims.n)
        throw std::invalid_argument("permutation size does not match n");
    SuperPolynomial out(dims);
    for (const auto& [mono, c] : p.terms()) {
        auto [sign, image] = act(sigma, mono, dims);
        out.add_term(image, sign > 0 ? c : Rational(-c));
    }
    return out;
}

// ------------------------------------------------------ component / traces

Integer component_dimension(int n, const std::vector<int>& alpha, const std::vector<int>& beta)
{
    Integer dim = 1;
    for (int a : alpha) {
        if (a < 0)
            throw std::invalid_argument("negative degree");
        dim *= n == 0 ? Integer(a == 0 ? 1 : 0) : binomial(static_cast<unsigned>(n + a - 1), static_cast<unsigned>(a));
    }
    for (int b : beta) {
        if (b < 0)
            throw std::invalid_argument("negative degree");
        dim *= b > n ? Integer(0) : binomial(static_cast<unsigned>(n), static_cast<unsigned>(b));
    }
    return dim;
}

std::vector<SuperMonomial> component_basis(int n, const std::vector<int>& alpha, const std::vector<int>& beta,
                                           long long cap)
{
    const Integer dim = component_dimension(n, alpha, beta);
    if (dim > Integer(std::to_string(cap)))
        throw std::length_error("component dimension " + dim.get_str() + " exceeds the cap of " +
                                std::to_string(cap));
    const int m = static_cast<int>(alpha.size());
    const int mb = static_cast<int>(beta.size());

    std::vector<SuperMonomial> out;
    if (dim == 0)
        return out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    SuperMonomial cur{std::vector<int>(n * m, 0), {}};

    // theta columns: a beta_j-subset of rows per column
    std::function<void(int)> theta_rec;
    std::vector<int> chosen;
    std::function<void(int, int, int)> subset_rec = [&](int col, int next_row, int left) {
        if (left == 0) {
            theta_rec(col + 1);
            return;
        }
        for (int r = next_row; r <= n - left; ++r) {
            chosen.push_back(r * mb + col);
            subset_rec(col, r + 1, left - 1);
            chosen.pop_back();
        }
    };
    theta_rec = [&](int col) {
        if (col == mb) {
            SuperMonomial mono = cur;
            mono.theta = chosen;
            std::sort(mono.theta.begin(), mono.theta.end());
            out.push_back(std::move(mono));
            return;
        }
        subset_rec(col, 0, beta[col]);
    };

    // x columns: compositions of alpha_j into n rows
    std::function<void(int, int, int)> x_rec = [&](int col, int row, int left) {
        if (col == m) {
            theta_rec(0);
            return;
        }
        const int next_left = col + 1 < m ? alpha[col + 1] : 0;
        if (row == n - 1) {
            cur.x_exp[row * m + col] = left;
            x_rec(col + 1, 0, next_left);
            cur.x_exp[row * m + col] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur.x_exp[row * m + col] = e;
            x_rec(col, row + 1, left - e);
        }
        cur.x_exp[row * m + col] = 0;
    };
    x_rec(0, 0, m > 0 ? alpha[0] : 0);
    return out;
}

Integer trace_character(int n, const std::vector<int>& alpha, const std::vector<int>& beta, const Partition& mu,
                        long long cap)
{
    if (mu.size() != n)
        throw std::invalid_argument("trace_character: mu must be a partition of n");
    const RingDims dims{n, static_cast<int>(alpha.size()), static_cast<int>(beta.size())};
    const Permutation sigma = permutation_of_type(mu);
    long long trace = 0;
    for (const auto& mono : component_basis(n, alpha, beta, cap)) {
        auto [sign, image] = act(sigma, mono, dims);
        if (image == mono)
            trace += sign;
    }
    return Integer(std::to_string(trace));
}

std::map<Partition, Integer> trace_table(int n, const std::vector<int>& alpha, const std::vector<int>& beta,
                                         long long cap)
{
    const RingDims dims{n, static_cast<int>(alpha.size()), static_cast<int>(beta.size())};
    const auto basis = component_basis(n, alpha, beta, cap);
    std::map<Partition, Integer> out;
    for (const auto& mu : enumerate_partitions(n)) {
        const Permutation sigma = permutation_of_type(mu);
        long long trace = 0;
        for (const auto& mono : basis) {
            auto [sign, image] = act(sigma, mono, dims);
            if (image == mono)
                trace += sign;
        }
        out.emplace(mu, Integer(std::to_string(trace)));
    }
    return out;
}

Integer multiplicity_from_traces(const Partition& lambda, const std::map<Partition, Integer>& traces)
{
    Rational total = 0;
    for (const auto& mu : enumerate_partitions(lambda.size())) {
        auto it = traces.find(mu);
        if (it == traces.end())
            throw std::invalid_argument("multiplicity_from_traces: missing trace at " + mu.str());
        Integer chi = character(lambda, mu);
        if (chi != 0)
            total += Rational(chi * it->second) / Rational(z_mu(mu));
    }
    if (total.get_den() != 1 || total < 0)
        throw std::logic_error("character inner product is not a non-negative integer: " + total.get_str());
    return total.get_num();
}

Integer brute_multiplicity(int n, const Partition& lambda, const std::vector<int>& alpha,
                           const std::vector<int>& beta, long long cap)
{
    if (lambda.size() != n)
        throw std::invalid_argument("brute_multiplicity: lambda must be a partition of n");
    return multiplicity_from_traces(lambda, trace_table(n, alpha, beta, cap));
}

// ------------------------------------------------------ invariant families

static void check_letters(const Multiset& s, RingDims dims)
{
    if (s.max_unbarred() > dims.m || s.max_barred() > dims.m_bar)
        throw std::invalid_argument("multiset " + s.str() + " uses letters outside the ring");
}

SuperMonomial leading_monomial(const MultisetPartition& pi, RingDims dims)
{
    SuperMonomial mono{std::vector<int>(dims.n * dims.m, 0), {}};
    int row = 0;
    for (const auto& s : pi.flat()) {
        check_letters(s, dims);
        if (row >= dims.n)
            throw std::invalid_argument("more parts than rows");
        for (int j = 1; j <= s.max_unbarred(); ++j)
            mono.x_exp[row * dims.m + (j - 1)] = s.count(j);
        for (int b = 1; b <= s.max_barred(); ++b)
            if (s.has_barred(b))
                mono.theta.push_back(row * dims.m_bar + (b - 1));
        ++row;
    }
    return mono;
}

SuperPolynomial monomial_sym(const MultisetPartition& pi, RingDims dims)
{
    SuperPolynomial out(dims);
    const int len = pi.length();
    if (len > dims.n)
        return out;
    const SuperMonomial base = leading_monomial(pi, dims);

    // Orbit under S_n = images of the rows 0..len-1 under injections into [n].
    std::map<SuperMonomial, std::set<int>> orbit;
    Permutation sigma(dims.n);
    std::vector<bool> used(dims.n, false);
    std::function<void(int)> rec = [&](int row) {
        if (row == len) {
            // complete to a permutation on the unused rows
            int next = 0;
            for (int r = len; r < dims.n; ++r) {
                while (used[next])
                    ++next;
                sigma[r] = next++;
            }
            auto [sign, image] = act(sigma, base, dims);
            orbit[image].insert(sign);
            return;
        }
        for (int target = 0; target < dims.n; ++target) {
            if (used[target])
                continue;
            used[target] = true;
            sigma[row] = target;
            rec(row + 1);
            used[target] = false;
        }
    };
    rec(0);
    for (const auto& [_, signs] : orbit)
        if (signs.size() > 1)
            return out;
    for (const auto& [mono, signs] : orbit)
        out.add_term(mono, *signs.begin());
    return out;
}

SuperPolynomial power_sum(const Multiset& s, RingDims dims)
{
    check_letters(s, dims);
    SuperPolynomial out(dims);
    for (int r = 0; r < dims.n; ++r) {
        SuperMonomial mono{std::vector<int>(dims.n * dims.m, 0), {}};
        for (int j = 1; j <= s.max_unbarred(); ++j)
            mono.x_exp[r * dims.m + (j - 1)] = s.count(j);
        for (int b = 1; b <= s.max_barred(); ++b)
            if (s.has_barred(b))
                mono.theta.push_back(r * dims.m_bar + (b - 1));
        out.add_term(mono, 1);
    }
    return out;
}

SuperPolynomial power_prod(const MultisetPartition& pi, RingDims dims)
{
    SuperPolynomial out = SuperPolynomial::one(dims);
    for (const auto& s : pi.flat())
        out = out * power_sum(s, dims);
    return out;
}

bool is_invariant(const SuperPolynomial& p)
{
    const int n = p.dims().n;
    if (n <= 1)
        return true;
    Permutation swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < n; ++i)
        cycle[i] = (i + 1) % n;
    return act(swap, p) == p && act(cycle, p) == p;
}

} // namespace mtab
