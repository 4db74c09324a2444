#include "mtab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace mtab {

char basis_char(Basis b)
{
    switch (b) {
    case Basis::p: return 'p';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::s: return 's';
    }
    return '?';
}

Basis parse_basis(char c)
{
    switch (c) {
    case 'p': return Basis::p;
    case 'h': return Basis::h;
    case 'e': return Basis::e;
    case 's': return Basis::s;
    default: throw std::invalid_argument(std::string("unknown basis '") + c + "'");
    }
}

// ------------------------------------------------------------------ SymFunc

SymFunc SymFunc::term(Basis b, const std::vector<int>& index, const Rational& c)
{
    SymFunc f(b);
    if (std::any_of(index.begin(), index.end(), [](int v) { return v < 0; }))
        return f;
    if (b == Basis::s) {
        // Schur indices are partitions; the zero-dropping shorthand does not apply.
        std::vector<int> parts = index;
        std::erase(parts, 0);
        f.add_term(Partition(parts), c);
    } else {
        f.add_term(Partition::from_unsorted(index), c);
    }
    return f;
}

Rational SymFunc::coeff(const Partition& index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& index, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        basis_ = o.basis_;
    if (basis_ != o.basis_)
        throw std::invalid_argument("cannot add symmetric functions in different bases");
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o)
{
    SymFunc neg = o;
    neg *= -1;
    return *this += neg;
}

SymFunc& SymFunc::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

SymFunc SymFunc::multiply(const SymFunc& o, int max_degree) const
{
    if (is_zero() || o.is_zero())
        return SymFunc(basis_);
    if (basis_ != o.basis_)
        throw std::invalid_argument("cannot multiply symmetric functions in different bases");
    if (basis_ == Basis::s)
        throw std::invalid_argument("Schur products are not supported; convert to p first");
    SymFunc out(basis_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            if (max_degree >= 0 && a.size() + b.size() > max_degree)
                continue;
            std::vector<int> parts = a.parts();
            parts.insert(parts.end(), b.parts().begin(), b.parts().end());
            out.add_term(Partition::from_unsorted(std::move(parts)), ca * cb);
        }
    }
    return out;
}

SymFunc SymFunc::degree_part(int d) const
{
    SymFunc out(basis_);
    for (const auto& [k, c] : terms_)
        if (k.size() == d)
            out.add_term(k, c);
    return out;
}

std::string SymFunc::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1)
            s += mag.get_str() + "*";
        s += basis_char(basis_);
        s += k.str();
        first = false;
    }
    return s;
}

// --------------------------------------------------------------- characters

namespace {

struct CharacterCache {
    std::mutex mu;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> values;
};

CharacterCache& character_cache()
{
    static CharacterCache cache;
    return cache;
}

// lambda given by parts, mu consumed from index `pos` onward.
Integer murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos)
{
    if (pos == mu.size())
        return lambda.empty() ? 1 : 0;

    std::pair key{lambda, std::vector<int>(mu.begin() + static_cast<long>(pos), mu.end())};
    auto& cache = character_cache();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.values.find(key); it != cache.values.end())
            return it->second;
    }

    const int k = mu[pos];
    const int len = static_cast<int>(lambda.size());
    // First-column hook lengths (a beta-set); removing a k-ribbon moves one
    // bead from b to b-k, with sign given by the beads jumped over.
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i)
        beta[i] = lambda[i] + (len - 1 - i);

    Integer total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[i])
                ++jumped;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> next;
        for (int j = 0; j < len; ++j) {
            int part = nb[j] - (len - 1 - j);
            if (part > 0)
                next.push_back(part);
        }
        Integer sub = murnaghan_nakayama(next, mu, pos + 1);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }

    std::lock_guard lock(cache.mu);
    cache.values.emplace(std::move(key), total);
    return total;
}

struct NewtonCache {
    std::mutex mu;
    std::vector<SymFunc> h{SymFunc::one()};
    std::vector<SymFunc> e{SymFunc::one()};
};

NewtonCache& newton_cache()
{
    static NewtonCache cache;
    return cache;
}

// h_k or e_k in the p basis: k h_k = sum_r p_r h_{k-r}, k e_k = sum_r (-1)^{r-1} p_r e_{k-r}.
SymFunc generator_in_p(Basis b, int k)
{
    auto& cache = newton_cache();
    std::lock_guard lock(cache.mu);
    auto& table = b == Basis::h ? cache.h : cache.e;
    while (static_cast<int>(table.size()) <= k) {
        const int j = static_cast<int>(table.size());
        SymFunc acc(Basis::p);
        for (int r = 1; r <= j; ++r) {
            Rational sign = (b == Basis::e && r % 2 == 0) ? -1 : 1;
            acc += SymFunc::term(Basis::p, {r}, sign).multiply(table[j - r]);
        }
        acc *= Rational(1, j);
        table.push_back(std::move(acc));
    }
    return table[k];
}

} // namespace

Integer character(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character: |lambda| != |mu|");
    return murnaghan_nakayama(lambda.parts(), mu.parts(), 0);
}

// ------------------------------------------------------------- conversions

SymFunc newton_convert(const SymFunc& f)
{
    if (f.basis() == Basis::p)
        return f;
    if (f.basis() == Basis::s)
        throw std::invalid_argument("newton_convert expects the h or e basis");
    SymFunc out(Basis::p);
    for (const auto& [idx, c] : f.terms()) {
        SymFunc prod = SymFunc::one();
        for (int part : idx.parts())
            prod = prod.multiply(generator_in_p(f.basis(), part));
        out += prod * c;
    }
    return out;
}

SymFunc schur_to_p(const Partition& lambda)
{
    SymFunc out(Basis::p);
    for (const auto& mu : enumerate_partitions(lambda.size()))
        out.add_term(mu, Rational(character(lambda, mu)) / Rational(z_mu(mu)));
    return out;
}

SymFunc to_p(const SymFunc& f)
{
    if (f.basis() != Basis::s)
        return newton_convert(f);
    SymFunc out(Basis::p);
    for (const auto& [lambda, c] : f.terms())
        out += schur_to_p(lambda) * c;
    return out;
}

SymFunc p_to_schur(const SymFunc& f)
{
    if (f.basis() != Basis::p)
        throw std::invalid_argument("p_to_schur expects the p basis");
    SymFunc out(Basis::s);
    for (const auto& [mu, c] : f.terms())
        for (const auto& lambda : enumerate_partitions(mu.size()))
            out.add_term(lambda, c * Rational(character(lambda, mu)));
    return out;
}

Rational hall_inner(const SymFunc& f, const SymFunc& g)
{
    const SymFunc fp = to_p(f);
    const SymFunc gp = to_p(g);
    Rational total = 0;
    for (const auto& [mu, c] : fp.terms()) {
        Rational d = gp.coeff(mu);
        if (d != 0)
            total += c * d * Rational(z_mu(mu));
    }
    return total;
}

// ------------------------------------------------------------------- Pieri

static Partition conjugate(const Partition& lambda)
{
    std::vector<int> out;
    for (int j = 1; j <= lambda[0]; ++j) {
        int c = 0;
        for (int p : lambda.parts())
            if (p >= j)
                ++c;
        out.push_back(c);
    }
    return Partition(out);
}

static std::vector<Partition> horizontal_strips(int r, const Partition& lambda)
{
    std::vector<Partition> out;
    const int len = lambda.length();
    std::vector<int> cur(len + 1, 0);
    std::function<void(int, int)> rec = [&](int row, int rem) {
        const int base = lambda[row];
        const int upper = row == 0 ? base + rem : lambda[row - 1];
        if (row == len) {
            if (base + rem > upper)
                return;
            cur[row] = base + rem;
            std::vector<int> parts(cur.begin(), cur.end());
            std::erase(parts, 0);
            out.emplace_back(parts);
            return;
        }
        for (int add = std::min(rem, upper - base); add >= 0; --add) {
            cur[row] = base + add;
            rec(row + 1, rem - add);
        }
    };
    rec(0, r);
    return out;
}

std::vector<Partition> pieri(StripKind kind, int r, const Partition& lambda)
{
    if (r < 0)
        throw std::invalid_argument("pieri: r must be non-negative");
    std::vector<Partition> out;
    if (kind == StripKind::horizontal) {
        out = horizontal_strips(r, lambda);
    } else {
        for (const auto& mu : horizontal_strips(r, conjugate(lambda)))
            out.push_back(conjugate(mu));
    }
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
    return out;
}

// -------------------------------------------------------------- evaluation

Integer power_sum_at_xi(int k, const Partition& mu)
{
    Integer s = 0;
    for (int part : mu.parts())
        if (k % part == 0)
            s += part;
    return s;
}

Rational eval_xi(const SymFunc& f, const Partition& mu)
{
    Rational total = 0;
    const SymFunc fp = to_p(f);
    for (const auto& [idx, c] : fp.terms()) {
        Integer v = 1;
        for (int k : idx.parts())
            v *= power_sum_at_xi(k, mu);
        total += c * Rational(v);
    }
    return total;
}

SymFunc frobenius_from_values(const std::map<Partition, Rational>& values, int n)
{
    SymFunc out(Basis::p);
    for (const auto& mu : enumerate_partitions(n)) {
        auto it = values.find(mu);
        if (it == values.end())
            throw std::invalid_argument("frobenius_from_values: no value for " + mu.str());
        out.add_term(mu, it->second / Rational(z_mu(mu)));
    }
    return out;
}

SymFunc module_frobenius(int n, const std::vector<int>& alpha, const std::vector<int>& beta)
{
    const SymFunc f = to_p(SymFunc::term(Basis::h, alpha)).multiply(to_p(SymFunc::term(Basis::e, beta)));
    std::map<Partition, Rational> values;
    for (const auto& mu : enumerate_partitions(n))
        values.emplace(mu, eval_xi(f, mu));
    return p_to_schur(frobenius_from_values(values, n));
}

Integer plethysm_multiplicity(const std::vector<int>& a, const Partition& lambda, int n)
{
    if (lambda.size() != n)
        throw std::invalid_argument("plethysm_multiplicity: |lambda| != n");
    int d = 0;
    for (int v : a) {
        if (v < 0)
            throw std::invalid_argument("plethysm_multiplicity: negative degree");
        d += v;
    }

    // p_k[1 + h_1 + h_2 + ...] = 1 + sum_j h_j[p_k], truncated at degree d.
    auto pk_of_argument = [d](int k) {
        SymFunc out = SymFunc::one();
        for (int j = 1; k * j <= d; ++j) {
            const SymFunc hj = generator_in_p(Basis::h, j);
            for (const auto& [nu, c] : hj.terms()) {
                std::vector<int> scaled = nu.parts();
                for (int& v : scaled)
                    v *= k;
                out.add_term(Partition(scaled), c);
            }
        }
        return out;
    };

    SymFunc plethysm(Basis::p);
    for (const auto& mu : enumerate_partitions(n)) {
        Integer chi = character(lambda, mu);
        if (chi == 0)
            continue;
        SymFunc prod = SymFunc::one();
        for (int k : mu.parts())
            prod = prod.multiply(pk_of_argument(k), d);
        plethysm += prod * (Rational(chi) / Rational(z_mu(mu)));
    }

    Rational r = hall_inner(SymFunc::term(Basis::h, a), plethysm.degree_part(d));
    if (r.get_den() != 1)
        throw std::logic_error("plethysm multiplicity is not an integer: " + r.get_str());
    return r.get_num();
}

} // namespace mtab
