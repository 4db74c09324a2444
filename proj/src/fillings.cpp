#include "mtab/fillings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mtab {

DegreeVector RowFilling::content() const
{
    std::vector<Multiset> cells;
    for (int r = 0; r < mu.length(); ++r)
        if (!row_labels[r].empty())
            cells.insert(cells.end(), mu[r], row_labels[r]);
    return MultisetPartition(cells).content();
}

int RowFilling::weight() const
{
    int exponent = 0;
    for (int r = 0; r < mu.length(); ++r)
        if (row_labels[r].odd())
            exponent += mu[r] + 1;
    return exponent % 2 ? -1 : 1;
}

MultisetPartition RowFilling::msp() const
{
    std::vector<Multiset> cells;
    for (int r = 0; r < mu.length(); ++r)
        if (!row_labels[r].empty())
            cells.insert(cells.end(), mu[r], row_labels[r]);
    return MultisetPartition(cells);
}

namespace {

void check_nonneg(const std::vector<int>& v)
{
    for (int x : v)
        if (x < 0)
            throw std::invalid_argument("degrees must be non-negative");
}

// For each letter independently, choose how many copies go into each row's
// label subject to sum_r mu_r * c_r = total. `max_per_row` caps c_r (1 for
// barred letters).
void letter_placements(int total, const Partition& mu, int max_per_row,
                       const std::function<void(const std::vector<int>&)>& emit)
{
    std::vector<int> c(mu.length(), 0);
    std::function<void(int, int)> rec = [&](int row, int rem) {
        if (row == mu.length()) {
            if (rem == 0)
                emit(c);
            return;
        }
        for (int k = 0; k <= max_per_row && k * mu[row] <= rem; ++k) {
            c[row] = k;
            rec(row + 1, rem - k * mu[row]);
        }
        c[row] = 0;
    };
    rec(0, total);
}

std::vector<std::vector<std::vector<int>>> placements_per_letter(const std::vector<int>& degrees, const Partition& mu,
                                                                 int max_per_row)
{
    std::vector<std::vector<std::vector<int>>> out;
    for (int d : degrees) {
        std::vector<std::vector<int>> opts;
        letter_placements(d, mu, max_per_row, [&](const std::vector<int>& c) { opts.push_back(c); });
        out.push_back(std::move(opts));
    }
    return out;
}

// Cartesian product over letters, assembled into row labels.
std::vector<RowFilling> assemble(const std::vector<std::vector<std::vector<int>>>& per_letter, const Partition& mu,
                                 bool barred)
{
    std::vector<RowFilling> out;
    std::vector<std::size_t> choice(per_letter.size(), 0);
    for (const auto& opts : per_letter)
        if (opts.empty())
            return out;
    while (true) {
        RowFilling f{mu, std::vector<Multiset>(mu.length())};
        for (int r = 0; r < mu.length(); ++r) {
            std::vector<int> counts;
            std::uint64_t mask = 0;
            for (std::size_t l = 0; l < per_letter.size(); ++l) {
                int k = per_letter[l][choice[l]][r];
                if (barred) {
                    if (k)
                        mask |= std::uint64_t{1} << l;
                } else {
                    counts.resize(per_letter.size(), 0);
                    counts[l] = k;
                }
            }
            f.row_labels[r] = Multiset(counts, mask);
        }
        out.push_back(std::move(f));
        std::size_t l = 0;
        while (l < choice.size() && ++choice[l] == per_letter[l].size())
            choice[l++] = 0;
        if (l == choice.size())
            break;
    }
    return out;
}

} // namespace

std::vector<RowFilling> enumerate_T(const std::vector<int>& alpha, const Partition& mu)
{
    check_nonneg(alpha);
    int cap = 0;
    for (int a : alpha)
        cap = std::max(cap, a);
    return assemble(placements_per_letter(alpha, mu, cap), mu, false);
}

Integer count_T(const std::vector<int>& alpha, const Partition& mu)
{
    return Integer(static_cast<unsigned long>(enumerate_T(alpha, mu).size()));
}

std::vector<RowFilling> enumerate_Tbar(const std::vector<int>& beta, const Partition& mu)
{
    check_nonneg(beta);
    if (beta.size() > 64)
        throw std::invalid_argument("at most 64 barred letters are supported");
    return assemble(placements_per_letter(beta, mu, 1), mu, true);
}

Integer signed_sum_Tbar(const std::vector<int>& beta, const Partition& mu)
{
    Integer s = 0;
    for (const auto& f : enumerate_Tbar(beta, mu))
        s += f.weight();
    return s;
}

std::map<MultisetPartition, Integer> mixed_fillings_by_msp(const std::vector<int>& alpha,
                                                           const std::vector<int>& beta, const Partition& mu)
{
    std::map<MultisetPartition, Integer> out;
    const auto ts = enumerate_T(alpha, mu);
    const auto tbars = enumerate_Tbar(beta, mu);
    for (const auto& t : ts)
        for (const auto& tb : tbars) {
            RowFilling f{mu, std::vector<Multiset>(mu.length())};
            for (int r = 0; r < mu.length(); ++r)
                f.row_labels[r] = t.row_labels[r] + tb.row_labels[r];
            out[f.msp()] += f.weight();
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Integer evalhet_sum(const std::vector<int>& lambda, const std::vector<int>& tau, const Partition& mu)
{
    check_nonneg(lambda);
    check_nonneg(tau);
    // Labels 0..|lambda|-1 unprimed, then the primed ones; -1 marks an empty row.
    std::vector<int> need = lambda;
    need.insert(need.end(), tau.begin(), tau.end());
    const std::size_t primed_from = lambda.size();

    Integer total = 0;
    std::function<void(int, int)> rec = [&](int row, int sign_exp) {
        if (row == mu.length()) {
            if (std::all_of(need.begin(), need.end(), [](int v) { return v == 0; }))
                total += sign_exp % 2 ? -1 : 1;
            return;
        }
        rec(row + 1, sign_exp);
        for (std::size_t l = 0; l < need.size(); ++l) {
            if (need[l] < mu[row])
                continue;
            need[l] -= mu[row];
            rec(row + 1, sign_exp + (l >= primed_from ? mu[row] + 1 : 0));
            need[l] += mu[row];
        }
    };
    rec(0, 0);
    return total;
}

std::string render_text(const RowFilling& f)
{
    std::size_t width = 1;
    for (const auto& l : f.row_labels)
        width = std::max(width, l.compact().size());
    std::string out;
    for (int r = f.mu.length() - 1; r >= 0; --r) {
        std::string cell = f.row_labels[r].empty() ? "." : f.row_labels[r].compact();
        std::string line;
        for (int c = 0; c < f.mu[r]; ++c) {
            if (c)
                line += ' ';
            line += cell;
            if (c + 1 < f.mu[r])
                line.append(width - cell.size(), ' ');
        }
        out += line + "\n";
    }
    return out;
}

} // namespace mtab
