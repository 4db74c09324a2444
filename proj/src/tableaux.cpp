#include "mtab/tableaux.hpp"

#include "mtab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace mtab {

DegreeVector MultisetTableau::content() const
{
    std::vector<Multiset> cells;
    for (const auto& row : rows)
        for (const auto& c : row)
            if (!c.empty())
                cells.push_back(c);
    return MultisetPartition(cells).content();
}

ValidationReport validate(const MultisetTableau& t, const Alphabet* alphabet)
{
    const auto& shape = t.shape;
    if (static_cast<int>(t.rows.size()) != shape.length())
        throw std::invalid_argument("tableau rows do not match the shape");
    for (int r = 0; r < shape.length(); ++r)
        if (static_cast<int>(t.rows[r].size()) != shape[r])
            throw std::invalid_argument("tableau row " + std::to_string(r + 1) + " does not match the shape");

    auto fail = [](int condition, std::vector<Cell> cells, std::string msg) {
        return ValidationReport{false, condition, std::move(cells), std::move(msg)};
    };

    if (alphabet) {
        for (int r = 0; r < shape.length(); ++r)
            for (int c = 0; c < shape[r]; ++c) {
                const auto& s = t.at(r, c);
                if (s.max_unbarred() > alphabet->m || s.max_barred() > alphabet->m_bar)
                    return fail(1, {{r + 1, c + 1}}, "label " + s.str() + " uses a letter outside the alphabet");
            }
    }

    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            const auto& s = t.at(r, c);
            if (c + 1 < shape[r] && compare_multisets(s, t.at(r, c + 1)) > 0)
                return fail(2, {{r + 1, c + 1}, {r + 1, c + 2}}, "row is not weakly increasing");
            if (r + 1 < shape.length() && c < shape[r + 1] && compare_multisets(s, t.at(r + 1, c)) > 0)
                return fail(2, {{r + 1, c + 1}, {r + 2, c + 1}}, "column is not weakly increasing");
        }

    // Even labels: no repeat within a column.
    for (int c = 0; c < shape[0]; ++c)
        for (int r1 = 0; r1 < shape.length() && c < shape[r1]; ++r1)
            for (int r2 = r1 + 1; r2 < shape.length() && c < shape[r2]; ++r2)
                if (!t.at(r1, c).odd() && t.at(r1, c) == t.at(r2, c))
                    return fail(3, {{r1 + 1, c + 1}, {r2 + 1, c + 1}},
                                "label " + t.at(r1, c).str() + " with even barred parity repeats in a column");

    // Odd labels: no repeat within a row.
    for (int r = 0; r < shape.length(); ++r)
        for (int c1 = 0; c1 < shape[r]; ++c1)
            for (int c2 = c1 + 1; c2 < shape[r]; ++c2)
                if (t.at(r, c1).odd() && t.at(r, c1) == t.at(r, c2))
                    return fail(4, {{r + 1, c1 + 1}, {r + 1, c2 + 1}},
                                "label " + t.at(r, c1).str() + " with odd barred parity repeats in a row");

    return {};
}

namespace {

struct LabelStep {
    Multiset label;
    int count;
    StripKind kind;
};

// Blank cells first, then the distinct parts of pi in increasing order.
std::vector<LabelStep> insertion_steps(const MultisetPartition& pi, int n)
{
    std::vector<LabelStep> steps;
    steps.push_back({Multiset{}, n - pi.length(), StripKind::horizontal});
    for (const auto& [s, k] : pi.parts())
        steps.push_back({s, k, s.odd() ? StripKind::vertical : StripKind::horizontal});
    return steps;
}

bool contained_in(const Partition& mu, const Partition& shape)
{
    if (mu.length() > shape.length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > shape[i])
            return false;
    return true;
}

void check_size(const Partition& shape, int n)
{
    if (shape.size() != n)
        throw std::invalid_argument("shape " + shape.str() + " is not a partition of " + std::to_string(n));
}

} // namespace

std::vector<MultisetTableau> enumerate_with_entries(const Partition& shape, const MultisetPartition& pi, int n)
{
    check_size(shape, n);
    std::vector<MultisetTableau> out;
    if (pi.length() > n)
        return out;
    const auto steps = insertion_steps(pi, n);

    std::vector<std::vector<Multiset>> grid(shape.length());
    for (int r = 0; r < shape.length(); ++r)
        grid[r].resize(shape[r]);

    std::function<void(std::size_t, const Partition&)> rec = [&](std::size_t step, const Partition& cur) {
        if (step == steps.size()) {
            out.push_back({shape, grid});
            return;
        }
        const auto& st = steps[step];
        for (const auto& next : pieri(st.kind, st.count, cur)) {
            if (!contained_in(next, shape))
                continue;
            for (int r = 0; r < next.length(); ++r)
                for (int c = cur[r]; c < next[r]; ++c)
                    grid[r][c] = st.label;
            rec(step + 1, next);
        }
    };
    rec(0, Partition{});
    return out;
}

Integer count_with_entry_multiset(const Partition& shape, const MultisetPartition& pi, int n)
{
    check_size(shape, n);
    if (pi.length() > n)
        return 0;
    std::map<Partition, Integer> layer{{Partition{}, 1}};
    for (const auto& st : insertion_steps(pi, n)) {
        std::map<Partition, Integer> next_layer;
        for (const auto& [mu, ways] : layer)
            for (const auto& next : pieri(st.kind, st.count, mu))
                if (contained_in(next, shape))
                    next_layer[next] += ways;
        layer = std::move(next_layer);
    }
    auto it = layer.find(shape);
    return it == layer.end() ? Integer(0) : it->second;
}

std::vector<MultisetTableau> enumerate_tableaux(const Partition& shape, const DegreeVector& content)
{
    const int n = shape.size();
    std::vector<MultisetTableau> out;
    for (const auto& pi : enumerate_multiset_partitions(content, n, false)) {
        auto part = enumerate_with_entries(shape, pi, n);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

Integer multiplicity(const Partition& lambda, const std::vector<int>& alpha, const std::vector<int>& beta, int n)
{
    check_size(lambda, n);
    Integer total = 0;
    for (const auto& pi : enumerate_multiset_partitions({alpha, beta}, n, false))
        total += count_with_entry_multiset(lambda, pi, n);
    return total;
}

std::string render_text(const MultisetTableau& t)
{
    std::size_t width = 1;
    for (const auto& row : t.rows)
        for (const auto& c : row)
            width = std::max(width, c.compact().size());
    std::string out;
    for (int r = t.shape.length() - 1; r >= 0; --r) {
        std::string line;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            std::string cell = t.rows[r][c].empty() ? "." : t.rows[r][c].compact();
            if (c)
                line += ' ';
            line += cell;
            if (c + 1 < t.rows[r].size())
                line.append(width - cell.size(), ' ');
        }
        out += line + "\n";
    }
    return out;
}

} // namespace mtab
