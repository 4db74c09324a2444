#include "mtab/combinat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mtab {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    for (int p : parts)
        if (p < 0)
            throw std::invalid_argument("negative part");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const
{
    if (auto c = size_ <=> o.size_; c != 0)
        return c;
    return parts_ <=> o.parts_;
}

std::string Partition::str() const { return "[" + int_list_str(parts_) + "]"; }

std::vector<Partition> enumerate_partitions(int k, std::optional<int> max_length)
{
    if (k < 0)
        throw std::invalid_argument("enumerate_partitions: k must be non-negative");
    const int cap = max_length.value_or(k);
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= cap)
            return;
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

Integer z_mu(const Partition& mu)
{
    Integer z = 1;
    const auto& p = mu.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i])
            ++j;
        Integer ip = p[i];
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), ip.get_mpz_t(), j - i);
        z *= factorial(static_cast<unsigned>(j - i)) * pw;
        i = j;
    }
    return z;
}

// ---------------------------------------------------------------- Multiset

Multiset::Multiset(std::vector<int> counts, std::uint64_t barred)
    : counts_(std::move(counts)), barred_(barred)
{
    for (int c : counts_)
        if (c < 0)
            throw std::invalid_argument("negative multiplicity");
    while (!counts_.empty() && counts_.back() == 0)
        counts_.pop_back();
}

Multiset Multiset::from_letters(const std::vector<int>& unbarred, const std::vector<int>& barred)
{
    std::vector<int> counts;
    for (int a : unbarred) {
        if (a < 1)
            throw std::invalid_argument("letters are numbered from 1");
        if (static_cast<int>(counts.size()) < a)
            counts.resize(a, 0);
        ++counts[a - 1];
    }
    std::uint64_t mask = 0;
    for (int b : barred) {
        if (b < 1 || b > 64)
            throw std::invalid_argument("barred letter out of range 1..64");
        const std::uint64_t bit = std::uint64_t{1} << (b - 1);
        if (mask & bit)
            throw std::invalid_argument("barred letter repeated in a multiset");
        mask |= bit;
    }
    return Multiset(std::move(counts), mask);
}

int Multiset::count(int letter) const
{
    return letter >= 1 && letter <= max_unbarred() ? counts_[letter - 1] : 0;
}

int Multiset::barred_count() const { return std::popcount(barred_); }

int Multiset::unbarred_size() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int Multiset::max_barred() const { return barred_ == 0 ? 0 : 64 - std::countl_zero(barred_); }

Multiset Multiset::operator+(const Multiset& o) const
{
    if (barred_ & o.barred_)
        throw std::invalid_argument("multiset union repeats a barred letter");
    std::vector<int> c(std::max(counts_.size(), o.counts_.size()), 0);
    for (std::size_t i = 0; i < counts_.size(); ++i)
        c[i] += counts_[i];
    for (std::size_t i = 0; i < o.counts_.size(); ++i)
        c[i] += o.counts_[i];
    return Multiset(std::move(c), barred_ | o.barred_);
}

std::vector<int> Multiset::reading_word() const
{
    std::vector<int> w;
    w.reserve(size());
    for (std::size_t i = 0; i < counts_.size(); ++i)
        w.insert(w.end(), counts_[i], static_cast<int>(i) + 1);
    for (int b = 1; b <= max_barred(); ++b)
        if (has_barred(b))
            w.push_back(kBarOffset + b);
    return w;
}

static std::string letter_str(int code)
{
    return code > Multiset::kBarOffset ? std::to_string(code - Multiset::kBarOffset) + "'"
                                       : std::to_string(code);
}

std::string Multiset::str() const
{
    std::string s = "{";
    bool first = true;
    for (int c : reading_word()) {
        if (!first)
            s += ",";
        s += letter_str(c);
        first = false;
    }
    return s + "}";
}

std::string Multiset::compact() const
{
    std::string s;
    for (int c : reading_word())
        s += letter_str(c);
    return s;
}

std::strong_ordering compare_multisets(const Multiset& a, const Multiset& b)
{
    // Lexicographic order on reading words already puts the empty word first.
    const auto wa = a.reading_word();
    const auto wb = b.reading_word();
    return std::lexicographical_compare_three_way(wa.begin(), wa.end(), wb.begin(), wb.end());
}

int DegreeVector::total() const
{
    return std::accumulate(alpha.begin(), alpha.end(), 0) + std::accumulate(beta.begin(), beta.end(), 0);
}

// ------------------------------------------------------- MultisetPartition

MultisetPartition::MultisetPartition(const std::vector<Multiset>& parts)
{
    std::vector<Multiset> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), MultisetLess{});
    for (const auto& s : sorted) {
        if (s.empty())
            throw std::invalid_argument("multiset partition parts must be nonempty");
        if (!parts_.empty() && parts_.back().first == s)
            ++parts_.back().second;
        else
            parts_.emplace_back(s, 1);
    }
}

std::vector<Multiset> MultisetPartition::flat() const
{
    std::vector<Multiset> out;
    for (const auto& [s, k] : parts_)
        out.insert(out.end(), k, s);
    return out;
}

int MultisetPartition::length() const
{
    int l = 0;
    for (const auto& part : parts_)
        l += part.second;
    return l;
}

DegreeVector MultisetPartition::content() const
{
    DegreeVector d;
    for (const auto& [s, k] : parts_) {
        if (static_cast<int>(d.alpha.size()) < s.max_unbarred())
            d.alpha.resize(s.max_unbarred(), 0);
        if (static_cast<int>(d.beta.size()) < s.max_barred())
            d.beta.resize(s.max_barred(), 0);
        for (int i = 1; i <= s.max_unbarred(); ++i)
            d.alpha[i - 1] += k * s.count(i);
        for (int b = 1; b <= s.max_barred(); ++b)
            if (s.has_barred(b))
                d.beta[b - 1] += k;
    }
    return d;
}

bool MultisetPartition::is_super() const
{
    return std::none_of(parts_.begin(), parts_.end(),
                        [](const Part& p) { return p.first.odd() && p.second > 1; });
}

std::strong_ordering MultisetPartition::operator<=>(const MultisetPartition& o) const
{
    const std::size_t k = std::min(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (auto c = compare_multisets(parts_[i].first, o.parts_[i].first); c != 0)
            return c;
        if (auto c = parts_[i].second <=> o.parts_[i].second; c != 0)
            return c;
    }
    return parts_.size() <=> o.parts_.size();
}

std::string MultisetPartition::str() const
{
    std::string s = "{";
    bool first = true;
    for (const auto& m : flat()) {
        if (!first)
            s += ",";
        s += m.str();
        first = false;
    }
    return s + "}";
}

namespace {

// Parts are produced in weakly decreasing order so each multiset partition
// appears exactly once.
class MspEnumerator {
public:
    MspEnumerator(const DegreeVector& content, int n, bool super_only)
        : rem_a_(content.alpha), rem_b_(content.beta), n_(n), super_only_(super_only)
    {
        for (int v : rem_a_)
            if (v < 0)
                throw std::invalid_argument("negative degree");
        for (int v : rem_b_)
            if (v < 0)
                throw std::invalid_argument("negative degree");
        if (rem_b_.size() > 64)
            throw std::invalid_argument("at most 64 barred letters are supported");
    }

    std::vector<MultisetPartition> run()
    {
        rec(std::nullopt);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    bool remaining_empty() const
    {
        return std::all_of(rem_a_.begin(), rem_a_.end(), [](int v) { return v == 0; }) &&
               std::all_of(rem_b_.begin(), rem_b_.end(), [](int v) { return v == 0; });
    }

    int parts_needed() const
    {
        int need = remaining_empty() ? 0 : 1;
        for (int v : rem_b_)
            need = std::max(need, v);
        return need;
    }

    void rec(const std::optional<Multiset>& prev)
    {
        if (remaining_empty()) {
            out_.emplace_back(cur_);
            return;
        }
        if (static_cast<int>(cur_.size()) + parts_needed() > n_)
            return;
        std::uint64_t avail = 0;
        for (std::size_t b = 0; b < rem_b_.size(); ++b)
            if (rem_b_[b] > 0)
                avail |= std::uint64_t{1} << b;
        std::vector<int> counts(rem_a_.size(), 0);
        enumerate_counts(0, counts, avail, prev);
    }

    void enumerate_counts(std::size_t i, std::vector<int>& counts, std::uint64_t avail,
                          const std::optional<Multiset>& prev)
    {
        if (i < counts.size()) {
            for (int c = 0; c <= rem_a_[i]; ++c) {
                counts[i] = c;
                enumerate_counts(i + 1, counts, avail, prev);
            }
            counts[i] = 0;
            return;
        }
        // every submask of avail, including 0
        for (std::uint64_t mask = avail;; mask = (mask - 1) & avail) {
            Multiset part(counts, mask);
            if (!part.empty() && admissible(part, prev)) {
                take(part, +1);
                cur_.push_back(part);
                rec(part);
                cur_.pop_back();
                take(part, -1);
            }
            if (mask == 0)
                break;
        }
    }

    bool admissible(const Multiset& part, const std::optional<Multiset>& prev) const
    {
        if (!prev)
            return true;
        auto c = compare_multisets(part, *prev);
        if (c > 0)
            return false;
        if (c == 0 && super_only_ && part.odd())
            return false;
        return true;
    }

    void take(const Multiset& part, int sign)
    {
        for (int i = 1; i <= part.max_unbarred(); ++i)
            rem_a_[i - 1] -= sign * part.count(i);
        for (int b = 1; b <= part.max_barred(); ++b)
            if (part.has_barred(b))
                rem_b_[b - 1] -= sign;
    }

    std::vector<int> rem_a_, rem_b_;
    int n_;
    bool super_only_;
    std::vector<Multiset> cur_;
    std::vector<MultisetPartition> out_;
};

} // namespace

std::vector<MultisetPartition> enumerate_multiset_partitions(const DegreeVector& content, int n,
                                                             bool super_only)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_multiset_partitions: n must be non-negative");
    return MspEnumerator(content, n, super_only).run();
}

std::pair<Partition, Partition> m_tilde(const MultisetPartition& pi)
{
    std::vector<int> even, odd;
    for (const auto& [s, k] : pi.parts())
        (s.odd() ? odd : even).push_back(k);
    return {Partition::from_unsorted(even), Partition::from_unsorted(odd)};
}

// ------------------------------------------------------------- text syntax

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_brackets(std::string_view s, char open, char close)
{
    s = trim(s);
    if (!s.empty() && s.front() == open) {
        if (s.back() != close)
            throw std::invalid_argument(std::string("unbalanced '") + open + "' in input");
        s = trim(s.substr(1, s.size() - 2));
    }
    return s;
}

int parse_int(std::string_view s)
{
    s = trim(s);
    if (s.empty())
        throw std::invalid_argument("expected an integer");
    int v = 0;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-') {
        neg = true;
        i = 1;
    }
    if (i == s.size())
        throw std::invalid_argument("expected an integer");
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

std::vector<std::string_view> split_top(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{' || s[i] == '[')
            ++depth;
        else if (s[i] == '}' || s[i] == ']')
            --depth;
        else if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

} // namespace

std::vector<int> parse_int_list(std::string_view text)
{
    auto body = strip_brackets(text, '[', ']');
    body = strip_brackets(body, '(', ')');
    std::vector<int> out;
    if (body.empty())
        return out;
    for (auto tok : split_top(body, ','))
        out.push_back(parse_int(tok));
    return out;
}

Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

Multiset parse_multiset(std::string_view text)
{
    auto t = trim(text);
    if (t.empty() || t.front() != '{')
        throw std::invalid_argument("multiset must be written as {..}");
    auto body = strip_brackets(t, '{', '}');
    std::vector<int> unbarred, barred;
    if (!body.empty()) {
        for (auto tok : split_top(body, ',')) {
            if (!tok.empty() && tok.back() == '\'')
                barred.push_back(parse_int(tok.substr(0, tok.size() - 1)));
            else
                unbarred.push_back(parse_int(tok));
        }
    }
    return Multiset::from_letters(unbarred, barred);
}

MultisetPartition parse_multiset_partition(std::string_view text)
{
    auto t = trim(text);
    if (t.empty() || t == "{}")
        return {};
    // Strip one outer brace pair when it encloses further braces.
    if (t.size() >= 2 && t[0] == '{' && t[1] != '}' && trim(t.substr(1)).front() == '{') {
        int depth = 0;
        std::size_t close = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == '{')
                ++depth;
            else if (t[i] == '}' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close == t.size() - 1)
            t = trim(t.substr(1, t.size() - 2));
    }
    std::vector<Multiset> parts;
    for (auto tok : split_top(t, ',')) {
        int reps = 1;
        if (auto caret = tok.rfind('^'); caret != std::string_view::npos && caret > tok.rfind('}')) {
            reps = parse_int(tok.substr(caret + 1));
            tok = trim(tok.substr(0, caret));
        }
        if (reps < 0)
            throw std::invalid_argument("negative repetition count");
        auto s = parse_multiset(tok);
        parts.insert(parts.end(), reps, s);
    }
    return MultisetPartition(parts);
}

std::string int_list_str(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace mtab
