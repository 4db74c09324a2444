#pragma once

// Partitions, multisets over the alphabet 1 < ... < m < 1' < ... < m',
// multiset partitions and the total order on multisets.

#include "numbers.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mtab {

struct Alphabet {
    int m = 0;     // unbarred letters 1..m
    int m_bar = 0; // barred letters 1'..m_bar'
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    /// Multiplicity of the part `i`.
    int multiplicity(int i) const;

    /// Ordered by size first, then lexicographically on the parts.
    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of k (at most `max_length` parts), reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int k, std::optional<int> max_length = std::nullopt);

/// z_mu = prod_i m_i(mu)! i^{m_i(mu)}.
Integer z_mu(const Partition& mu);

/// Multiset over the two-part alphabet. Barred letters appear at most once,
/// which the bitmask representation enforces.
class Multiset {
public:
    Multiset() = default;
    /// counts[i] is the multiplicity of letter i+1; bit b of `barred` is letter (b+1)'.
    Multiset(std::vector<int> counts, std::uint64_t barred);

    /// Builds from letter lists; barred letters must be distinct.
    static Multiset from_letters(const std::vector<int>& unbarred, const std::vector<int>& barred);

    const std::vector<int>& counts() const { return counts_; }
    std::uint64_t barred_mask() const { return barred_; }
    int count(int letter) const;
    bool has_barred(int letter) const { return (barred_ >> (letter - 1)) & 1U; }
    int barred_count() const;
    int unbarred_size() const;
    int size() const { return unbarred_size() + barred_count(); }
    bool empty() const { return counts_.empty() && barred_ == 0; }
    /// Odd number of barred entries.
    bool odd() const { return barred_count() % 2 == 1; }

    /// Largest unbarred / barred letter present (0 if none).
    int max_unbarred() const { return static_cast<int>(counts_.size()); }
    int max_barred() const;

    /// Multiset union. Throws if a barred letter would repeat.
    Multiset operator+(const Multiset& o) const;

    /// The letters in increasing order; unbarred letter i encodes as i,
    /// barred letter b as kBarOffset + b.
    std::vector<int> reading_word() const;
    static constexpr int kBarOffset = 1 << 20;

    bool operator==(const Multiset& o) const = default;

    /// "{1,1,2'}".
    std::string str() const;
    /// Compact cell form used by the tableau renderer: "11'2'"; empty is "".
    std::string compact() const;

private:
    std::vector<int> counts_; // no trailing zeros
    std::uint64_t barred_ = 0;
};

/// Empty multiset smallest, otherwise lexicographic on increasing reading words.
std::strong_ordering compare_multisets(const Multiset& a, const Multiset& b);

struct MultisetLess {
    bool operator()(const Multiset& a, const Multiset& b) const { return compare_multisets(a, b) < 0; }
};

/// Target content {1^alpha_1 ... m^alpha_m, 1'^beta_1 ...}. Barred letters may
/// repeat here; they are spread across parts.
struct DegreeVector {
    std::vector<int> alpha;
    std::vector<int> beta;

    int total() const;
    bool operator==(const DegreeVector&) const = default;
};

/// A multiset of nonempty multisets, stored as distinct parts ascending under
/// compare_multisets with multiplicities.
class MultisetPartition {
public:
    using Part = std::pair<Multiset, int>;

    MultisetPartition() = default;
    /// Any order, repeats allowed; empty multisets are rejected.
    explicit MultisetPartition(const std::vector<Multiset>& parts);

    const std::vector<Part>& parts() const { return parts_; }
    /// Parts expanded by multiplicity, ascending.
    std::vector<Multiset> flat() const;
    int length() const;
    /// Content as a degree vector (barred letters counted across parts).
    DegreeVector content() const;
    bool is_super() const;

    std::strong_ordering operator<=>(const MultisetPartition& o) const;
    bool operator==(const MultisetPartition& o) const = default;

    /// "{{1,1},{1}}"
    std::string str() const;

private:
    std::vector<Part> parts_;
};

/// All multiset partitions of cont_{alpha,beta} with no barred letter repeated
/// in a part and at most n parts. With super_only, parts with odd barred parity
/// are not repeated. Sorted ascending.
std::vector<MultisetPartition> enumerate_multiset_partitions(const DegreeVector& content, int n,
                                                             bool super_only);

/// (m_e, m_o): multiplicities of the even / odd parity parts.
std::pair<Partition, Partition> m_tilde(const MultisetPartition& pi);

// Text syntax.
Partition parse_partition(std::string_view text);        // "[3,2,1]", "3,2,1", "[]"
std::vector<int> parse_int_list(std::string_view text);  // "2,0" or "[2,0]" or ""
Multiset parse_multiset(std::string_view text);          // "{1,1,2'}"
/// "{{1,1},{2'}^3}" or "{1,1},{2'}" ; a "^k" suffix repeats a part.
MultisetPartition parse_multiset_partition(std::string_view text);
std::string int_list_str(const std::vector<int>& v);

} // namespace mtab
