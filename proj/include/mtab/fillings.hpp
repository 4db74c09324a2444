#pragma once

// Row-constant fillings of a Young diagram of shape mu. Every cell of a row
// carries the row's label; an empty label leaves the row unfilled. These
// count character values of h_alpha e_beta at permutations of cycle type mu.

#include "combinat.hpp"

#include <map>
#include <string>
#include <vector>

namespace mtab {

struct RowFilling {
    Partition mu;
    std::vector<Multiset> row_labels; // one per row of mu, row 1 first

    /// sum over rows of mu_r * label_r.
    DegreeVector content() const;
    /// (-1)^(cells with odd barred parity + rows with odd barred parity)
    int weight() const;
    /// The multiset of nonempty cell labels.
    MultisetPartition msp() const;
};

/// Fillings with unbarred labels of content 1^alpha_1 2^alpha_2 ...
std::vector<RowFilling> enumerate_T(const std::vector<int>& alpha, const Partition& mu);
Integer count_T(const std::vector<int>& alpha, const Partition& mu);

/// Fillings by subsets of barred letters with content 1'^beta_1 ...
std::vector<RowFilling> enumerate_Tbar(const std::vector<int>& beta, const Partition& mu);
Integer signed_sum_Tbar(const std::vector<int>& beta, const Partition& mu);

/// Cellwise union of the T and Tbar fillings, grouped by MSP with signed counts.
/// Entries that cancel to zero are kept out of the map.
std::map<MultisetPartition, Integer> mixed_fillings_by_msp(const std::vector<int>& alpha,
                                                           const std::vector<int>& beta, const Partition& mu);

/// Signed count of row-constant fillings of mu using lambda_i cells labelled i
/// and tau_j cells labelled j'; primed labels carry the sign.
Integer evalhet_sum(const std::vector<int>& lambda, const std::vector<int>& tau, const Partition& mu);

/// Diagram with the top row first; unfilled cells print as ".".
std::string render_text(const RowFilling& f);

} // namespace mtab
