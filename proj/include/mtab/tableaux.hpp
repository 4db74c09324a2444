#pragma once

// Multiset tableaux: fillings of a Young diagram by multisets (blank cells
// hold the empty multiset) such that labels weakly increase along rows and
// up columns, equal labels with an even number of barred letters form a
// horizontal strip and equal labels with an odd number form a vertical strip.
//
// Cells use French notation: rows[0] is the bottom (longest) row.

#include "combinat.hpp"

#include <string>
#include <vector>

namespace mtab {

struct MultisetTableau {
    Partition shape;
    std::vector<std::vector<Multiset>> rows;

    const Multiset& at(int row, int col) const { return rows[row][col]; }
    /// Multiset union of all cells, as a degree vector.
    DegreeVector content() const;

    bool operator==(const MultisetTableau&) const = default;
};

struct Cell {
    int row = 0; // 1-based, row 1 at the bottom
    int col = 0; // 1-based
    bool operator==(const Cell&) const = default;
};

struct ValidationReport {
    bool ok = true;
    int condition = 0; // first violated condition, 1..4
    std::vector<Cell> cells;
    std::string message;
};

/// Checks the four tableau conditions, reporting the lowest-numbered one that
/// fails. Throws std::invalid_argument when the rows do not match the shape.
/// If `alphabet` is given, condition 1 also requires letters to be in range.
ValidationReport validate(const MultisetTableau& t, const Alphabet* alphabet = nullptr);

/// All tableaux of the given shape and content cont_{alpha,beta}; blank cells
/// fill the rest. Ordered by entry multiset partition, then by construction.
std::vector<MultisetTableau> enumerate_tableaux(const Partition& shape, const DegreeVector& content);

/// Tableaux of the given shape whose nonblank labels are exactly the parts of
/// pi, with n - l(pi) blank cells.
std::vector<MultisetTableau> enumerate_with_entries(const Partition& shape, const MultisetPartition& pi,
                                                    int n);

/// Number of such tableaux (counted without materializing them).
Integer count_with_entry_multiset(const Partition& shape, const MultisetPartition& pi, int n);

/// Number of tableaux of shape lambda and content cont_{alpha,beta}.
Integer multiplicity(const Partition& lambda, const std::vector<int>& alpha, const std::vector<int>& beta,
                     int n);

/// Row-per-line rendering, top row first; blank cells print as ".".
std::string render_text(const MultisetTableau& t);

} // namespace mtab
