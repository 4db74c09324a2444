#pragma once

// Grid runner for the executable identities: the three-way multiplicity
// agreement, character values of row fillings, the plethysm pairing, the
// p_S rewrite, spanning, generating functions and sign relations.

#include "superpoly.hpp"

#include <string>
#include <vector>

namespace mtab {

struct VerifyOptions {
    int n_max = 5;          // triangle, trace and plethysm suites
    int m_max = 2;
    int m_bar_max = 2;
    int degree_max = 4;     // |alpha| + |beta|
    int k_max = 6;          // cycle types mu |- k for the filling suites
    int fill_degree_max = 4;
    int inv_n_max = 3;      // invariant ring suites
    int stable_n_min = 4;
    int stable_n_max = 8;
    int stable_degree_max = 3;
    int jobs = 1;
    long long cap = kDefaultBasisCap;
    // Negative control: traces lose their signs before the character pairing.
    bool inject_sign_bug = false;
    std::vector<std::string> suites; // empty runs all
};

struct SuiteResult {
    std::string name;
    long cases = 0;
    long failed = 0;
    std::vector<std::string> failures; // first few, in grid order
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok() const;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite name.
VerifyReport run_verification(const VerifyOptions& opts);

/// Every vector of length `len` with non-negative entries summing to at most `total`.
std::vector<std::vector<int>> bounded_vectors(int len, int total);
/// Compositions (positive entries) of every size up to `total`, the empty one included.
std::vector<std::vector<int>> compositions_up_to(int total);

} // namespace mtab
