#pragma once

// The ring of S_n invariants: power sum generators p_S, the elementary
// generating function E and its power sum expansion, and the rewrite that
// expresses p_S with |S| > n through generators of degree at most n.

#include "combinat.hpp"
#include "superpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace mtab {

/// Rational combination of products p_pi = p_{S_1} ... p_{S_l}, each taken in
/// ascending part order. Reordering odd-parity factors flips signs, which the
/// stored coefficients absorb; products repeating an odd-parity factor vanish.
class PExpression {
public:
    using Terms = std::map<MultisetPartition, Rational>;

    static PExpression one();
    static PExpression generator(const Multiset& s);
    /// c * p_{parts[0]} p_{parts[1]} ... in the given order.
    static PExpression ordered_product(const std::vector<Multiset>& parts, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const MultisetPartition& pi) const;
    /// Largest |S| over all factors.
    int max_part_size() const;

    void add_term(const MultisetPartition& pi, const Rational& c);

    PExpression& operator+=(const PExpression& o);
    PExpression& operator*=(const Rational& c);
    friend PExpression operator+(PExpression a, const PExpression& b) { return a += b; }
    friend PExpression operator*(PExpression a, const Rational& c) { return a *= c; }
    PExpression operator*(const PExpression& o) const;

    bool operator==(const PExpression&) const = default;

    /// Evaluate with p_S -> power_sum(S).
    SuperPolynomial realize(RingDims dims) const;

    /// "p{1}^2 - 1/2*p{1,1}"
    std::string str() const;

private:
    Terms terms_;
};

/// Sign of reordering the factors into ascending order (odd-parity factors
/// anticommute), or 0 if an odd-parity factor repeats.
int reorder_sign(const std::vector<Multiset>& factors);

/// Number of super multiset partitions of cont_{alpha,beta} with at most n parts.
Integer count_invariants(int n, const std::vector<int>& alpha, const std::vector<int>& beta);

/// |S|! / (a_1! ... a_m! 1!^k).
Integer c_of_S(const Multiset& s);
/// prod c(S_i)^{m_i} / (prod |S_i|^{m_i} prod m_i!).
Rational a_of_pi(const MultisetPartition& pi);
/// Sign of z_{T_1} z_{T_2} ... (ascending parts) against z_{T} ascending.
int z_sign(const MultisetPartition& pi);

/// All multisets over the alphabet with min_size <= |S| <= max_size.
std::vector<Multiset> enumerate_multisets(const Alphabet& alphabet, int min_size, int max_size);

/// Coefficients of q^a z_{s_1}...z_{s_k} (indexed by S) in P, for 1 <= |S| <= degree_bound:
/// c(S)/|S| * p_S.
std::map<Multiset, PExpression, MultisetLess> expand_P(int degree_bound, const Alphabet& alphabet);

/// Coefficients in E for |S| <= degree_bound:
/// sum_{pi |- S} (-1)^{|S| + l(pi)} a_pi z_sign(pi) p_pi.
std::map<Multiset, PExpression, MultisetLess> expand_E(int degree_bound, const Alphabet& alphabet);

/// One application of the rewrite for p_S: the vanishing E-coefficient of S
/// solved for p_S. Parts on the right are proper sub-multisets of S.
PExpression relation_rhs(const Multiset& s);

/// Rewrites until every factor has size at most n. `reductions` counts
/// rewrite applications.
PExpression normal_form(const PExpression& expr, int n, long* reductions = nullptr);

/// p_S expressed through generators of size <= n. Throws
/// std::invalid_argument when |S| <= n.
PExpression reduce_pS(const Multiset& s, int n, long* reductions = nullptr);

// Generating-function series in q (commuting) and z (anticommuting, commuting
// with x and theta) with polynomial coefficients; q^a z_T is keyed by the
// multiset S = T-letters + barred T. Truncated at total degree.
using GenSeries = std::map<Multiset, SuperPolynomial, MultisetLess>;

GenSeries series_multiply(const GenSeries& a, const GenSeries& b, int degree_bound);
/// prod_i (1 + sum_j q_j x_{ij} + sum_j z_j theta_{ij}).
GenSeries series_E(RingDims dims, int degree_bound);
/// -sum_i log(1 - Y_i) = sum_i sum_r Y_i^r / r.
GenSeries series_P(RingDims dims, int degree_bound);
/// exp(-P(-q, -z)).
GenSeries series_exp_neg_P_neg(const GenSeries& p, RingDims dims, int degree_bound);
/// Realize a symbolic expansion coefficientwise.
GenSeries realize(const std::map<Multiset, PExpression, MultisetLess>& coeffs, RingDims dims);
/// Coefficientwise equality, absent keys read as zero.
bool series_equal(const GenSeries& a, const GenSeries& b);

/// Rank over the rationals of the coefficient vectors.
long rank(const std::vector<SuperPolynomial>& polys);

struct SpanReport {
    int n = 0;
    std::vector<int> alpha, beta;
    long count = 0;           // super multiset partitions with l <= n
    long dimension = -1;      // invariant subspace dimension by traces; -1 if over the cap
    long basis_rank = 0;      // rank of p_pi, l(pi) <= n
    long generator_rank = 0;  // rank of products of p_S with |S| <= n
    long generators_used = 0; // number of such products
    long reductions_applied = 0;
    bool all_invariant = true;
    bool ok = false;
    std::string message;
};

SpanReport verify_spanning(int n, const std::vector<int>& alpha, const std::vector<int>& beta,
                           long long cap = kDefaultBasisCap);

struct RelationsReport {
    long pairs_checked = 0;
    long squares_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// p_S p_S' = (-1)^{|T||T'|} p_S' p_S for all S != S', and p_S^2 = 0 for
/// odd |T|, over every S, S' with 1 <= size <= max_size.
RelationsReport check_relations(RingDims dims, int max_size);

} // namespace mtab
