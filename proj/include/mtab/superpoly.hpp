#pragma once

// Exact arithmetic in C[X_{n x m}; Theta_{n x m'}]: commuting x_{ij} and
// anticommuting, square-zero theta_{ij'}. S_n permutes the first index.

#include "combinat.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mtab {

struct RingDims {
    int n = 0;
    int m = 0;
    int m_bar = 0;
    bool operator==(const RingDims&) const = default;
};

/// x exponents row-major (x_{ij} at (i-1)*m + (j-1)) and the theta factors as
/// strictly increasing variable indices, theta_{ij'} at (i-1)*m' + (j'-1).
/// Ascending index means ascending by (i, j').
struct SuperMonomial {
    std::vector<int> x_exp;
    std::vector<int> theta;

    auto operator<=>(const SuperMonomial&) const = default;
};

/// Sorts `vars` ascending and returns the sign of the sorting permutation,
/// or 0 if a variable repeats.
int sort_with_sign(std::vector<int>& vars);

class SuperPolynomial {
public:
    using Terms = std::map<SuperMonomial, Rational>;

    explicit SuperPolynomial(RingDims dims = {});

    static SuperPolynomial one(RingDims dims);
    /// 1-based indices.
    static SuperPolynomial x(RingDims dims, int i, int j);
    static SuperPolynomial theta(RingDims dims, int i, int j);
    static SuperPolynomial monomial(RingDims dims, SuperMonomial mono, const Rational& c = 1);

    RingDims dims() const { return dims_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const SuperMonomial& mono) const;

    void add_term(const SuperMonomial& mono, const Rational& c);

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Rational& c);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }

    /// Throws std::invalid_argument on a dimension mismatch.
    SuperPolynomial multiply(const SuperPolynomial& o) const;
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) { return a.multiply(b); }

    bool operator==(const SuperPolynomial& o) const = default;

    std::string str() const;

private:
    RingDims dims_;
    Terms terms_;
};

/// A permutation of {0..n-1} given by its images.
using Permutation = std::vector<int>;

/// Standard permutation of cycle type mu: cycles on consecutive blocks.
Permutation permutation_of_type(const Partition& mu);

/// sigma applied to one monomial: (sign, normal form). Sign is +-1.
std::pair<int, SuperMonomial> act(const Permutation& sigma, const SuperMonomial& mono, RingDims dims);
SuperPolynomial act(const Permutation& sigma, const SuperPolynomial& p);

/// Default cap on the dimension of a homogeneous component.
inline constexpr long long kDefaultBasisCap = 10'000'000;

/// Dimension of the degree (alpha, beta) component.
Integer component_dimension(int n, const std::vector<int>& alpha, const std::vector<int>& beta);

/// Normal-form monomials of degree alpha in the x columns and beta in the
/// theta columns (m = |alpha|, m' = |beta| entries). Throws std::length_error
/// when the dimension exceeds `cap`.
std::vector<SuperMonomial> component_basis(int n, const std::vector<int>& alpha, const std::vector<int>& beta,
                                           long long cap = kDefaultBasisCap);

/// Trace of a permutation of cycle type mu on the degree (alpha, beta) component.
Integer trace_character(int n, const std::vector<int>& alpha, const std::vector<int>& beta, const Partition& mu,
                        long long cap = kDefaultBasisCap);

/// Traces of every cycle type mu |- n on the component, sharing one basis.
std::map<Partition, Integer> trace_table(int n, const std::vector<int>& alpha, const std::vector<int>& beta,
                                         long long cap = kDefaultBasisCap);

/// sum_mu chi^lambda(mu) traces[mu] / z_mu. Throws std::logic_error unless the
/// result is a non-negative integer.
Integer multiplicity_from_traces(const Partition& lambda, const std::map<Partition, Integer>& traces);

/// Multiplicity of the irreducible lambda by the character inner product of
/// the traces. Throws std::logic_error if the result is not a non-negative integer.
Integer brute_multiplicity(int n, const Partition& lambda, const std::vector<int>& alpha,
                           const std::vector<int>& beta, long long cap = kDefaultBasisCap);

/// (X;Theta)^pi: part i of pi (ascending order) on row i.
SuperMonomial leading_monomial(const MultisetPartition& pi, RingDims dims);

/// Sum of the distinct signed monomials in the S_n orbit of (X;Theta)^pi.
/// Zero when l(pi) > n or when the orbit contains a monomial with both signs.
SuperPolynomial monomial_sym(const MultisetPartition& pi, RingDims dims);

/// p_S = sum_r x_{r1}^{a_1} ... x_{rm}^{a_m} theta_{r s_1} ... theta_{r s_k}.
SuperPolynomial power_sum(const Multiset& s, RingDims dims);
/// Product of p_S over the parts of pi in ascending part order.
SuperPolynomial power_prod(const MultisetPartition& pi, RingDims dims);

/// Invariant under (1 2) and (1 2 ... n).
bool is_invariant(const SuperPolynomial& p);

} // namespace mtab
