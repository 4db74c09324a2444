#pragma once

// Exact symmetric functions in the p, h, e and s bases.

#include "combinat.hpp"

#include <map>
#include <string>
#include <vector>

namespace mtab {

enum class Basis { p, h, e, s };

char basis_char(Basis b);
Basis parse_basis(char c);

/// Formal rational combination of basis elements b_lambda, all in one basis.
/// Zero coefficients are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymFunc(Basis b = Basis::p) : basis_(b) {}

    /// b_index with the given coefficient. Zero entries of `index` are
    /// dropped (b_0 = 1); a negative entry gives the zero expression.
    static SymFunc term(Basis b, const std::vector<int>& index, const Rational& c = 1);
    static SymFunc one(Basis b = Basis::p) { return term(b, {}); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition& index) const;

    void add_term(const Partition& index, const Rational& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rational& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }

    /// Product within one multiplicative basis (p, h or e). Terms of degree
    /// above `max_degree` are dropped when it is non-negative.
    SymFunc multiply(const SymFunc& o, int max_degree = -1) const;
    SymFunc operator*(const SymFunc& o) const { return multiply(o); }

    /// Homogeneous component of degree d.
    SymFunc degree_part(int d) const;

    bool operator==(const SymFunc& o) const = default;

    /// "1/2*p[1,1] - 1/2*p[2]"
    std::string str() const;

private:
    Basis basis_;
    Terms terms_;
};

/// chi^lambda(mu) by the Murnaghan-Nakayama rule; memoized, thread-safe.
/// Throws std::invalid_argument when |lambda| != |mu|.
Integer character(const Partition& lambda, const Partition& mu);

/// Convert h or e (or p) to the p basis with Newton's identities.
SymFunc newton_convert(const SymFunc& f);

/// Convert any basis to p.
SymFunc to_p(const SymFunc& f);

SymFunc schur_to_p(const Partition& lambda);
/// p-basis input to the Schur basis, componentwise by degree.
SymFunc p_to_schur(const SymFunc& f);

/// Hall scalar product, <p_lambda, p_mu> = z_mu [lambda = mu].
Rational hall_inner(const SymFunc& f, const SymFunc& g);

enum class StripKind { horizontal, vertical };

/// Partitions mu with mu/lambda a horizontal (h_r) or vertical (e_r) strip of
/// size r, in reverse lexicographic order.
std::vector<Partition> pieri(StripKind kind, int r, const Partition& lambda);

/// p_k evaluated at the eigenvalues of a permutation of cycle type mu.
Integer power_sum_at_xi(int k, const Partition& mu);

/// f[Xi_mu].
Rational eval_xi(const SymFunc& f, const Partition& mu);

/// sum_{mu |- n} values[mu] p_mu / z_mu. Throws if some mu |- n is missing.
SymFunc frobenius_from_values(const std::map<Partition, Rational>& values, int n);

/// Schur expansion of the Frobenius image of the degree (alpha, beta)
/// component, computed from h_alpha e_beta evaluated at permutation eigenvalues.
SymFunc module_frobenius(int n, const std::vector<int>& alpha, const std::vector<int>& beta);

/// <h_a, s_lambda[1 + h_1 + h_2 + ...]> with the inner argument truncated at
/// degree |a|. Requires |lambda| = n.
Integer plethysm_multiplicity(const std::vector<int>& a, const Partition& lambda, int n);

} // namespace mtab
