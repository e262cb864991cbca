#pragma once

#include "mpa/combinatorics.hpp"
#include "mpa/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mpa {

/// Polynomial in q_1..q_s with each exponent of q_i capped at caps[i]; terms past a cap are dropped.
class TruncatedSeries {
public:
    using Exponent = std::vector<int>;

    explicit TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {}
    static TruncatedSeries one(std::vector<int> caps);

    const std::vector<int>& caps() const noexcept { return caps_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(const Exponent& e) const;
    /// Ignores exponents past the caps.
    void add(const Exponent& e, const Rational& c);

    /// Multiplied by the monomial q^e.
    TruncatedSeries shifted(const Exponent& e) const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    bool within(const Exponent& e) const;

    std::vector<int> caps_;
    std::map<Exponent, Rational> terms_;
};

/// Number of semistandard multiset tableaux of shape nu with content {1^lambda_1, ..., s^lambda_s}.
std::int64_t a_coeff_ssmt(const IntegerPartition& nu, const std::vector<int>& lambda);

/// s_nu over the alphabet of monomials q^I, I in V_lambda, truncated at lambda.
/// Computed by adding one letter at a time as a horizontal strip.
TruncatedSeries schur_over_monomials(const IntegerPartition& nu, const std::vector<int>& lambda);

/// Coefficient of q^lambda in schur_over_monomials(nu, lambda).
std::int64_t a_coeff_plethysm(const IntegerPartition& nu, const std::vector<int>& lambda);

/// {nu |- n : b(nu) <= k}, in the order of enumerate_partitions.
std::vector<IntegerPartition> lambda_set(int k, int n);

/// Both sides of s_nu(1, q, q^2, ...) = q^{b(nu)} / prod_u (1 - q^{h(u)}) up to degree D.
struct PrincipalSpecialization {
    std::vector<BigInt> tableaux;  // SSYT over {0..D} weighted by entry sum
    std::vector<BigInt> product;   // geometric expansion of the hook product
};
PrincipalSpecialization principal_specialization(const IntegerPartition& nu, int degree_cap);

/// sum_{w in S_n} sgn(w) a_nu^{w.lambda}, (w.lambda)_i = lambda_i + w(i) - i; n = |nu|.
/// Throws InvalidArgument when lambda has more than n parts.
std::int64_t r_coeff(const IntegerPartition& lambda, const IntegerPartition& nu);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule; |lambda| = |mu|.
BigInt sn_character(const IntegerPartition& lambda, const IntegerPartition& mu);

/// (1/n!) sum_sigma s_lambda(eigenvalues of sigma) chi^nu(sigma), summed over cycle types.
std::int64_t r_coeff_character_oracle(const IntegerPartition& lambda, const IntegerPartition& nu);

}  // namespace mpa
