#pragma once

#include "mpa/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mpa {

/// Univariate polynomial in the indeterminate xi with exact rational coefficients.
///
/// Coefficients are stored constant term first with no trailing zeros; the zero
/// polynomial is the empty sequence, so equality is structural.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coefficients);

    /// The polynomial xi.
    static Poly xi();
    /// xi + shift.
    static Poly xi_plus(const Rational& shift);
    /// xi^power.
    static Poly xi_power(unsigned power);

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t power) const;

    /// Horner evaluation.
    Rational eval(const Rational& at) const;

    /// Human-readable form such as "2*xi^2 - 1/3*xi + 4".
    std::string to_string() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
    friend Poly operator*(const Rational& b, Poly a) { return a *= b; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::size_t hash() const noexcept;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// (f)_l = f (f - 1) ... (f - l + 1); the constant 1 when l = 0.
Poly falling_factorial(const Poly& f, unsigned l);

/// Exact evaluation at an integer.
Rational eval_poly(const Poly& f, long n);

/// Unique polynomial of degree < points.size() through the given samples (Newton form).
/// Throws MalformedOracleData on an empty list or duplicate abscissae.
Poly interpolate(std::span<const std::pair<long, Rational>> points);

}  // namespace mpa
