#include "mpa/poly.hpp"

#include "mpa/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mpa {

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::xi() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::xi_plus(const Rational& shift) { return Poly(std::vector<Rational>{shift, Rational(1)}); }

Poly Poly::xi_power(unsigned power) {
    std::vector<Rational> c(power + 1, Rational(0));
    c.back() = Rational(1);
    return Poly(std::move(c));
}

Rational Poly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Poly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << "xi";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::size_t Poly::hash() const noexcept {
    std::size_t h = coeffs_.size();
    for (const auto& c : coeffs_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly falling_factorial(const Poly& f, unsigned l) {
    Poly out(1);
    for (unsigned i = 0; i < l; ++i) out *= f - Poly(static_cast<long>(i));
    return out;
}

Rational eval_poly(const Poly& f, long n) { return f.eval(Rational(n)); }

Poly interpolate(std::span<const std::pair<long, Rational>> points) {
    if (points.empty()) throw MalformedOracleData("interpolate: no sample points");
    std::set<long> seen;
    for (const auto& [x, _] : points) {
        if (!seen.insert(x).second) {
            throw MalformedOracleData("interpolate: duplicate abscissa " + std::to_string(x));
        }
    }
    // Newton divided differences, then expand the nested form.
    const std::size_t m = points.size();
    std::vector<Rational> diff(m);
    for (std::size_t i = 0; i < m; ++i) diff[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            const Rational dx(points[i].first - points[i - level].first);
            diff[i] = (diff[i] - diff[i - 1]) / dx;
        }
    }
    Poly out(diff[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        out *= Poly::xi_plus(Rational(-points[i].first));
        out += Poly(diff[i]);
    }
    return out;
}

}  // namespace mpa
