#include "mpa/rational.hpp"

#include "mpa/errors.hpp"

#include <limits>

namespace mpa {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw InvalidArgument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw ParseError("rational", "empty string");
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        BigInt out;
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (part.size() == start) throw ParseError("rational", "malformed number '" + s + "'");
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw ParseError("rational", "malformed number '" + s + "'");
        }
        out.set_str(part[0] == '+' ? part.substr(1) : part, 10);
        return out;
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    const BigInt num = parse_int(s.substr(0, slash));
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational", "zero denominator in '" + s + "'");
    return Rational(num, den);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw InvalidArgument("rational " + to_string() + " is not an integer");
    const BigInt& num = value_.get_num();
    if (!num.fits_slong_p()) throw InvalidArgument("integer " + to_string() + " out of range");
    return num.get_si();
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const noexcept {
    auto mix = [](std::size_t seed, std::size_t v) {
        return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    };
    std::size_t h = static_cast<std::size_t>(sgn(value_) + 1);
    for (mpz_srcptr z : {value_.get_num_mpz_t(), value_.get_den_mpz_t()}) {
        const std::size_t limbs = mpz_size(z);
        h = mix(h, limbs);
        for (std::size_t i = 0; i < limbs; ++i) h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
    }
    return h;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InvalidArgument("division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt multinomial(unsigned n, const unsigned* parts, std::size_t count) {
    BigInt out = factorial(n);
    for (std::size_t i = 0; i < count; ++i) out /= factorial(parts[i]);
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace mpa
