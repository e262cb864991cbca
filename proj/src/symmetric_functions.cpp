#include "mpa/symmetric_functions.hpp"

#include "mpa/errors.hpp"
#include "mpa/multiset_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mpa {

TruncatedSeries TruncatedSeries::one(std::vector<int> caps) {
    TruncatedSeries t(std::move(caps));
    t.add(Exponent(t.caps_.size(), 0), Rational(1));
    return t;
}

bool TruncatedSeries::within(const Exponent& e) const {
    if (e.size() != caps_.size()) throw InvalidArgument("exponent has the wrong number of variables");
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > caps_[i]) return false;
    }
    return true;
}

Rational TruncatedSeries::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

void TruncatedSeries::add(const Exponent& e, const Rational& c) {
    if (c.is_zero() || !within(e)) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::shifted(const Exponent& e) const {
    TruncatedSeries out(caps_);
    for (const auto& [x, c] : terms_) {
        Exponent y(x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += e[i];
        out.add(y, c);
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(a.caps_);
    for (const auto& [e, c] : b.terms_) {
        TruncatedSeries part = a.shifted(e);
        for (const auto& [x, d] : part.terms_) out.add(x, d * c);
    }
    return out;
}

std::int64_t a_coeff_ssmt(const IntegerPartition& nu, const std::vector<int>& lambda) { return count_ssmt(nu, lambda); }

namespace {

using Shape = std::vector<int>;

// Every mu' inside bound with mu'/mu a horizontal strip, paired with |mu'/mu|.
void horizontal_strips(const Shape& mu, const Shape& bound, const std::function<void(const Shape&, int)>& visit) {
    Shape next(mu);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int added) {
        if (i == bound.size()) {
            visit(next, added);
            return;
        }
        const int hi = std::min(bound[i], i == 0 ? bound[0] : mu[i - 1]);
        for (int v = mu[i]; v <= hi; ++v) {
            next[i] = v;
            rec(i + 1, added + v - mu[i]);
        }
        next[i] = mu[i];
    };
    rec(0, 0);
}

// Runs the strip recursion letter by letter; weight(letter, r) is the contribution of r copies.
template <class Value, class Weight>
Value add_letters(const IntegerPartition& nu, std::size_t letters, const Value& unit, Weight&& weight) {
    const Shape bound = nu.parts();
    std::map<Shape, Value> state;
    state.emplace(Shape(bound.size(), 0), unit);
    for (std::size_t letter = 0; letter < letters; ++letter) {
        std::map<Shape, Value> next;
        for (const auto& [mu, v] : state) {
            horizontal_strips(mu, bound, [&](const Shape& grown, int r) {
                Value w = weight(letter, r, v);
                auto it = next.find(grown);
                if (it == next.end()) next.emplace(grown, std::move(w));
                else it->second += w;
            });
        }
        state = std::move(next);
    }
    auto it = state.find(bound);
    return it == state.end() ? Value{} : it->second;
}

}  // namespace

TruncatedSeries schur_over_monomials(const IntegerPartition& nu, const std::vector<int>& lambda) {
    const VertexSpace vs(lambda);
    std::vector<Vertex> letters;
    for (std::uint32_t i = 0; i < vs.size(); ++i) letters.push_back(vs.vertex(i));
    std::sort(letters.begin(), letters.end(), [](const Vertex& a, const Vertex& b) {
        return Multiset::from_multiplicities(a) < Multiset::from_multiplicities(b);
    });
    struct Series {
        TruncatedSeries s{{}};
        Series& operator+=(const Series& o) {
            s += o.s;
            return *this;
        }
    };
    const Series unit{TruncatedSeries::one(lambda)};
    Series result = add_letters(nu, letters.size(), unit, [&](std::size_t letter, int r, const Series& v) {
        Vertex e(letters[letter]);
        for (int& x : e) x *= r;
        return Series{v.s.shifted(e)};
    });
    if (result.s.caps().empty()) return TruncatedSeries(lambda);
    return result.s;
}

std::int64_t a_coeff_plethysm(const IntegerPartition& nu, const std::vector<int>& lambda) {
    return schur_over_monomials(nu, lambda).coefficient(lambda).to_int64();
}

std::vector<IntegerPartition> lambda_set(int k, int n) {
    std::vector<IntegerPartition> out;
    for (auto& nu : enumerate_partitions(n)) {
        if (nu.b_statistic() <= k) out.push_back(std::move(nu));
    }
    return out;
}

PrincipalSpecialization principal_specialization(const IntegerPartition& nu, int degree_cap) {
    if (degree_cap < 0) throw InvalidArgument("degree cap must be non-negative");
    const auto len = static_cast<std::size_t>(degree_cap + 1);
    struct Series {
        std::vector<BigInt> c;
        Series& operator+=(const Series& o) {
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
            return *this;
        }
    };
    Series unit{std::vector<BigInt>(len, 0)};
    unit.c[0] = 1;
    Series lhs = add_letters(nu, len, unit, [&](std::size_t letter, int r, const Series& v) {
        Series w{std::vector<BigInt>(len, 0)};
        const std::size_t shift = letter * static_cast<std::size_t>(r);
        for (std::size_t i = 0; i + shift < len; ++i) w.c[i + shift] = v.c[i];
        return w;
    });
    if (lhs.c.empty()) lhs.c.assign(len, 0);

    std::vector<BigInt> rhs(len, 0);
    const auto b = static_cast<std::size_t>(nu.b_statistic());
    if (b < len) rhs[b] = 1;
    for (std::size_t row = 0; row < nu.length(); ++row) {
        for (std::size_t col = 0; col < static_cast<std::size_t>(nu[row]); ++col) {
            const auto h = static_cast<std::size_t>(nu.hook(row, col));
            for (std::size_t i = h; i < len; ++i) rhs[i] += rhs[i - h];  // times 1/(1 - q^h)
        }
    }
    return {std::move(lhs.c), std::move(rhs)};
}

std::int64_t r_coeff(const IntegerPartition& lambda, const IntegerPartition& nu) {
    const int n = nu.size();
    if (static_cast<int>(lambda.length()) > n) throw InvalidArgument("lambda has more parts than n");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    std::map<std::vector<int>, std::int64_t> memo;
    std::int64_t total = 0;
    do {
        std::vector<int> mu(static_cast<std::size_t>(n));
        bool valid = true;
        for (int i = 0; i < n && valid; ++i) {
            mu[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(i)] - i;
            valid = mu[static_cast<std::size_t>(i)] >= 0;
        }
        if (!valid) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) inversions += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)];
        }
        auto it = memo.find(mu);
        if (it == memo.end()) it = memo.emplace(mu, a_coeff_ssmt(nu, mu)).first;
        total += (inversions % 2 ? -1 : 1) * it->second;
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

namespace {

// Beta set {lambda_i + (l - 1 - i)} as a sorted vector.
BigInt mn_rec(std::vector<int> beta, const std::vector<int>& mu, std::size_t at, std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
    if (at == mu.size()) return 1;
    auto key = std::make_pair(beta, at);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[at];
    const std::set<int> beads(beta.begin(), beta.end());
    BigInt total = 0;
    for (int b : beta) {
        if (b - r < 0 || beads.count(b - r)) continue;
        int between = 0;
        for (int x : beta) between += x > b - r && x < b;
        std::vector<int> moved(beta);
        std::replace(moved.begin(), moved.end(), b, b - r);
        std::sort(moved.begin(), moved.end());
        const BigInt sub = mn_rec(std::move(moved), mu, at + 1, memo);
        total += between % 2 ? BigInt(-sub) : sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::vector<int> beta_set(const IntegerPartition& lambda) {
    const std::size_t l = lambda.length();
    std::vector<int> beta(l);
    for (std::size_t i = 0; i < l; ++i) beta[i] = lambda[i] + static_cast<int>(l - 1 - i);
    std::sort(beta.begin(), beta.end());
    return beta;
}

BigInt z_factor(const IntegerPartition& rho) {
    std::map<int, unsigned> mult;
    for (int p : rho.parts()) ++mult[p];
    BigInt z = 1;
    for (auto [part, m] : mult) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), m);
        z *= pw * factorial(m);
    }
    return z;
}

}  // namespace

BigInt sn_character(const IntegerPartition& lambda, const IntegerPartition& mu) {
    if (lambda.size() != mu.size()) throw InvalidArgument("character arguments of different size");
    std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
    return mn_rec(beta_set(lambda), mu.parts(), 0, memo);
}

std::int64_t r_coeff_character_oracle(const IntegerPartition& lambda, const IntegerPartition& nu) {
    const int n = nu.size();
    const auto lambda_types = enumerate_partitions(lambda.size());
    std::vector<Rational> s_lambda_coeff;  // chi^lambda(mu) / z_mu
    for (const auto& mu : lambda_types) s_lambda_coeff.emplace_back(sn_character(lambda, mu), z_factor(mu));
    Rational total;
    for (const auto& rho : enumerate_partitions(n)) {
        // s_lambda at the eigenvalues of a permutation of cycle type rho, via power sums.
        auto power_sum = [&](int r) {
            long p = 0;
            for (int c : rho.parts()) {
                if (r % c == 0) p += c;
            }
            return p;
        };
        Rational chi_w;
        for (std::size_t t = 0; t < lambda_types.size(); ++t) {
            BigInt prod = 1;
            for (int part : lambda_types[t].parts()) prod *= power_sum(part);
            chi_w += s_lambda_coeff[t] * Rational(prod);
        }
        total += chi_w * Rational(sn_character(nu, rho), z_factor(rho));
    }
    return total.to_int64();
}

}  // namespace mpa
