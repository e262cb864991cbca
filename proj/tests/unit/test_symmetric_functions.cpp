#include "doctest.h"
#include "mpa/errors.hpp"
#include "mpa/symmetric_functions.hpp"

#include <algorithm>

using namespace mpa;

namespace {

IntegerPartition P(std::vector<int> parts) { return IntegerPartition(std::move(parts)); }

// Weight vectors with |lambda| <= max_size and 1 <= s <= max_parts entries, zeros allowed after the first.
std::vector<std::vector<int>> small_lambdas(int max_size, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int v = cur.empty() ? 1 : 0; v <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    rec(rec, max_size);
    return out;
}

}  // namespace

TEST_CASE("a coefficients from tableaux") {
    CHECK(a_coeff_ssmt(P({5}), {2}) == 2);
    CHECK(a_coeff_ssmt(P({4, 1}), {2}) == 2);
    CHECK(a_coeff_ssmt(P({3, 2}), {2}) == 1);
    CHECK(a_coeff_ssmt(P({3, 1, 1}), {2}) == 0);
    for (int n = 2; n <= 6; ++n) CHECK(a_coeff_ssmt(P({n - 1, 1}), {1}) == 1);
    BigInt dim = 0;
    for (const auto& nu : enumerate_partitions(5)) dim += count_syt(nu) * a_coeff_ssmt(nu, {2});
    CHECK(dim == 15);
}

TEST_CASE("plethysm coefficients agree with tableau counts") {
    CHECK(a_coeff_plethysm(P({5}), {2}) == 2);
    CHECK(a_coeff_plethysm(P({1}), {1}) == 1);
    CHECK(a_coeff_plethysm(P({3, 1, 1}), {2}) == 0);
    const auto lambdas = small_lambdas(3, 2);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& nu : enumerate_partitions(n)) {
            for (const auto& lam : lambdas) CHECK(a_coeff_plethysm(nu, lam) == a_coeff_ssmt(nu, lam));
        }
    }
    const auto series = schur_over_monomials(P({2}), {2});
    CHECK(series.coefficient({0}) == Rational(1));
    CHECK(series.coefficient({1}) == Rational(1));
    CHECK(series.coefficient({2}) == Rational(2));
}

TEST_CASE("truncated series") {
    auto a = TruncatedSeries::one({2, 1});
    a.add({1, 0}, Rational(3));
    const auto sq = a * a;
    CHECK(sq.coefficient({0, 0}) == Rational(1));
    CHECK(sq.coefficient({1, 0}) == Rational(6));
    CHECK(sq.coefficient({2, 0}) == Rational(9));
    CHECK(sq.terms().size() == 3);
    CHECK(a.shifted({2, 1}).coefficient({2, 1}) == Rational(1));
    CHECK(a.shifted({2, 1}).terms().size() == 1);
}

TEST_CASE("lambda set") {
    CHECK(lambda_set(2, 5) == std::vector<IntegerPartition>{P({5}), P({4, 1}), P({3, 2})});
    for (int n = 1; n <= 6; ++n) CHECK(lambda_set(0, n) == std::vector<IntegerPartition>{P({n})});
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= 3; ++k) {
            std::vector<IntegerPartition> nonzero;
            for (const auto& nu : enumerate_partitions(n)) {
                if (a_coeff_ssmt(nu, {k}) > 0) nonzero.push_back(nu);
            }
            CHECK(nonzero == lambda_set(k, n));
        }
    }
}

TEST_CASE("principal specialization") {
    const auto ps = principal_specialization(P({1, 1}), 5);
    CHECK(ps.product == std::vector<BigInt>{0, 1, 1, 2, 2, 3});
    CHECK(ps.tableaux == ps.product);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& nu : enumerate_partitions(n)) {
            const auto p = principal_specialization(nu, 8);
            CHECK(p.tableaux == p.product);
            const auto low = std::find_if(p.product.begin(), p.product.end(), [](const BigInt& c) { return c != 0; });
            if (nu.b_statistic() <= 8) CHECK(low - p.product.begin() == nu.b_statistic());
        }
    }
}

TEST_CASE("characters") {
    CHECK(sn_character(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(sn_character(P({2, 1}), P({3})) == -1);
    CHECK(sn_character(P({2, 1}), P({2, 1})) == 0);
    CHECK(sn_character(P({3, 2}), P({1, 1, 1, 1, 1})) == 5);
    for (int n = 1; n <= 6; ++n) {
        BigInt sum = 0;
        for (const auto& nu : enumerate_partitions(n)) sum += sn_character(nu, P(std::vector<int>(static_cast<std::size_t>(n), 1))) * sn_character(nu, P(std::vector<int>(static_cast<std::size_t>(n), 1)));
        CHECK(sum == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("restriction coefficients") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(r_coeff(P({1}), P({n})) == 1);
        CHECK(r_coeff(P({1}), P({n - 1, 1})) == 1);
        CHECK(r_coeff_character_oracle(P({1}), P({n - 1, 1})) == 1);
    }
    CHECK(r_coeff(P({1, 1}), P({5})) == 0);
    CHECK(r_coeff(P({1, 1}), P({4, 1})) == 1);
    CHECK(r_coeff_character_oracle(P({1, 1}), P({5})) == 0);
    CHECK(r_coeff_character_oracle(P({2}), P({3, 2})) == 1);
    for (const auto& nu : enumerate_partitions(5)) CHECK(r_coeff(P({2}), nu) == a_coeff_ssmt(nu, {2}));
    CHECK_THROWS_AS(r_coeff(P({1, 1, 1}), P({2})), InvalidArgument);
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 3; ++m) {
            for (const auto& lam : enumerate_partitions(m)) {
                if (static_cast<int>(lam.length()) > n) continue;
                for (const auto& nu : enumerate_partitions(n)) {
                    const auto r = r_coeff(lam, nu);
                    CHECK(r == r_coeff_character_oracle(lam, nu));
                    CHECK(r >= 0);
                }
            }
        }
    }
}
