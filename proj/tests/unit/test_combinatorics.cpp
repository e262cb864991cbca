#include "doctest.h"
#include "mpa/combinatorics.hpp"

#include <algorithm>
#include <random>

using namespace mpa;

TEST_CASE("graded lex order") {
    CHECK(graded_lex_compare(Multiset({1}), Multiset({2})) == std::strong_ordering::less);
    CHECK(graded_lex_compare(Multiset({2}), Multiset({1, 1})) == std::strong_ordering::less);
    CHECK(graded_lex_compare(Multiset({1, 2}), Multiset({2, 1})) == std::strong_ordering::equal);
    CHECK(Multiset() < Multiset({1}));

    std::mt19937 rng(3);
    std::vector<Multiset> family;
    for (int t = 0; t < 60; ++t) {
        std::vector<int> e;
        for (int i = 0; i < static_cast<int>(rng() % 4); ++i) e.push_back(1 + static_cast<int>(rng() % 3));
        family.emplace_back(e);
    }
    std::sort(family.begin(), family.end());
    for (std::size_t i = 0; i + 1 < family.size(); ++i) CHECK(family[i] <= family[i + 1]);
    for (const auto& a : family) {
        CHECK(Multiset() <= a);
        for (const auto& b : family) {
            CHECK(((a <=> b) == 0) == (a == b));
            CHECK((a < b) == (b > a));
        }
    }
}

TEST_CASE("weak compositions") {
    const std::vector<int> two{2};
    auto m = enumerate_weak_compositions(3, two);
    REQUIRE(m.size() == 6);
    CHECK(m.front().entries() == std::vector<int>{0, 0, 2});
    CHECK(m.back().entries() == std::vector<int>{2, 0, 0});
    CHECK(std::is_sorted(m.begin(), m.end()));
    const std::vector<int> k{4};
    auto one = enumerate_weak_compositions(1, k);
    REQUIRE(one.size() == 1);
    CHECK(one[0].entries() == std::vector<int>{4});
    const std::vector<int> oo{1, 1};
    CHECK(enumerate_weak_compositions(2, oo).size() == 4);

    for (int n = 1; n <= 6; ++n) {
        for (const std::vector<int>& lam :
             std::vector<std::vector<int>>{{0}, {3}, {5}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 2}, {1, 0, 2}}) {
            auto all = enumerate_weak_compositions(n, lam);
            CHECK(BigInt(static_cast<long>(all.size())) == count_weak_compositions(n, lam));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        }
    }
}

TEST_CASE("partitions and hook lengths") {
    CHECK(count_syt(IntegerPartition({6})) == 1);
    CHECK(count_syt(IntegerPartition({4, 1})) == 4);
    CHECK(count_syt(IntegerPartition({3, 2})) == 5);
    auto p5 = enumerate_partitions(5);
    REQUIRE(p5.size() == 7);
    CHECK(p5.front() == IntegerPartition({5}));
    CHECK(p5[1] == IntegerPartition({4, 1}));
    CHECK(p5.back() == IntegerPartition({1, 1, 1, 1, 1}));
    CHECK(IntegerPartition({3, 1}).conjugate() == IntegerPartition({2, 1, 1}));
    CHECK(IntegerPartition({2, 2, 1}).b_statistic() == 4);
    for (int n = 0; n <= 7; ++n) {
        BigInt sq = 0;
        for (const auto& nu : enumerate_partitions(n)) sq += count_syt(nu) * count_syt(nu);
        CHECK(sq == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("set partitions") {
    CHECK(enumerate_set_partitions(0).size() == 1);
    CHECK(enumerate_set_partitions(3).size() == 5);
    CHECK(bell_number(4) == 15);
    CHECK(bell_number(6) == 203);
    for (int m = 0; m <= 7; ++m) CHECK(BigInt(static_cast<long>(enumerate_set_partitions(m).size())) == bell_number(m));
    auto p3 = enumerate_set_partitions(3);
    CHECK(p3.front() == std::vector<int>{0, 0, 0});
    CHECK(p3.back() == std::vector<int>{0, 1, 2});
}

TEST_CASE("semistandard multiset tableaux") {
    CHECK(enumerate_ssmt(IntegerPartition({5}), Multiset({1, 1})).size() == 2);
    CHECK(enumerate_ssmt(IntegerPartition({4, 1}), Multiset({1})).size() == 1);
    CHECK(enumerate_ssmt(IntegerPartition({3, 2}), Multiset({1, 1})).size() == 1);
    CHECK(enumerate_ssmt(IntegerPartition({4, 1}), Multiset({1, 1})).size() == 2);

    const auto only = enumerate_ssmt(IntegerPartition({2, 1}), Multiset({1}));
    REQUIRE(only.size() == 1);
    CHECK(only[0].at(1, 0) == Multiset({1}));
    CHECK(only[0].at(0, 0).empty());

    // Sum over shapes of SYT(nu) x SSMT(nu, content) recovers the dimension of Sym^lambda.
    for (int n = 1; n <= 6; ++n) {
        for (const std::vector<int>& lam :
             std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 1, 1}, {2, 1, 1}, {1, 1, 1, 1}}) {
            BigInt total = 0;
            for (const auto& nu : enumerate_partitions(n)) {
                const auto all = enumerate_ssmt(nu, Multiset::from_multiplicities(lam));
                CHECK(static_cast<std::int64_t>(all.size()) == count_ssmt(nu, lam));
                for (const auto& t : all) {
                    CHECK(t.is_semistandard());
                    CHECK(t.content() == Multiset::from_multiplicities(lam));
                }
                total += count_syt(nu) * BigInt(static_cast<long>(all.size()));
            }
            CHECK(total == count_weak_compositions(n, lam));
        }
    }
}
