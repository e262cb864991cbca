#include "doctest.h"
#include "mpa/errors.hpp"
#include "mpa/rsk.hpp"

#include <numeric>
#include <set>

using namespace mpa;

namespace {

Multiset M(std::vector<int> v) { return Multiset(std::move(v)); }

// {{1,2},{1',2'},{1,3,1'},{2,2'},{3'}} with lambda = (2,2,1).
MultisetDiagram worked_partition() {
    return canonicalize({2, 2, 1}, {{{1, 1, 0}, {0, 0, 0}},
                                    {{0, 0, 0}, {1, 1, 0}},
                                    {{1, 0, 1}, {1, 0, 0}},
                                    {{0, 1, 0}, {0, 1, 0}},
                                    {{0, 0, 0}, {0, 0, 1}}});
}

}  // namespace

TEST_CASE("biword") {
    const auto bw = to_biword(worked_partition(), 6);
    const std::vector<std::pair<Multiset, Multiset>> expect{
        {M({}), M({})}, {M({}), M({3})}, {M({}), M({1, 2})}, {M({2}), M({2})}, {M({1, 2}), M({})}, {M({1, 3}), M({1})}};
    CHECK(bw.columns == expect);
    const auto one = to_biword(canonicalize({1}, {{{1}, {1}}}), 1);
    CHECK(one.columns == std::vector<std::pair<Multiset, Multiset>>{{M({1}), M({1})}});
    CHECK_THROWS_AS(to_biword(worked_partition(), 4), InvalidArgument);
}

TEST_CASE("worked insertion") {
    const auto [t, s] = rsk(to_biword(worked_partition(), 6));
    const IntegerPartition shape({3, 2, 1});
    CHECK(t == MultisetTableau(shape, {{M({}), M({}), M({1})}, {M({2}), M({1, 2})}, {M({3})}}));
    CHECK(s == MultisetTableau(shape, {{M({}), M({}), M({})}, {M({2}), M({1, 3})}, {M({1, 2})}}));
    CHECK(inverse_rsk(t, s, {2, 2, 1}) == worked_partition());

    const auto single = rsk(to_biword(canonicalize({1}, {{{1}, {1}}}), 1));
    CHECK(single.insertion == MultisetTableau(IntegerPartition({1}), {{M({1})}}));
    CHECK(single.recording == MultisetTableau(IntegerPartition({1}), {{M({1})}}));
    CHECK(inverse_rsk(single.insertion, single.recording, {1}) == canonicalize({1}, {{{1}, {1}}}));
}

TEST_CASE("identity partition inserts into one row") {
    for (int k = 1; k <= 4; ++k) {
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i) {
            Vertex v(static_cast<std::size_t>(k), 0);
            v[static_cast<std::size_t>(i)] = 1;
            edges.push_back({v, v});
        }
        const auto [t, s] = rsk(to_biword(canonicalize(std::vector<int>(static_cast<std::size_t>(k), 1), edges), k));
        CHECK(t.shape() == IntegerPartition({k}));
        CHECK(t == s);
    }
}

TEST_CASE("inverse rejects bad input") {
    const IntegerPartition one({1});
    CHECK_THROWS_AS(inverse_rsk(MultisetTableau(one, {{M({1})}}), MultisetTableau(IntegerPartition({2}), {{M({}), M({1})}}), {1}), InvalidArgument);
    CHECK_THROWS_AS(inverse_rsk(MultisetTableau(one, {{M({1})}}), MultisetTableau(one, {{M({1, 1})}}), {1}), InvalidArgument);
}

TEST_CASE("roundtrip, image and symmetry") {
    for (const auto& lam : std::vector<std::vector<int>>{{2}, {3}, {1, 1}}) {
        const int size = std::accumulate(lam.begin(), lam.end(), 0);
        const Multiset content = Multiset::from_multiplicities(lam);
        for (int n = size; n <= 2 * size; ++n) {
            std::set<std::pair<std::string, std::string>> images;
            std::size_t diagrams = 0;
            for (const auto& d : enumerate_basis(lam)) {
                if (static_cast<int>(d.rank()) > n) continue;
                ++diagrams;
                const auto [t, s] = rsk(to_biword(d, n));
                CHECK(t.is_semistandard());
                CHECK(s.is_semistandard());
                CHECK(t.shape().size() == n);
                CHECK(t.content() == content);
                CHECK(s.content() == content);
                CHECK(inverse_rsk(t, s, lam) == d);
                images.insert({t.to_string(), s.to_string()});
                const auto rep = symmetry_check(d, n);
                CHECK(rep.transpose_swaps);
                if (rep.symmetric) CHECK(rep.fixed_blocks == rep.odd_columns);
                CHECK(transpose_partition(transpose_partition(d)) == d);
            }
            CHECK(images.size() == diagrams);
            std::size_t pairs = 0;
            for (const auto& nu : enumerate_partitions(n)) {
                const auto c = static_cast<std::size_t>(count_ssmt(nu, lam));
                pairs += c * c;
            }
            CHECK(pairs == diagrams);
        }
    }
}
