#include "doctest.h"
#include "mpa/errors.hpp"
#include "mpa/multiset_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace mpa;

namespace {

MultisetDiagram G1(std::vector<std::pair<int, int>> edges, int k) {
    std::vector<Edge> raw;
    for (auto [a, b] : edges) raw.push_back({{a}, {b}});
    return canonicalize({k}, raw);
}

MPElement random_mp(const std::vector<MultisetDiagram>& basis, std::mt19937& rng) {
    MPElement e(basis.front().lambda());
    for (int t = 0; t < 2; ++t) e.add(basis[rng() % basis.size()], Poly(std::vector<Rational>{static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 2)}));
    return e;
}

}  // namespace

TEST_CASE("canonicalize") {
    // Two representatives of the same rank-four class, one with an extra (0,0) edge.
    const auto a = G1({{0, 1}, {0, 1}, {2, 3}, {3, 0}}, 5);
    const auto b = G1({{3, 0}, {0, 0}, {0, 1}, {2, 3}, {0, 1}}, 5);
    CHECK(a == b);
    CHECK(a.rank() == 4);
    CHECK(canonicalize({0}, {{{0}, {0}}, {{0}, {0}}}).rank() == 0);
    const auto c = G1({{2, 1}, {0, 1}}, 2);
    CHECK(c.edges() == std::vector<Edge>{{{0}, {1}}, {{2}, {1}}});
    CHECK_THROWS_AS(G1({{2, 1}}, 2), MalformedDiagram);
    CHECK_THROWS_AS(G1({{3, 2}}, 2), MalformedDiagram);
}

TEST_CASE("basis sizes") {
    CHECK(enumerate_basis({1}).size() == 2);
    CHECK(enumerate_basis({2}).size() == 9);
    CHECK(enumerate_basis({3}).size() == 31);
    CHECK(enumerate_basis({1, 1}).size() == 15);
    CHECK(enumerate_basis({1, 1, 1}).size() == 203);
    CHECK(enumerate_basis({0}).size() == 1);
    for (const auto& lam : std::vector<std::vector<int>>{{2}, {2, 1}, {3}}) {
        const auto basis = enumerate_basis(lam);
        CHECK(std::is_sorted(basis.begin(), basis.end()));
        CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
    }
}

TEST_CASE("worked k=2 product") {
    const auto g = G1({{0, 1}, {1, 0}, {1, 1}}, 2);
    const auto doubled = G1({{1, 1}, {1, 1}}, 2);
    const auto cross = G1({{0, 1}, {0, 1}, {1, 0}, {1, 0}}, 2);
    const auto configs = path_configurations(g, g, 4);
    std::size_t total = 0;
    for (const auto& [cls, list] : configs) total += list.size();
    CHECK(total == 4);
    CHECK(configs.at(g).size() == 2);
    CHECK(structure_poly(g, g, g) == Poly::xi_plus(-2));
    CHECK(structure_poly(g, g, doubled) == Poly::xi_plus(-2) * Rational(2));
    CHECK(structure_poly(g, g, cross) == Poly(4));
    MPElement expect = MPElement::basis_element(g, Poly::xi_plus(-2));
    expect.add(doubled, Poly::xi_plus(-2) * Rational(2));
    expect.add(cross, Poly(4));
    CHECK(multiply_basis(g, g) == expect);
    CHECK(structure_poly(g, g, G1({{2, 2}}, 2)).is_zero());
}

TEST_CASE("loop through a middle vertex needs extra padding") {
    const auto g = G1({{0, 1}, {1, 0}}, 1);
    MPElement expect = MPElement::basis_element(G1({{1, 1}}, 1), Poly::xi_plus(-1));
    expect.add(g, Poly::xi_plus(-2));
    CHECK(multiply_basis(g, g) == expect);
}

TEST_CASE("identity and associativity") {
    std::mt19937 rng(4);
    for (const auto& lam : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {2, 1}}) {
        const auto basis = enumerate_basis(lam);
        const auto id = identity(lam);
        for (const auto& g : basis) {
            const auto e = MPElement::basis_element(g);
            CHECK(multiply(id, e) == e);
            CHECK(multiply(e, id) == e);
        }
        for (int t = 0; t < 6; ++t) {
            const auto a = random_mp(basis, rng), b = random_mp(basis, rng), c = random_mp(basis, rng);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        }
    }
    CHECK_THROWS_AS(multiply(identity({2}), identity({1, 1})), InvalidArgument);
}

TEST_CASE("canonical partition diagram and orbits") {
    const auto g = G1({{0, 0}, {0, 1}, {2, 1}}, 2);
    CHECK(canonical_partition_diagram(g) == SetPartitionDiagram::from_blocks(2, {{-1}, {1, 2, -2}}));
    const auto orb = orbit(g);
    REQUIRE(orb.size() == 2);
    CHECK(std::find(orb.begin(), orb.end(), SetPartitionDiagram::from_blocks(2, {{1, 2, -2}, {-1}})) != orb.end());
    CHECK(std::find(orb.begin(), orb.end(), SetPartitionDiagram::from_blocks(2, {{1, 2, -1}, {-2}})) != orb.end());

    const auto g21 = canonicalize({2, 1}, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{2, 0}, {0, 0}}});
    CHECK(canonical_partition_diagram(g21) == SetPartitionDiagram::from_blocks(3, {{-1}, {3, -2, -3}, {1, 2}}));
    CHECK(canonical_partition_diagram(G1({{1, 1}}, 1)) == SetPartitionDiagram::identity(1));

    for (const auto& lam : std::vector<std::vector<int>>{{2}, {1, 1}, {3}, {2, 1}}) {
        std::set<SetPartitionDiagram> covered;
        std::size_t total = 0;
        for (const auto& cls : enumerate_basis(lam)) {
            for (const auto& d : orbit(cls)) {
                covered.insert(d);
                CHECK(class_of_partition_diagram(d, lam) == cls);
                ++total;
            }
        }
        const int k = std::accumulate(lam.begin(), lam.end(), 0);
        CHECK(total == covered.size());
        CHECK(covered.size() == enumerate_diagrams(k).size());
    }
    for (const auto& cls : enumerate_basis({1, 1, 1})) CHECK(orbit(cls).size() == 1);
}

TEST_CASE("embedding") {
    const auto g = G1({{0, 0}, {0, 1}, {2, 1}}, 2);
    PAElement expect(2, PABasis::Orbit);
    expect.add(SetPartitionDiagram::from_blocks(2, {{1, 2, -2}, {-1}}), Poly(Rational(1, 2)));
    expect.add(SetPartitionDiagram::from_blocks(2, {{1, 2, -1}, {-2}}), Poly(Rational(1, 2)));
    CHECK(embed(MPElement::basis_element(g)) == expect);

    for (const auto& lam : std::vector<std::vector<int>>{{2}, {1, 1}, {3}, {2, 1}}) {
        CHECK(embed(identity(lam)) == idempotent_e(lam));
        const auto basis = enumerate_basis(lam);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                const auto ea = embed(MPElement::basis_element(a));
                const auto eb = embed(MPElement::basis_element(b));
                CHECK(embed(multiply_basis(a, b)) == multiply_orbit_basis(ea, eb));
            }
        }
    }
}

TEST_CASE("idempotent e") {
    const auto e2 = idempotent_e({2});
    PAElement expect(2, PABasis::Orbit);
    expect.add(SetPartitionDiagram::from_blocks(2, {{1, -1}, {2, -2}}), Poly(Rational(1, 2)));
    expect.add(SetPartitionDiagram::from_blocks(2, {{1, -2}, {2, -1}}), Poly(Rational(1, 2)));
    expect.add(SetPartitionDiagram::from_blocks(2, {{1, 2, -1, -2}}), Poly(1));
    CHECK(e2 == expect);
    for (int k = 1; k <= 3; ++k) {
        const auto e = idempotent_e({k});
        CHECK(multiply_orbit_basis(e, e) == e);
        CHECK(involution_i(e) == e);
    }
}

TEST_CASE("e x e lands in the image") {
    const auto e = idempotent_e({2});
    for (const auto& d0 : enumerate_diagrams(2)) {
        const auto exe = multiply_orbit_basis(multiply_orbit_basis(e, PAElement::basis_element(d0, PABasis::Orbit)), e);
        const auto image = embed(MPElement::basis_element(class_of_partition_diagram(d0, {2})));
        REQUIRE(!exe.is_zero());
        // exe = c * image for a constant rational c.
        const auto& [d, p] = *image.terms().begin();
        const Poly ratio = exe.coefficient(d);
        REQUIRE(ratio.is_constant());
        const Rational c = ratio.coefficient(0) / p.coefficient(0);
        CHECK(exe == image * Poly(c));
    }
}

TEST_CASE("balanced subalgebra") {
    CHECK(is_balanced(G1({{1, 1}}, 1)));
    CHECK(!is_balanced(G1({{2, 1}, {0, 1}}, 2)));
    for (const auto& lam : std::vector<std::vector<int>>{{2}, {1, 1}}) {
        const auto bal = balanced_basis(lam);
        for (const auto& a : bal) {
            for (const auto& b : bal) {
                const auto prod = multiply_basis(a, b);
                for (const auto& [g, p] : prod.terms()) {
                    CHECK(is_balanced(g));
                    CHECK(p.is_constant());
                }
            }
        }
    }
}

TEST_CASE("transpose") {
    const auto g = G1({{2, 1}, {0, 1}}, 2);
    CHECK(transpose(g) == G1({{1, 2}, {1, 0}}, 2));
    for (const auto& x : enumerate_basis({2, 1})) CHECK(transpose(transpose(x)) == x);
}
