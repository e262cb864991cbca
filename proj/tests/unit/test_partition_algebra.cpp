#include "doctest.h"
#include "mpa/errors.hpp"
#include "mpa/partition_algebra.hpp"

#include <random>

using namespace mpa;

namespace {

SetPartitionDiagram D(int k, std::vector<std::vector<int>> blocks) { return SetPartitionDiagram::from_blocks(k, blocks); }

PAElement random_element(int k, PABasis basis, std::mt19937& rng, const std::vector<SetPartitionDiagram>& all) {
    PAElement e(k, basis);
    for (int t = 0; t < 3; ++t) {
        const auto& d = all[rng() % all.size()];
        e.add(d, Poly(std::vector<Rational>{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3)}));
    }
    return e;
}

}  // namespace

TEST_CASE("canonical diagram form") {
    const auto d = D(5, {{3, 5, -4}, {1, -3, 2, -1}, {-5, 4, -2}});
    CHECK(d.blocks() == std::vector<std::vector<int>>{{1, 2, -1, -3}, {3, 5, -4}, {4, -2, -5}});
    CHECK(d.to_string() == "{{1,2,1',3'},{3,5,4'},{4,2',5'}}");
    CHECK_THROWS_AS(D(2, {{1, -1}, {2}}), MalformedDiagram);
    CHECK_THROWS_AS(D(1, {{1, -1}, {1}}), MalformedDiagram);
    CHECK(enumerate_diagrams(1).size() == 2);
    CHECK(enumerate_diagrams(2).size() == 15);
    CHECK(enumerate_diagrams(3).size() == 203);
}

TEST_CASE("diagram composition") {
    const auto d2 = D(5, {{1, 2, -1}, {3, 5}, {-2, -3}, {-4}, {4, -5}});
    const auto d1 = D(5, {{1, -1}, {2}, {3}, {4}, {-2, -3}, {5, -4, -5}});
    const auto comp = compose_diagrams(d1, d2);
    CHECK(comp.middle_components == 2);
    CHECK(comp.diagram == D(5, {{1, 2, -1}, {3, 5}, {4, -4, -5}, {-2, -3}}));

    const auto prod = multiply_diagram_basis(PAElement::basis_element(d1, PABasis::Diagram),
                                             PAElement::basis_element(d2, PABasis::Diagram));
    CHECK(prod == PAElement::basis_element(comp.diagram, PABasis::Diagram, Poly::xi_power(2)));

    for (const auto& d : enumerate_diagrams(2)) {
        const auto id = SetPartitionDiagram::identity(2);
        CHECK(compose_diagrams(id, d).diagram == d);
        CHECK(compose_diagrams(d, id).diagram == d);
        CHECK(compose_diagrams(id, d).middle_components == 0);
    }
    const auto s = D(1, {{1}, {-1}});
    CHECK(compose_diagrams(s, s).diagram == s);
    CHECK(compose_diagrams(s, s).middle_components == 1);
    const auto ss = multiply_diagram_basis(PAElement::basis_element(s, PABasis::Diagram), PAElement::basis_element(s, PABasis::Diagram));
    CHECK(ss == PAElement::basis_element(s, PABasis::Diagram, Poly::xi()));
    CHECK_THROWS_AS(multiply_diagram_basis(PAElement::basis_element(s, PABasis::Orbit), PAElement::basis_element(s, PABasis::Diagram)),
                    InvalidArgument);
}

TEST_CASE("diagram multiplication is associative") {
    std::mt19937 rng(5);
    for (int k = 1; k <= 3; ++k) {
        const auto all = enumerate_diagrams(k);
        for (int t = 0; t < 25; ++t) {
            const auto a = random_element(k, PABasis::Diagram, rng, all);
            const auto b = random_element(k, PABasis::Diagram, rng, all);
            const auto c = random_element(k, PABasis::Diagram, rng, all);
            CHECK(multiply_diagram_basis(multiply_diagram_basis(a, b), c) == multiply_diagram_basis(a, multiply_diagram_basis(b, c)));
        }
    }
}

TEST_CASE("orbit basis change") {
    const auto through = D(1, {{1, -1}});
    const auto split = D(1, {{1}, {-1}});
    CHECK(orbit_from_diagram(PAElement::basis_element(through, PABasis::Diagram)) == PAElement::basis_element(through, PABasis::Orbit));
    auto expect = PAElement::basis_element(split, PABasis::Orbit);
    expect.add(through, Poly(1));
    CHECK(orbit_from_diagram(PAElement::basis_element(split, PABasis::Diagram)) == expect);

    std::mt19937 rng(9);
    const auto all = enumerate_diagrams(3);
    for (int t = 0; t < 40; ++t) {
        const auto a = random_element(3, PABasis::Diagram, rng, all);
        CHECK(diagram_from_orbit(orbit_from_diagram(a)) == a);
        const auto b = random_element(3, PABasis::Orbit, rng, all);
        CHECK(orbit_from_diagram(diagram_from_orbit(b)) == b);
    }
    // Unitriangular: the finest term of the expansion of d is d itself with coefficient 1.
    for (const auto& d : all) {
        const auto e = orbit_from_diagram(PAElement::basis_element(d, PABasis::Diagram));
        CHECK(e.coefficient(d) == Poly(1));
        for (const auto& [dp, c] : e.terms()) CHECK((dp == d || dp.block_count() < d.block_count()));
    }
}

TEST_CASE("orbit basis products") {
    const auto through = D(1, {{1, -1}});
    const auto split = D(1, {{1}, {-1}});
    const auto xt = PAElement::basis_element(through, PABasis::Orbit);
    const auto xs = PAElement::basis_element(split, PABasis::Orbit);
    CHECK(multiply_orbit_basis(xt, xt) == xt);
    auto expect = PAElement::basis_element(split, PABasis::Orbit, Poly::xi_plus(-2));
    expect.add(through, Poly::xi_plus(-1));
    CHECK(multiply_orbit_basis(xs, xs) == expect);

    for (int k = 1; k <= 2; ++k) {
        const auto all = enumerate_diagrams(k);
        for (const auto& d1 : all) {
            for (const auto& d2 : all) {
                const auto a = PAElement::basis_element(d1, PABasis::Diagram);
                const auto b = PAElement::basis_element(d2, PABasis::Diagram);
                CHECK(orbit_from_diagram(multiply_diagram_basis(a, b)) ==
                      multiply_orbit_basis(orbit_from_diagram(a), orbit_from_diagram(b)));
            }
        }
    }
}

TEST_CASE("involution") {
    const auto sym = D(2, {{1, -2}, {2, -1}});
    CHECK(involution_i(sym) == sym);
    const auto d = D(5, {{1, 2, -1, -3}, {3, 5, -4}, {4, -2, -5}});
    CHECK(involution_i(d) == D(5, {{-1, -2, 1, 3}, {-3, -5, 4}, {-4, 2, 5}}));
    std::mt19937 rng(2);
    for (int k = 1; k <= 3; ++k) {
        const auto all = enumerate_diagrams(k);
        for (const auto& x : all) CHECK(involution_i(involution_i(x)) == x);
        for (int t = 0; t < 60; ++t) {
            const auto a = PAElement::basis_element(all[rng() % all.size()], PABasis::Diagram);
            const auto b = PAElement::basis_element(all[rng() % all.size()], PABasis::Diagram);
            CHECK(involution_i(multiply_diagram_basis(a, b)) == multiply_diagram_basis(involution_i(b), involution_i(a)));
        }
    }
}

TEST_CASE("alpha") {
    CHECK(alpha(D(2, {{1, -1}, {2, -2}})) == Rational(2));
    CHECK(alpha(D(2, {{1, 2, -1, -2}})) == Rational(1));
    CHECK(alpha(D(3, {{1, -1}, {2, 3, -2, -3}})) == Rational(3));
}

TEST_CASE("phi_k action") {
    const auto through = D(1, {{1, -1}});
    const auto split = D(1, {{1}, {-1}});
    CHECK(phi_k_matrix(PAElement::basis_element(through, PABasis::Orbit), 2) == Matrix::identity(2));
    Matrix off(2, 2);
    off(0, 1) = off(1, 0) = Rational(1);
    CHECK(phi_k_matrix(PAElement::basis_element(split, PABasis::Orbit), 2) == off);
    CHECK(phi_k_matrix(PAElement::basis_element(D(2, {{1}, {2}, {-1}, {-2}}), PABasis::Orbit), 3).is_zero());
    CHECK_THROWS_AS(phi_k_matrix(PAElement::basis_element(through, PABasis::Orbit), 30000), ResourceError);

    // Diagram d acts by its coarsening sum: a 0/1 matrix with ones exactly where the pattern is at least as coarse.
    CHECK(phi_k_matrix(PAElement::basis_element(split, PABasis::Diagram), 3) == [] {
        Matrix ones(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) ones(i, j) = Rational(1);
        return ones;
    }());

    for (int k = 1; k <= 2; ++k) {
        const auto all = enumerate_diagrams(k);
        for (int n = 1; n <= 4; ++n) {
            std::vector<Matrix> mats;
            for (const auto& d : all) mats.push_back(phi_k_matrix(PAElement::basis_element(d, PABasis::Orbit), n));
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (std::size_t j = 0; j < all.size(); ++j) {
                    const auto prod = orbit_product(all[i], all[j]);
                    CHECK(phi_k_matrix(prod, n) == mats[i] * mats[j]);
                }
            }
        }
    }
}

TEST_CASE("phi_k kernel is spanned by diagrams with too many blocks") {
    const auto all = enumerate_diagrams(2);
    for (int n = 2; n <= 3; ++n) {
        std::vector<std::vector<Rational>> images;
        std::size_t big = 0;
        for (const auto& d : all) {
            images.push_back(phi_k_matrix(PAElement::basis_element(d, PABasis::Orbit), n).flat());
            if (d.block_count() > n) ++big;
        }
        CHECK(span_rank(images) == all.size() - big);
    }
}
