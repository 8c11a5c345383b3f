#include <catch2/catch.hpp>

#include "qgraph/coboundary.hpp"
#include "qgraph/cocycles.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/homology.hpp"
#include "qgraph/linalg.hpp"

#include "builders.hpp"

using namespace qgraph;
using namespace qtest;

TEST_CASE("exact elimination") {
    SECTION("rank and kernel of a rational matrix") {
        RatMatrix m(2, 3);
        m.at(0, 0) = 1;
        m.at(0, 1) = 1;
        m.at(1, 2) = Rat(1) / 3;
        CHECK(rank(m) == 2);

        const auto kernel = kernel_basis(m);
        REQUIRE(kernel.size() == 1);
        for (std::size_t r = 0; r < 2; ++r) {
            Rat acc = 0;
            for (std::size_t c = 0; c < 3; ++c) acc += m.at(r, c) * kernel[0][c];
            CHECK(acc == 0);
        }
    }
    SECTION("solve returns an exact witness or nothing") {
        RatMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(0, 1) = 1;
        m.at(1, 0) = 4;
        m.at(1, 1) = 2;
        CHECK_FALSE(solve(m, {1, 3}).has_value());
        const auto x = solve(m, {3, 6});
        REQUIRE(x.has_value());
        CHECK(2 * (*x)[0] + (*x)[1] == 3);
    }
    SECTION("echelonize reports pivot columns") {
        RatMatrix m(2, 3);
        m.at(0, 1) = 5;
        m.at(1, 1) = 10;
        m.at(1, 2) = 1;
        const auto pivots = m.echelonize();
        CHECK(pivots == std::vector<std::size_t>{1, 2});
    }
}

TEST_CASE("white slot relations cut the expected quotient") {
    const auto basis = sector_basis(Subcomplex::G4, 3, 1, 0);
    REQUIRE(basis.size() == 3);
    RatMatrix relations = relation_matrix(basis);
    CHECK(rank(relations) == 1);
}

TEST_CASE("operator matrix of the coboundary between tree sectors") {
    const auto source = sector_basis(Subcomplex::G3, 3, 1, 1);
    const auto target = sector_basis(Subcomplex::G3, 3, 1, 2);
    REQUIRE(source.size() == 1);
    REQUIRE(target.size() == 3);

    const RatMatrix m = operator_matrix(
        source, target, [](const DecoratedGraph& g) { return coboundary(g); });
    CHECK(rank(m) == 1);
    int nonzero = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m.at(r, 0) != 0) {
            ++nonzero;
            CHECK((m.at(r, 0) == 1 || m.at(r, 0) == -1));
        }
    CHECK(nonzero == 3);
}

TEST_CASE("images leaving the target span are detected") {
    const auto source = sector_basis(Subcomplex::G3, 3, 1, 1);
    CHECK_THROWS_AS(
        operator_matrix(source, source,
                        [](const DecoratedGraph& g) { return coboundary(g); }),
        BasisNotClosed);
}

TEST_CASE("cohomology dimensions of small sectors") {
    SECTION("trees at top degree") {
        CHECK(betti(Subcomplex::G3, 2, 1, 1) == 1);
        CHECK(betti(Subcomplex::G3, 3, 1, 2) == 2);
    }
    SECTION("one-loop graphs at top degree") {
        CHECK(betti(Subcomplex::G3, 2, 0, 2) == 1);
        CHECK(betti(Subcomplex::G3, 3, 0, 3) == 2);
    }
    SECTION("the bivalent loop sector is acyclic") {
        for (int k = 1; k <= 5; ++k) {
            INFO("k*=" << k);
            CHECK(betti(Subcomplex::G2, 0, 0, k) == 0);
        }
    }
    SECTION("the generator sector") {
        const auto b = betti_breakdown(Subcomplex::G1, 0, 1, 1);
        CHECK(b.dim_space == 1);
        CHECK(b.rank_in == 0);
        CHECK(b.rank_out == 0);
        CHECK(b.betti == 1);
    }
    SECTION("leading-differential cohomology of G4 sectors vanishes") {
        CHECK(betti(Subcomplex::G4, 1, 1, 2) == 0);
        CHECK(betti(Subcomplex::G4, 2, 1, 1) == 0);
        CHECK(betti(Subcomplex::G4, 3, 1, 1) == 0);
        CHECK(betti(Subcomplex::G4, 2, 0, 2) == 0);
    }
}

TEST_CASE("coboundary solve recovers the loop primitive") {
    const auto cert = is_coboundary(pi(1));
    CHECK(cert.is_coboundary);
    CHECK(cert.rank_without == cert.rank_with);
    CHECK(cert.primitive == psi(1));
    CHECK(coboundary(cert.primitive) == pi(1));
}

TEST_CASE("coboundary solve at the next loop order") {
    const auto cert = is_coboundary(pi(2));
    CHECK(cert.is_coboundary);
    CHECK(coboundary(cert.primitive) == pi(2));
}

TEST_CASE("a closed cycle class is not a coboundary") {
    Cochain z;
    z.add_canonical(c_graph(2, {2}), 1);
    REQUIRE(coboundary(z).zero());
    const auto cert = is_coboundary(z);
    CHECK_FALSE(cert.is_coboundary);
    CHECK(cert.rank_with == cert.rank_without + 1);
    CHECK(cert.primitive.zero());
}

TEST_CASE("coboundary solve rejects bad input") {
    SECTION("non-closed cochains") {
        Cochain z;
        z.add(star_black(3), 1);
        CHECK_THROWS_AS(is_coboundary(z), NotACocycle);
    }
    SECTION("mixed effective degrees") {
        Cochain z;
        z.add(star_black(3), 1);
        DecoratedGraph t;
        t.vertices = {{0, Color::Black, 2}, {1, Color::Black, 2}};
        t.edges = {{1, 0, 2}};
        t.in_legs[1] = {0, 1};
        t.in_legs[2] = {1, 1};
        t.in_legs[3] = {1, 2};
        t.out_legs[1] = 0;
        t.ordering = {0, 1};
        z.add(t, 1);
        REQUIRE(z.homogeneous_degree() == -1);
        CHECK_THROWS_AS(is_coboundary(z), InvalidGraph);
    }
}
