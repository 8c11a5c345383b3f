#include <catch2/catch.hpp>

#include "qgraph/coboundary.hpp"
#include "qgraph/cocycles.hpp"
#include "qgraph/errors.hpp"

#include "builders.hpp"

#include <map>
#include <set>

using namespace qgraph;
using namespace qtest;

namespace {

Cochain as_cochain(const DecoratedGraph& g, Rat coeff = 1) {
    Cochain c;
    c.add(g, coeff);
    return c;
}

std::pair<int, int> color_count(const DecoratedGraph& g) {
    int blacks = 0, whites = 0;
    for (const auto& v : g.vertices)
        (v.color == Color::Black ? blacks : whites)++;
    return {blacks, whites};
}

}  // namespace

TEST_CASE("loop cocycles") {
    CHECK(pi(1) == as_cochain(white_cycle(1), -1));
    CHECK(pi(2) == as_cochain(white_cycle(3), -10));
}

TEST_CASE("loop primitives") {
    CHECK(psi(1) == as_cochain(black_cycle(1), 1));

    const Cochain p2 = psi(2);
    REQUIRE_FALSE(p2.zero());
    CHECK(p2.homogeneous_degree() == 5);
    std::set<std::pair<int, int>> seen;
    for (const auto& [key, term] : p2.terms())
        seen.insert(color_count(term.first));
    CHECK(seen ==
          std::set<std::pair<int, int>>{{5, 0}, {3, 1}, {1, 2}});
}

TEST_CASE("the primitives bound the cocycles") {
    CHECK(coboundary(psi(1)) == pi(1));
    CHECK(coboundary(psi(2)) == pi(2));
}

TEST_CASE("recoloring a cyclic graph") {
    SECTION("the one-vertex loop recolors to the composite loop") {
        CHECK(op_a(as_cochain(black_cycle(1))) == as_cochain(white_cycle(1)));
    }
    SECTION("all-white cycles are annihilated") {
        CHECK(op_a(as_cochain(white_cycle(2))).zero());
    }
    SECTION("only cyclic bivalent graphs are accepted") {
        CHECK_THROWS_AS(op_a(as_cochain(bivalent_chain(2))), NotCyclic);
    }
}

namespace {

// loop whose vertices follow the given colors in edge order
DecoratedGraph colored_cycle(const std::vector<Color>& colors) {
    DecoratedGraph g;
    const int n = static_cast<int>(colors.size());
    for (int i = 0; i < n; ++i) {
        g.vertices.push_back({i, colors[i], 1});
        g.edges.push_back({i, (i + 1) % n, 1});
        g.ordering.push_back(i);
    }
    return g;
}

}  // namespace

TEST_CASE("arc averaging") {
    SECTION("a single arc of two black vertices") {
        const auto g = colored_cycle({Color::Black, Color::Black, Color::White});
        CHECK(op_b(as_cochain(g)) == as_cochain(g, 1));
    }
    SECTION("two arcs halve the coefficient") {
        const auto g = colored_cycle(
            {Color::Black, Color::White, Color::Black, Color::White});
        CHECK(op_b(as_cochain(g)) == as_cochain(g, Rat(1) / 2));
    }
    SECTION("monochrome cycles have no arcs") {
        CHECK_THROWS_AS(op_b(as_cochain(black_cycle(3))), NoNonzeroArcs);
        CHECK_THROWS_AS(op_b(as_cochain(white_cycle(2))), NoNonzeroArcs);
    }
}

TEST_CASE("arc shortening") {
    const auto g = colored_cycle({Color::Black, Color::Black, Color::White});
    const auto shortened = op_c(as_cochain(g));
    CHECK(shortened ==
          as_cochain(colored_cycle({Color::Black, Color::White}), -1));
    CHECK_THROWS_AS(op_c(as_cochain(white_cycle(3))), NoNonzeroArcs);
}

TEST_CASE("decorated comb graphs") {
    const auto b = b_graph(3, {2, 3});
    REQUIRE(b.sign != 0);
    CHECK(b.graph.n_in() == 3);
    CHECK(b.graph.m_out() == 1);
    CHECK(b.graph.vertices.size() == 2);
    for (const auto& v : b.graph.vertices) {
        CHECK(v.color == Color::Black);
        CHECK(v.in_arity == 2);
    }
}

TEST_CASE("decorated cycle graphs") {
    const auto c = c_graph(3, {2, 3});
    REQUIRE(c.sign != 0);
    CHECK(c.graph.n_in() == 3);
    CHECK(c.graph.m_out() == 0);
    CHECK(c.graph.vertices.size() == 3);
    CHECK(c.graph.edges.size() == 3);

    SECTION("the permutation is part of the graph") {
        const auto other = c_graph(3, {3, 2});
        CHECK(graph_key(c.graph) != graph_key(other.graph));
    }
    SECTION("the one-vertex cycle exists") {
        const auto c1 = c_graph(1, {});
        CHECK(c1.graph.vertices.size() == 1);
        CHECK(c1.graph.n_in() == 1);
    }
}

TEST_CASE("tail permutations are checked") {
    CHECK_THROWS_AS(b_graph(3, {2}), BadPermutation);
    CHECK_THROWS_AS(b_graph(3, {2, 2}), BadPermutation);
    CHECK_THROWS_AS(b_graph(3, {1, 2}), BadPermutation);
    CHECK_THROWS_AS(b_graph(3, {2, 4}), BadPermutation);
    CHECK_THROWS_AS(b_graph(1, {}), BadPermutation);
    CHECK_THROWS_AS(c_graph(0, {}), BadPermutation);
}
