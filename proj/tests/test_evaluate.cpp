#include <catch2/catch.hpp>

#include "qgraph/classes.hpp"
#include "qgraph/cocycles.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/evaluate.hpp"
#include "qgraph/io.hpp"
#include "qgraph/verify.hpp"

#include "builders.hpp"

using namespace qgraph;
using namespace qtest;

namespace {

const std::vector<int> odd3{1, 1, 1};

Cochain drawn(const CanonicalGraph& cg) {
    Cochain c;
    c.add_canonical(cg, 1);
    return c;
}

SuperFunction term(const std::vector<int>& parities,
                   const SuperFunction::Monomial& m, const Rat& coeff) {
    SuperFunction f(parities);
    f.add_term(m, coeff);
    return f;
}

}  // namespace

TEST_CASE("comb graphs evaluate to the ad-product tensors") {
    for (const char* name : {"sl2", "affine2"}) {
        const auto L = builtin_algebra(name);
        INFO(name);
        CHECK(evaluate_graph(drawn(b_graph(2, {2})), L) ==
              bc_class(ClassSeries::B, 1, L));
        CHECK(evaluate_graph(drawn(b_graph(3, {2, 3})), L) ==
              bc_class(ClassSeries::B, 2, L));
        CHECK(evaluate_graph(drawn(b_graph(3, {3, 2})), L) ==
              bc_class(ClassSeries::B, 2, L, {3, 2}));
    }
}

TEST_CASE("cycle graphs evaluate to the ad-trace tensors") {
    const auto sl2 = builtin_algebra("sl2");
    const auto aff = affine2_algebra();

    SECTION("the two-cycle gives the killing form") {
        const auto k2 = evaluate_graph(drawn(c_graph(2, {2})), sl2);
        CHECK(k2 == bc_class(ClassSeries::C, 2, sl2));
        CHECK(k2.component({0, 1}) == SuperFunction::constant(odd3, 4));
        CHECK(k2.component({1, 0}) == SuperFunction::constant(odd3, 4));
        CHECK(k2.component({2, 2}) == SuperFunction::constant(odd3, 8));
        CHECK(k2.component({0, 0}).zero());

        const auto degenerate = evaluate_graph(drawn(c_graph(2, {2})), aff);
        CHECK(degenerate == bc_class(ClassSeries::C, 2, aff));
        CHECK(degenerate.component({0, 0}) ==
              SuperFunction::constant({1, 1}, 1));
        CHECK(degenerate.component({1, 1}).zero());
    }
    SECTION("other cycle lengths") {
        CHECK(bc_class(ClassSeries::C, 1, sl2).zero());
        CHECK(evaluate_graph(drawn(c_graph(1, {})), aff) ==
              bc_class(ClassSeries::C, 1, aff));
        CHECK(evaluate_graph(drawn(c_graph(3, {2, 3})), sl2) ==
              bc_class(ClassSeries::C, 3, sl2));
    }
    SECTION("slot permutations relabel the arguments") {
        CHECK(evaluate_graph(drawn(c_graph(3, {3, 2})), sl2) ==
              bc_class(ClassSeries::C, 3, sl2, {3, 2}));
        CHECK(bc_class(ClassSeries::C, 2, sl2, {2}) ==
              bc_class(ClassSeries::C, 2, sl2));
        CHECK_THROWS_AS(bc_class(ClassSeries::C, 2, sl2, {3}),
                        BadPermutation);
    }
}

TEST_CASE("evaluation respects the orientation") {
    const auto sl2 = builtin_algebra("sl2");
    DecoratedGraph g = b_graph(3, {2, 3}).graph;
    DecoratedGraph swapped = g;
    std::swap(swapped.ordering[0], swapped.ordering[1]);

    auto sum = evaluate_graph(g, sl2);
    sum += evaluate_graph(swapped, sl2);
    CHECK(sum.zero());
}

TEST_CASE("white vertices are rejected or zeroed on request") {
    const auto sl2 = builtin_algebra("sl2");
    CHECK_THROWS_AS(evaluate_graph(pi(1), sl2), WhiteVertexPresent);
    const auto t = evaluate_graph(pi(1), sl2, WhitePolicy::zero);
    CHECK(t.zero());
    CHECK(t.upper_count() == 0);
    CHECK(t.lower_count() == 0);
}

TEST_CASE("trace classes of the first jets") {
    const auto sl2 = builtin_algebra("sl2");
    const auto aff = affine2_algebra();

    CHECK(a_class(1, aff) == term({1, 1}, {1, 0}, 1));
    CHECK(a_class(1, sl2).zero());
    CHECK(a_class(2, sl2).zero());
}

TEST_CASE("the cubic primitive class") {
    const auto sl2 = builtin_algebra("sl2");
    const auto p = primitive_ce_class(3, sl2);
    REQUIRE_FALSE(p.zero());
    CHECK(p.coefficient({1, 1, 1}) == 24);
    CHECK(apply_field(q_from_lie(sl2), p).zero());
}

TEST_CASE("exactness of closed tensors") {
    const auto sl2 = builtin_algebra("sl2");
    const auto q = q_from_lie(sl2);

    SECTION("the killing tensor is closed but not exact") {
        const auto k = bc_class(ClassSeries::C, 2, sl2);
        CHECK(lie_derivative(q, k).zero());
        CHECK_FALSE(is_exact(k, sl2).exact);
    }
    SECTION("derivatives are recognized with a primitive") {
        SuperTensor s(odd3, 1, 1);
        s.add_component({0, 1}, SuperFunction::coordinate(odd3, 2));
        const auto t = lie_derivative(q, s);
        REQUIRE_FALSE(t.zero());
        const auto res = is_exact(t, sl2);
        REQUIRE(res.exact);
        CHECK(lie_derivative(q, res.primitive) == t);
    }
    SECTION("non-closed input is refused") {
        SuperTensor t(odd3, 0, 1);
        t.add_component({0}, SuperFunction::constant(odd3, 1));
        REQUIRE_FALSE(lie_derivative(q, t).zero());
        CHECK_THROWS_AS(is_exact(t, sl2), NotACocycle);
    }
    SECTION("an exact function with its primitive") {
        const auto f = SuperFunction::coordinate(odd3, 0) *
                       SuperFunction::coordinate(odd3, 1);
        REQUIRE(apply_field(q, f).zero());
        const auto res = is_exact(f, sl2);
        REQUIRE(res.exact);
        CHECK(res.primitive.component({}) == term(odd3, {0, 0, 1}, -1));
    }
}

TEST_CASE("verification suites") {
    SECTION("the loop primitive suite passes") {
        VerifyOptions o;
        o.psi_pi_max_n = 1;
        const auto report = run_suite("psi-pi", o);
        CHECK(report.passed());
        CHECK(report.suite == "psi-pi");
        REQUIRE_FALSE(report.checks.empty());
        const auto json = report_to_json(report);
        CHECK(json.find("\"suite\"") != std::string::npos);
        CHECK(json.find("\"checks\"") != std::string::npos);
    }
    SECTION("unknown suites are refused") {
        CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
    }
    SECTION("the algebra laws hold for a nilpotent example") {
        CHECK(lie_example_suite(heisenberg3_algebra(), "(h3)").passed());
    }
}

TEST_CASE("serialization") {
    SECTION("graphs round trip through json") {
        const DecoratedGraph g = b_graph(4, {2, 3, 4}).graph;
        const auto text = graph_to_json(g);
        CHECK(text.find('\n') == std::string::npos);
        CHECK(graph_key(graph_from_json(text)) == graph_key(g));
    }
    SECTION("cochains round trip through json") {
        const Cochain c = psi(2);
        CHECK(cochain_from_json(cochain_to_json(c)) == c);
    }
    SECTION("dot output is graphviz text") {
        const auto dot = graph_to_dot(white_cycle(2));
        CHECK(dot.find("digraph") != std::string::npos);
    }
    SECTION("malformed graph json is rejected") {
        CHECK_THROWS_AS(graph_from_json("{}"), InvalidGraph);
        CHECK_THROWS_AS(graph_from_json("not json at all"), InvalidGraph);
    }
    SECTION("tensors print exact rationals") {
        const auto sl2 = builtin_algebra("sl2");
        const auto text = tensor_to_json(bc_class(ClassSeries::C, 2, sl2));
        CHECK(text.find("\"4/1\"") != std::string::npos);
        CHECK(text.find("\"8/1\"") != std::string::npos);
    }
}
