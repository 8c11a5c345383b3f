#include <catch2/catch.hpp>

#include "qgraph/errors.hpp"
#include "qgraph/lie.hpp"
#include "qgraph/superfun.hpp"
#include "qgraph/tensor.hpp"

using namespace qgraph;

namespace {

const std::vector<int> odd3{1, 1, 1};

SuperFunction c(int index, const std::vector<int>& parities = odd3) {
    return SuperFunction::coordinate(parities, index);
}

SuperFunction term(const SuperFunction::Monomial& m, const Rat& coeff,
                   const std::vector<int>& parities = odd3) {
    SuperFunction f(parities);
    f.add_term(m, coeff);
    return f;
}

}  // namespace

TEST_CASE("graded coordinate algebra") {
    SECTION("odd coordinates anticommute and square to zero") {
        CHECK(c(0) * c(1) == term({1, 1, 0}, 1));
        CHECK((c(1) * c(0)).coefficient({1, 1, 0}) == -1);
        CHECK((c(0) * c(0)).zero());
    }
    SECTION("even coordinates commute") {
        const std::vector<int> p{0, 1};
        const auto x = c(0, p);
        CHECK(x * x == term({2, 0}, 1, p));
        CHECK(x * c(1, p) == c(1, p) * x);
    }
    SECTION("left derivative") {
        const auto f = c(0) * c(1);
        CHECK(f.left_derivative(0) == c(1));
        CHECK(f.left_derivative(1) == term({1, 0, 0}, -1));
        CHECK(f.left_derivative(2).zero());
    }
    SECTION("parity and degree decomposition") {
        CHECK(c(0).parity() == 1);
        CHECK((c(0) * c(1)).parity() == 0);
        auto mixed = c(0);
        mixed += c(0) * c(1);
        CHECK(mixed.parity() == -1);
        const auto parts = mixed.degree_parts();
        REQUIRE(parts.size() == 2);
        CHECK(parts.at(1) == c(0));
        CHECK(parts.at(2) == c(0) * c(1));
    }
    SECTION("monomial bases respect the parity caps") {
        CHECK(monomials_of_degree(odd3, 2).size() == 3);
        CHECK(monomials_of_degree({0, 1}, 2).size() == 2);
        CHECK(monomials_of_degree(odd3, 4).empty());
    }
    SECTION("the context-free zero is absorbed") {
        SuperFunction z;
        CHECK(z.zero());
        z += c(0);
        CHECK(z == c(0));
        auto w = c(1);
        w -= SuperFunction();
        CHECK(w == c(1));
    }
}

TEST_CASE("structure constant tables") {
    SECTION("sl2 in the e, f, h basis") {
        const auto L = builtin_algebra("sl2");
        CHECK(L.dim == 3);
        CHECK(L.structure(0, 1, 2) == 1);
        CHECK(L.structure(2, 0, 0) == 2);
        CHECK(L.structure(2, 1, 1) == -2);
        CHECK(L.structure(0, 0, 0) == 0);
        CHECK_NOTHROW(validate_algebra(L));

        const auto ad_h = ad_matrix(L, 2);
        CHECK(ad_h.at(0, 0) == 2);
        CHECK(ad_h.at(1, 1) == -2);
        CHECK(ad_h.at(2, 2) == 0);
        CHECK(ad_h.at(0, 1) == 0);

        const auto k = killing_form(L);
        CHECK(k.at(0, 1) == 4);
        CHECK(k.at(1, 0) == 4);
        CHECK(k.at(2, 2) == 8);
        CHECK(k.at(0, 0) == 0);
        CHECK(rank(k) == 3);
    }
    SECTION("sl3") {
        const auto L = sl_algebra(3);
        CHECK(L.dim == 8);
        CHECK(L.f.size() == 44);
        CHECK_NOTHROW(validate_algebra(L));
        CHECK(rank(killing_form(L)) == 8);
    }
    SECTION("degenerate and nilpotent examples") {
        const auto aff = affine2_algebra();
        const auto k = killing_form(aff);
        CHECK(k.at(0, 0) == 1);
        CHECK(k.at(0, 1) == 0);
        CHECK(k.at(1, 1) == 0);
        CHECK(rank(k) == 1);

        const auto h3 = heisenberg3_algebra();
        CHECK(h3.structure(0, 1, 2) == 1);
        CHECK(rank(killing_form(h3)) == 0);
    }
    SECTION("builtin lookup") {
        CHECK(builtin_algebra("abelian4").dim == 4);
        CHECK(builtin_algebra("abelian4").f.empty());
        CHECK(builtin_algebra("so3").dim == 3);
        CHECK_THROWS_AS(builtin_algebra("gl7"), std::invalid_argument);
    }
    SECTION("json round trip") {
        const auto L = so3_algebra();
        const auto back = algebra_from_json(algebra_to_json(L));
        CHECK(back.dim == L.dim);
        CHECK(back.parities == L.parities);
        CHECK(back.f == L.f);
    }
    SECTION("broken tables are rejected") {
        LieAlgebraData asym;
        asym.dim = 2;
        asym.parities = {0, 0};
        asym.f[{0, 1, 1}] = 1;
        CHECK_THROWS_AS(validate_algebra(asym), JacobiFailure);

        LieAlgebraData nj;
        nj.dim = 3;
        nj.parities = {0, 0, 0};
        nj.f[{0, 1, 0}] = 1;
        nj.f[{1, 0, 0}] = -1;
        nj.f[{0, 2, 1}] = 1;
        nj.f[{2, 0, 1}] = -1;
        CHECK_THROWS_AS(validate_algebra(nj), JacobiFailure);
        CHECK_THROWS_AS(q_from_lie(nj), JacobiFailure);
    }
}

TEST_CASE("the homological field of an algebra") {
    const auto q = q_from_lie(builtin_algebra("sl2"));
    CHECK(q.field.upper_count() == 1);
    CHECK(q.field.lower_count() == 0);
    CHECK(q.field.total_parity() == 1);

    CHECK(q.field.component({0}) == term({1, 0, 1}, 2));
    CHECK(q.field.component({1}) == term({0, 1, 1}, -2));
    CHECK(q.field.component({2}) == term({1, 1, 0}, -1));
    CHECK(square_zero(q));

    SECTION("nilpotent example") {
        const auto qh = q_from_lie(heisenberg3_algebra());
        CHECK(qh.field.component({2}) == term({1, 1, 0}, -1));
        CHECK(qh.field.component({0}).zero());
        CHECK(square_zero(qh));
    }
    SECTION("action on functions") {
        CHECK(apply_field(q, c(2)) == term({1, 1, 0}, -1));
        CHECK(apply_field(q, c(0) * c(1)).zero());
    }
}

TEST_CASE("derivative tensors of the field") {
    const auto q = q_from_lie(builtin_algebra("sl2"));

    SECTION("first derivatives") {
        const auto jet = derivative_tensor(q.field, 1);
        CHECK(jet.upper_count() == 1);
        CHECK(jet.lower_count() == 1);
        CHECK(jet.component({0, 0}) == term({0, 0, 1}, 2));
        CHECK(jet.component({2, 0}) == term({1, 0, 0}, -2));
        CHECK(jet.component({1, 2}) == term({1, 0, 0}, 1));
        CHECK(jet.component({1, 0}).zero());
    }
    SECTION("second derivatives keep the application order") {
        const auto jet = derivative_tensor(q.field, 2);
        CHECK(jet.component({0, 1, 2}) ==
              SuperFunction::constant(odd3, 1));
        CHECK(jet.component({1, 0, 2}) ==
              SuperFunction::constant(odd3, -1));
    }
    SECTION("the field is quadratic") {
        CHECK(derivative_tensor(q.field, 3).zero());
    }
}

TEST_CASE("lie derivative on tensor slots") {
    const auto q = q_from_lie(builtin_algebra("sl2"));

    SECTION("covector slots transform by the lowered derivative matrix") {
        SuperTensor t(odd3, 0, 1);
        t.add_component({0}, SuperFunction::constant(odd3, 1));
        const auto dt = lie_derivative(q, t);
        CHECK(dt.component({0}) == term({0, 0, 1}, -2));
        CHECK(dt.component({2}) == term({1, 0, 0}, 2));
        CHECK(dt.component({1}).zero());
    }
    SECTION("vector slots transform with the opposite sign") {
        SuperTensor s(odd3, 1, 0);
        s.add_component({0}, SuperFunction::constant(odd3, 1));
        const auto ds = lie_derivative(q, s);
        CHECK(ds.component({0}) == term({0, 0, 1}, 2));
        CHECK(ds.component({2}) == term({0, 1, 0}, -1));
        CHECK(ds.component({1}).zero());
    }
    SECTION("the derivative squares to zero") {
        SuperTensor m(odd3, 1, 1);
        m.add_component({0, 1}, c(2));
        m.add_component({2, 0}, c(0) * c(1));
        const auto dm = lie_derivative(q, m);
        CHECK_FALSE(dm.zero());
        CHECK(lie_derivative(q, dm).zero());
    }
    SECTION("coordinate contexts must match") {
        SuperTensor t({1, 1}, 0, 1);
        t.add_component({0}, SuperFunction::constant({1, 1}, 1));
        CHECK_THROWS_AS(lie_derivative(q, t), ParityMismatch);
    }
}

TEST_CASE("supertrace") {
    SECTION("of the identity") {
        SuperTensor id(odd3, 1, 1);
        for (int i = 0; i < 3; ++i)
            id.add_component({i, i}, SuperFunction::constant(odd3, 1));
        const auto str = supertrace(id);
        CHECK(str.upper_count() == 0);
        CHECK(str.lower_count() == 0);
        CHECK(str.component({}) == SuperFunction::constant(odd3, -3));
    }
    SECTION("of the first jet") {
        const auto q = q_from_lie(builtin_algebra("sl2"));
        CHECK(supertrace(derivative_tensor(q.field, 1)).zero());

        const auto qa = q_from_lie(affine2_algebra());
        const auto str = supertrace(derivative_tensor(qa.field, 1));
        CHECK(str.component({}) == term({1, 0}, -1, {1, 1}));
    }
    SECTION("needs an upper and a lower slot") {
        SuperTensor t(odd3, 0, 1);
        t.add_component({0}, c(0));
        CHECK_THROWS_AS(supertrace(t), SlotMismatch);
    }
}
