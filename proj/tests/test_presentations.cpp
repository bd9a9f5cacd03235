#include "doctest.h"

#include "coringlab/presentations.hpp"

using namespace coringlab;

TEST_CASE("parse: truncated polynomial ring over GF(2)") {
    auto pres = parse_presentation("GF(2)[x,y]/(x^2,y^2)");
    REQUIRE(pres.kind == AlgebraPresentation::Kind::PolynomialQuotient);
    const auto& pq = std::get<PolyQuotientData>(pres.data);
    CHECK(pq.field.characteristic == 2);
    REQUIRE(pq.vars.size() == 2);
    CHECK(pq.vars[0].name == "x");
    CHECK(pq.vars[1].degree == 1);
    REQUIRE(pq.relations.size() == 2);
    CHECK(pq.relations[0] == std::vector<int>{2, 0});
    CHECK(pq.relations[1] == std::vector<int>{0, 2});
}

TEST_CASE("parse: polynomial ring over Q, no truncation") {
    auto pres = parse_presentation("Q[x]");
    const auto& pq = std::get<PolyQuotientData>(pres.data);
    CHECK(pq.field.characteristic == 0);
    CHECK(pq.vars.size() == 1);
    CHECK(pq.relations.empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_presentation("GF(6)[x]"), NonPrimeCharacteristicError);
    CHECK_THROWS_AS(parse_presentation("Q[x]/(x^2+y)"), NonMonomialRelationError);
    CHECK_THROWS_AS(parse_presentation("Q[x"), ParseError);
    CHECK_THROWS_AS(parse_presentation("Z[x]"), ParseError);
    CHECK_THROWS_AS(parse_presentation("Q[x,x]"), ParseError);
    try {
        parse_presentation("Q[x");
    } catch (const ParseError& e) {
        CHECK(e.pos == 3);
        CHECK(e.expected_tokens.find("]") != std::string::npos);
    }
}

TEST_CASE("parse: extension fields") {
    auto fs = parse_field_spec("GF(2^2;t^2+t+1)");
    CHECK(fs.characteristic == 2);
    CHECK(fs.minpoly == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    auto qi = parse_field_spec("Q(x^2+1)");
    CHECK(qi.characteristic == 0);
    CHECK(qi.minpoly == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    CHECK_THROWS_AS(parse_field_spec("GF(2^2;t^2+1)"), Error);  // reducible
}

TEST_CASE("realize: GF(2)[x,y]/(x^2,y^2) has basis 1,x,y,xy") {
    auto A = realize_text("GF(2)[x,y]/(x^2,y^2)", 4);
    CHECK(A.dim() == 4);
    CHECK(A.space.labels == std::vector<std::string>{"1", "x", "y", "x*y"});
    CHECK(A.space.degrees == std::vector<int>{0, 1, 1, 2});
    CHECK(!A.truncated);
    A.validate();
    // x*y = the top class, x*x = 0
    CHECK(sv_equal(A.mul_basis(1, 2), sv_unit(A.field, 3)));
    CHECK(A.mul_basis(1, 1).empty());
}

TEST_CASE("realize: Q[x] truncated at 5 has one basis vector per degree") {
    auto A = realize_text("Q[x]", 5);
    CHECK(A.dim() == 6);
    CHECK(A.truncated);
    auto dims = A.space.dims_by_degree();
    for (int d = 0; d <= 5; ++d) CHECK(dims[d] == 1);
    A.validate();
}

TEST_CASE("realize is stable under increasing degree bound") {
    auto A5 = realize_text("Q[x,y]/(x^3)", 5);
    auto A8 = realize_text("Q[x,y]/(x^3)", 8);
    REQUIRE(A5.dim() <= A8.dim());
    for (int i = 0; i < A5.dim(); ++i) {
        CHECK(A5.space.labels[static_cast<std::size_t>(i)] == A8.space.labels[static_cast<std::size_t>(i)]);
        for (int j = 0; j < A5.dim(); ++j) {
            if (A5.degree_of(i) + A5.degree_of(j) > A5.degree_bound) continue;
            CHECK(sv_equal(A5.mul_basis(i, j), A8.mul_basis(i, j)));
        }
    }
}

TEST_CASE("augmentation ideal has codimension 1") {
    for (const char* text : {"GF(2)[x,y]/(x^2,y^2)", "Q[x]", "GF(3)[x]/(x^3)"}) {
        auto A = realize_text(text, 6);
        REQUIRE(A.is_augmented());
        int nonunit = 0;
        for (int i = 0; i < A.dim(); ++i)
            if (A.field.is_zero(A.aug_of(sv_unit(A.field, i)))) ++nonunit;
        CHECK(nonunit == A.dim() - 1);
    }
}

TEST_CASE("realize: preprojective quiver of type A_2") {
    // Double quiver of A_2 with both length-2 loops killed (the p = 3 case).
    QuiverData q;
    q.field.characteristic = 3;
    q.vertices = 2;
    q.arrows = {{"a1", 0, 1}, {"b1", 1, 0}};
    // b1 a1 = 0 (traversal a1 then b1) and a1 b1 = 0
    q.relations = {{{Rat(1), {0, 1}}}, {{Rat(1), {1, 0}}}};
    AlgebraPresentation pres;
    pres.kind = AlgebraPresentation::Kind::QuiverWithRelations;
    pres.data = q;
    auto A = realize(pres, 4);
    CHECK(A.dim() == 4);
    CHECK(A.space.labels == std::vector<std::string>{"e1", "e2", "a1", "b1"});
    CHECK(!A.truncated);
    A.validate();
    CHECK(A.unit.size() == 2);  // e1 + e2
    // path composition: b1 * a1 means a1 first; killed by the relation
    int ia = 2, ib = 3;
    CHECK(A.mul_basis(ib, ia).empty());
    CHECK(A.mul_basis(ia, ib).empty());
    // e2 * a1 = a1 (a1 ends at vertex 2)
    CHECK(sv_equal(A.mul_basis(1, ia), sv_unit(A.field, ia)));
}

TEST_CASE("quiver relation inconsistency") {
    QuiverData q;
    q.field.characteristic = 0;
    q.vertices = 1;
    q.arrows = {{"a", 0, 0}};
    // homogeneity violation: e - a relation mixes lengths
    q.relations = {{{Rat(1), {0}}, {Rat(-1), {0, 0}}}};
    AlgebraPresentation pres;
    pres.kind = AlgebraPresentation::Kind::QuiverWithRelations;
    pres.data = q;
    CHECK_THROWS_AS(realize(pres, 3), UnsupportedError);
}

TEST_CASE("elementary abelian group algebras") {
    auto [A21, H21] = elementary_abelian_hopf(2, 1, false);
    CHECK(A21.dim() == 2);
    // Delta(x) = x(x)1 + 1(x)x
    SparseVec dx = H21.comult[1];
    CHECK(dx.size() == 2);
    CHECK(sv_get(A21.field, dx, tensor_index(1, 0, 2)) == A21.field.one());
    CHECK(sv_get(A21.field, dx, tensor_index(0, 1, 2)) == A21.field.one());

    auto [A23, H23] = elementary_abelian_hopf(2, 3, false);
    CHECK(A23.dim() == 8);

    auto [A32, H32] = elementary_abelian_hopf(3, 2, false);
    CHECK(A32.dim() == 9);
    // S(x_i) = -x_i on the two generators
    for (int g = 1; g <= 2; ++g) {
        SparseVec s = H32.antipode.col(g);
        REQUIRE(s.size() == 1);
        CHECK(A32.field.equal(s.front().second, A32.field.neg(A32.field.one())));
    }
    A32.validate();
}

TEST_CASE("extension field as base algebra") {
    Field Qi = Field::extension(0, {Rat(1), Rat(0), Rat(1)});
    auto L = algebra_from_extension(Qi);
    CHECK(L.dim() == 2);
    L.validate();
    // y*y = -1
    CHECK(sv_equal(L.mul_basis(1, 1), sv_neg(L.field, L.unit)));
    auto L2 = realize_text("Q(x^2+1)", 0);
    CHECK(L2.dim() == 2);
    CHECK(sv_equal(L2.mul_basis(1, 1), sv_neg(L2.field, L2.unit)));
}
