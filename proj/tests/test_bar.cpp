#include "doctest.h"

#include "coringlab/bar.hpp"

using namespace coringlab;

namespace {

AlgebraPtr alg(const std::string& text, int bound) {
    return std::make_shared<GradedAlgebra>(realize_text(text, bound));
}

}  // namespace

TEST_CASE("bar complex of the trivial algebra") {
    auto a = std::make_shared<GradedAlgebra>(trivial_algebra(Field::rationals()));
    BarComplex b(a, 3, 3);
    CHECK(b.slice_dim(0, 0) == 1);
    for (int s = 0; s <= 3; ++s)
        for (int d = 0; d <= 3; ++d)
            if (s + d > 0) CHECK(b.slice_dim(s, d) == 0);
}

TEST_CASE("bar complex of Q[x]: word enumeration by hand") {
    auto a = alg("Q[x]", 3);
    BarComplex b(a, 3, 3);
    // letters: x (deg 1), x^2 (deg 2), x^3 (deg 3)
    CHECK(b.slice_dim(1, 1) == 1);  // [x]
    CHECK(b.slice_dim(1, 2) == 1);  // [x^2]
    CHECK(b.slice_dim(2, 2) == 1);  // [x|x]
    CHECK(b.slice_dim(2, 3) == 2);  // [x|x^2], [x^2|x]
    CHECK(b.slice_dim(3, 3) == 1);  // [x|x|x]
    CHECK(b.slice_dim(2, 1) == 0);
}

TEST_CASE("d . d = 0 on GF(2)[x]/(x^2) up to (6,6) and more") {
    for (const char* text : {"GF(2)[x]/(x^2)", "GF(3)[x]/(x^3)", "Q[x,y]", "GF(2)[x,y]/(x^2,y^2)"}) {
        auto a = alg(text, 6);
        BarComplex b(a, 6, 6);
        for (int s = 2; s <= 6; ++s)
            for (int d = s; d <= 6; ++d) {
                const auto& d_s = b.differential(s, d);
                const auto& d_s1 = b.differential(s - 1, d);
                CHECK(d_s1.times(d_s).is_zero());
            }
    }
}

TEST_CASE("Tor bialgebras pass the full axiom checks") {
    for (const char* text : {"Q[x,y]", "GF(2)[x,y]/(x^2,y^2)", "GF(3)[x]/(x^3)"}) {
        auto a = alg(text, 5);
        TorHopf t = tor_bialgebra(a, 5);
        Report r = check_bialgebra(t.hopf.bi);
        for (const auto& f : r.failures()) CAPTURE(f);
        CHECK(r.all_pass());
    }
}

TEST_CASE("Tor of Q[x]: exterior on one generator tau") {
    auto a = alg("Q[x]", 4);
    TorHopf t = tor_bialgebra(a, 4);
    auto dims = t.dims_by_hdeg();
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 1);
    CHECK(dims[2] == 0);
    CHECK(dims[3] == 0);
    // the generator tau sits in bidegree (1,1) and is primitive
    auto prim = primitives(t.hopf.bi);
    REQUIRE(prim.size() == 1);
    CHECK(t.bidegrees[static_cast<std::size_t>(prim[0].front().first)] == std::pair<int, int>{1, 1});
    // tau^2 = 0
    const auto& b = t.hopf.bi;
    CHECK(b.mul(prim[0], prim[0]).empty());
}

TEST_CASE("Tor of Q[x,y]: binomial dims and Hopf axioms") {
    auto a = alg("Q[x,y]", 3);
    TorHopf t = tor_bialgebra(a, 3);
    auto dims = t.dims_by_hdeg();
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 2);
    CHECK(dims[2] == 1);
    CHECK(dims[3] == 0);
    Report r = check_hopf(t.hopf);
    CHECK(r.all_pass());
}

TEST_CASE("Tor of GF(2)[x]/(x^2): dims all 1, matching the periodic resolution") {
    auto a = alg("GF(2)[x]/(x^2)", 6);
    TorHopf t = tor_bialgebra(a, 6);
    auto dims = t.dims_by_hdeg();
    for (int s = 0; s <= 6; ++s) CHECK(dims[s] == 1);
    DimTable oracle = tor_dims_via_resolution(a, 6, 6);
    CHECK(oracle == t.dims);
}

TEST_CASE("resolution oracle: Koszul resolution of Q[x]") {
    auto a = alg("Q[x]", 5);
    DimTable d = tor_dims_via_resolution(a, 5, 5);
    DimTable want;
    want[{0, 0}] = 1;
    want[{1, 1}] = 1;
    CHECK(d == want);
}

TEST_CASE("oracle equivalence on a small battery") {
    struct Case {
        const char* text;
        int deg;
    };
    for (const auto& [text, deg] : {Case{"Q[x]", 5}, Case{"GF(2)[x]/(x^2)", 5}, Case{"GF(2)[x,y]/(x^2,y^2)", 5}}) {
        auto a = alg(text, deg);
        TorHopf t = tor_bialgebra(a, deg);
        DimTable oracle = tor_dims_via_resolution(a, deg, deg);
        CHECK(t.dims == oracle);
    }
}

TEST_CASE("graded commutativity of the homology product") {
    for (const char* text : {"Q[x,y]", "GF(3)[x]/(x^3)"}) {
        auto a = alg(text, 5);
        TorHopf t = tor_bialgebra(a, 5);
        const auto& b = t.hopf.bi;
        const Field& k = b.ground();
        int n = b.dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (t.bidegrees[static_cast<std::size_t>(i)].first + t.bidegrees[static_cast<std::size_t>(j)].first >
                    5)
                    continue;
                if (t.bidegrees[static_cast<std::size_t>(i)].second +
                        t.bidegrees[static_cast<std::size_t>(j)].second >
                    5)
                    continue;
                SparseVec uv = b.mul_basis(i, j);
                SparseVec vu = b.mul_basis(j, i);
                int sign = (b.degree_of(i) * b.degree_of(j)) % 2;
                CHECK(sv_equal(uv, sign == 0 ? vu : sv_neg(k, vu)));
            }
    }
}

TEST_CASE("antipode: primitives negate, S(1) = 1, higher classes by recursion") {
    auto a = alg("GF(3)[x]/(x^3)", 7);
    TorHopf t = tor_bialgebra(a, 7);
    const auto& b = t.hopf.bi;
    const Field& k = b.ground();
    CHECK(sv_equal(t.hopf.antipode.apply(b.unit), b.unit));
    for (const auto& p : primitives(b)) CHECK(sv_equal(t.hopf.antipode.apply(p), sv_neg(k, p)));
    Report r = check_hopf(t.hopf);
    for (const auto& f : r.failures()) CAPTURE(f);
    CHECK(r.all_pass());
}

TEST_CASE("Tor connectivity: Tor_0 is one-dimensional") {
    for (const char* text : {"Q[x]", "GF(2)[x,y]/(x^2,y^2)", "GF(5)[x]/(x^5)"}) {
        auto a = alg(text, 4);
        TorHopf t = tor_bialgebra(a, 4);
        CHECK(t.dims_by_hdeg()[0] == 1);
    }
}

TEST_CASE("bar_complex rejects non-augmented input") {
    Field Qi = Field::extension(0, {Rat(1), Rat(0), Rat(1)});
    auto L = std::make_shared<GradedAlgebra>(algebra_from_extension(Qi));
    CHECK_THROWS_AS(bar_complex(L, 2, 2), NotAugmentedError);
}
