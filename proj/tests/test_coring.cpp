#include "doctest.h"

#include "coringlab/bar.hpp"
#include "coringlab/coring.hpp"

using namespace coringlab;

namespace {

Field qi_field() { return Field::extension(0, {Rat(1), Rat(0), Rat(1)}); }
Field gf4_field() { return Field::extension(2, {Rat(1), Rat(1), Rat(1)}); }

}  // namespace

TEST_CASE("trivial coring over several base rings passes all axioms") {
    for (const char* text : {"Q[x]/(x^2)", "GF(2)[x,y]/(x^2,y^2)"}) {
        auto r = std::make_shared<GradedAlgebra>(realize_text(text, 4));
        Coring c = trivial_coring(r);
        Report rep = check_coring(c);
        for (const auto& f : rep.failures()) CAPTURE(f);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("Galois extensions: Q(i)/Q and GF(4)/GF(2)") {
    GaloisExtension g = galois_extension(qi_field());
    CHECK(g.automorphisms.size() == 2);
    GaloisExtension g4 = galois_extension(gf4_field());
    CHECK(g4.automorphisms.size() == 2);
    // conjugation squares to the identity
    for (const auto& a : g.automorphisms) {
        SparseMatrix sq = a.times(a);
        CHECK(sq.equal(SparseMatrix::identity(g.base_field, 2)));
    }
}

TEST_CASE("Galois coring Q(i)/Q: axioms and the displayed comultiplication") {
    GaloisExtension g = galois_extension(qi_field());
    Coring c = galois_coring(g);
    // carrier has k-dimension 4 = L-dimension 2 times [L:K]
    CHECK(c.dim() == 4);
    Report rep = check_coring(c);
    for (const auto& f : rep.failures()) CAPTURE(f);
    CHECK(rep.all_pass());
    // Delta(1 (x) i) = (1 (x) 1) (x)_L (1 (x) i): flat carrier index of 1(x)i is
    // (0,1); of 1(x)1 is (0,0)
    int one_i = tensor_index(0, 1, 2);
    int one_one = tensor_index(0, 0, 2);
    SparseVec d = c.comult[static_cast<std::size_t>(one_i)];
    REQUIRE(d.size() == 1);
    CHECK(d.front().first == tensor_index(one_one, one_i, 4));
    CHECK(d.front().second == c.ground().one());
    // the base does not act symmetrically on L (x) L, and that is reported
    bool found_info = false;
    for (const auto& e : rep.entries)
        if (e.axiom.find("symmetric") != std::string::npos) {
            found_info = true;
            CHECK(e.witness == "no");
        }
    CHECK(found_info);
}

TEST_CASE("Galois coring GF(4)/GF(2) passes; identity extension is trivial") {
    Coring c = galois_coring(galois_extension(gf4_field()));
    CHECK(c.dim() == 4);
    CHECK(check_coring(c).all_pass());
    GaloisExtension idext = galois_extension(Field::prime_field(3));
    Coring t = galois_coring(idext);
    CHECK(t.dim() == 1);
    CHECK(check_coring(t).all_pass());
}

TEST_CASE("transposed comultiplication fails coassociativity with a witness") {
    GaloisExtension g = galois_extension(qi_field());
    Coring c = galois_coring(g);
    // transpose the tensor factors of Delta
    int n = c.dim();
    for (auto& cm : c.comult) {
        SparseVec t;
        for (const auto& [f, s] : cm) {
            auto [x, y] = tensor_split(f, n);
            t.emplace_back(tensor_index(y, x, n), s);
        }
        cm = sv_normalize(c.ground(), std::move(t));
    }
    Report rep = check_coring(c);
    CHECK(!rep.all_pass());
    bool witnessed = false;
    for (const auto& e : rep.entries)
        if (!e.pass && !e.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("exterior bialgebras") {
    // n = 0: the field itself
    HopfAlgebra e0 = exterior_bialgebra(0, false, Field::prime_field(2));
    CHECK(e0.bi.dim() == 1);
    CHECK(check_hopf(e0).all_pass());
    // n = 1 ungraded over GF(2): dim 2, primitive generator
    HopfAlgebra e1 = exterior_bialgebra(1, false, Field::prime_field(2));
    CHECK(e1.bi.dim() == 2);
    CHECK(check_hopf(e1).all_pass());
    SparseVec de = e1.bi.coring.comult[1];
    CHECK(de.size() == 2);
    // n = 2 graded over Q: dims (1,2,1), e1e2 = -e2e1
    HopfAlgebra e2 = exterior_bialgebra(2, true, Field::rationals());
    CHECK(e2.bi.dim() == 4);
    auto dims = e2.bi.coring.carrier.dims_by_degree();
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 2);
    CHECK(dims[2] == 1);
    Report rep = check_hopf(e2);
    for (const auto& f : rep.failures()) CAPTURE(f);
    CHECK(rep.all_pass());
    const Field& k = e2.bi.ground();
    CHECK(sv_equal(e2.bi.mul_basis(1, 2), sv_neg(k, e2.bi.mul_basis(2, 1))));
    CHECK(e2.bi.mul_basis(1, 1).empty());
}

TEST_CASE("kE packaged as a Hopf algebra passes check_hopf") {
    for (auto [p, r] : {std::pair<int, int>{2, 2}, {3, 1}, {3, 2}}) {
        auto [a, h] = elementary_abelian_hopf(p, r, false);
        HopfAlgebra kE = hopf_from_structure(a, h);
        Report rep = check_hopf(kE);
        for (const auto& f : rep.failures()) CAPTURE(f);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("bialgebra with a perturbed constant fails with a witness") {
    Rng rng(2024);
    HopfAlgebra e2 = exterior_bialgebra(2, true, Field::rationals());
    for (int trial = 0; trial < 8; ++trial) {
        Bialgebra mutated = e2.bi;
        std::string what = perturb_bialgebra(mutated, rng);
        CAPTURE(what);
        CHECK(!check_bialgebra(mutated).all_pass());
    }
}

TEST_CASE("dual of tor_bialgebra(Q[x,y]) is the exterior algebra on two tangent generators") {
    auto a = std::make_shared<GradedAlgebra>(realize_text("Q[x,y]", 4));
    TorHopf t = tor_bialgebra(a, 4);
    GradedAlgebra lambda = dual_algebra(t.hopf.bi.coring);
    lambda.validate();
    // two degree-1 generators xi with xi^2 = 0 and xi1 xi2 = -xi2 xi1
    std::vector<int> deg1 = lambda.space.indices_of_degree(1);
    REQUIRE(deg1.size() == 2);
    const Field& k = lambda.field;
    CHECK(lambda.mul_basis(deg1[0], deg1[0]).empty());
    CHECK(lambda.mul_basis(deg1[1], deg1[1]).empty());
    CHECK(sv_equal(lambda.mul_basis(deg1[0], deg1[1]), sv_neg(k, lambda.mul_basis(deg1[1], deg1[0]))));
    CHECK(!lambda.mul_basis(deg1[0], deg1[1]).empty());
}

TEST_CASE("dual of the trivial coalgebra; dual of an infinite Tor is rejected") {
    auto k = std::make_shared<GradedAlgebra>(trivial_algebra(Field::rationals()));
    GradedAlgebra d = dual_algebra(trivial_coring(k));
    CHECK(d.dim() == 1);
    auto a = std::make_shared<GradedAlgebra>(realize_text("GF(2)[x]/(x^2)", 4));
    TorHopf t = tor_bialgebra(a, 4);
    CHECK_THROWS_AS(dual_algebra(t.hopf.bi.coring), InfiniteDimensionalError);
}

TEST_CASE("dual of the Galois coring over its base: 4-dimensional unital associative algebra") {
    Coring c = galois_coring(galois_extension(qi_field()));
    GradedAlgebra d = dual_algebra(c);
    CHECK(d.dim() == 4);
    d.validate();  // associativity and unitality machine-checked
}

TEST_CASE("dual_algebra is involutive on bialgebras") {
    std::vector<Bialgebra> battery;
    battery.push_back(exterior_bialgebra(2, true, Field::rationals()).bi);
    battery.push_back(exterior_bialgebra(2, false, Field::prime_field(2)).bi);
    auto a = std::make_shared<GradedAlgebra>(realize_text("Q[x,y]", 3));
    battery.push_back(tor_bialgebra(a, 3).hopf.bi);
    for (const auto& b : battery) {
        Bialgebra dd = dual_bialgebra(dual_bialgebra(b));
        CHECK(dd.mult == b.mult);
        CHECK(dd.coring.comult == b.coring.comult);
        CHECK(sv_equal(dd.unit, b.unit));
    }
}

TEST_CASE("primitives and grouplikes") {
    // exterior: primitive space of dimension n, grouplikes exactly {1}
    for (int n : {1, 2, 3}) {
        HopfAlgebra e = exterior_bialgebra(n, false, Field::prime_field(2));
        CHECK(static_cast<int>(primitives(e.bi).size()) == n);
        auto gl = grouplikes(e.bi);
        REQUIRE(gl.size() == 1);
        CHECK(sv_equal(gl[0], e.bi.unit));
    }
    HopfAlgebra eg = exterior_bialgebra(2, true, Field::rationals());
    CHECK(primitives(eg.bi).size() == 2);
    auto gl = grouplikes(eg.bi);
    REQUIRE(gl.size() == 1);
    CHECK(sv_equal(gl[0], eg.bi.unit));
    // tor(Q[x]): primitive space spanned by tau
    auto a = std::make_shared<GradedAlgebra>(realize_text("Q[x]", 4));
    TorHopf t = tor_bialgebra(a, 4);
    CHECK(primitives(t.hopf.bi).size() == 1);
}

TEST_CASE("primitives are closed under the graded bracket") {
    std::vector<Bialgebra> battery;
    battery.push_back(exterior_bialgebra(3, false, Field::prime_field(2)).bi);
    auto a = std::make_shared<GradedAlgebra>(realize_text("GF(2)[x,y]/(x^2,y^2)", 4));
    battery.push_back(tor_bialgebra(a, 4).hopf.bi);
    for (const auto& b : battery) {
        auto prim = primitives(b);
        const Field& k = b.ground();
        RowReducer span(k, b.dim());
        for (const auto& p : prim) span.insert(p);
        for (const auto& p : prim)
            for (const auto& q : prim) {
                int dp = 0, dq = 0;
                if (!p.empty()) dp = b.degree_of(p.front().first);
                if (!q.empty()) dq = b.degree_of(q.front().first);
                SparseVec bracket = b.mul(p, q);
                SparseVec qp = b.mul(q, p);
                bracket = sv_axpy(k, bracket, (dp * dq) % 2 == 0 ? k.neg(k.one()) : k.one(), qp);
                CHECK(span.contains(bracket));
            }
    }
}

TEST_CASE("coring_tensor: unit cases and axiom checks") {
    GaloisExtension g = galois_extension(qi_field());
    // d = K trivial: the Galois coring itself (same structure constants)
    auto k = std::make_shared<GradedAlgebra>(trivial_algebra(Field::rationals()));
    Coring t0 = coring_tensor(trivial_coring(k), g);
    Coring gal = galois_coring(g);
    CHECK(t0.dim() == gal.dim());
    CHECK(t0.comult == gal.comult);
    CHECK(check_coring(t0).all_pass());
    // d = exterior(1, graded, Q): L-dimension 4 means k-dimension 8
    HopfAlgebra e1 = exterior_bialgebra(1, true, Field::rationals());
    Coring t1 = coring_tensor(e1.bi.coring, g);
    CHECK(t1.dim() == 2 * 2 * 2);
    Report rep = check_coring(t1);
    for (const auto& f : rep.failures()) CAPTURE(f);
    CHECK(rep.all_pass());
    // d = tor_bialgebra(Q[x]) truncated at 3: coassociativity passes
    auto a = std::make_shared<GradedAlgebra>(realize_text("Q[x]", 3));
    TorHopf tor = tor_bialgebra(a, 3);
    Coring t2 = coring_tensor(tor.hopf.bi.coring, g);
    CHECK(check_coring(t2).all_pass());
}

TEST_CASE("perturbed Galois coring fails at least one axiom") {
    Rng rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        Coring c = galois_coring(galois_extension(qi_field()));
        std::string what = perturb_coring(c, rng);
        CAPTURE(what);
        CHECK(!check_coring(c).all_pass());
    }
}
