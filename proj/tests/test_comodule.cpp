#include "doctest.h"

#include "coringlab/bar.hpp"
#include "coringlab/comodule.hpp"

using namespace coringlab;

namespace {

CoringPtr share(Coring c) { return std::make_shared<Coring>(std::move(c)); }

Field qi_field() { return Field::extension(0, {Rat(1), Rat(0), Rat(1)}); }

}  // namespace

TEST_CASE("coring as comodule over itself passes check_coaction") {
    std::vector<CoringPtr> battery;
    battery.push_back(share(galois_coring(galois_extension(qi_field()))));
    battery.push_back(share(exterior_bialgebra(2, true, Field::rationals()).bi.coring));
    auto a = std::make_shared<GradedAlgebra>(realize_text("Q[x]", 3));
    battery.push_back(share(tor_bialgebra(a, 3).hopf.bi.coring));
    for (const auto& c : battery) {
        Comodule m = regular_comodule(c);
        Report r = check_coaction(m);
        for (const auto& f : r.failures()) CAPTURE(f);
        CHECK(r.all_pass());
    }
}

TEST_CASE("unit comodule over a bialgebra passes; perturbed coaction fails with witness") {
    HopfAlgebra e = exterior_bialgebra(1, false, Field::prime_field(2));
    auto c = share(e.bi.coring);
    Comodule u = unit_comodule(c, e.bi);
    CHECK(check_coaction(u).all_pass());

    Comodule m = regular_comodule(c);
    // perturb one coaction constant
    const Field& k = c->ground();
    m.coaction[1] = sv_axpy(k, m.coaction[1], k.one(), sv_unit(k, tensor_index(0, 0, c->dim())));
    Report r = check_coaction(m);
    CHECK(!r.all_pass());
    bool witnessed = false;
    for (const auto& en : r.entries)
        if (!en.pass && !en.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("comodule_tensor: unit neutrality and the 4-dimensional double regular") {
    HopfAlgebra e = exterior_bialgebra(1, false, Field::prime_field(2));
    auto c = share(e.bi.coring);
    Comodule u = unit_comodule(c, e.bi);
    Comodule reg = regular_comodule(c);
    // unit (x) M has the same coaction as M after the canonical identification
    Comodule um = comodule_tensor(u, reg, e.bi);
    REQUIRE(um.dim() == reg.dim());
    for (int i = 0; i < reg.dim(); ++i) CHECK(sv_equal(um.coaction[static_cast<std::size_t>(i)],
                                                       reg.coaction[static_cast<std::size_t>(i)]));
    // two copies of the regular comodule: 4-dimensional, coassociativity passes
    Comodule rr = comodule_tensor(reg, reg, e.bi);
    CHECK(rr.dim() == 4);
    Report r = check_coaction(rr);
    for (const auto& f : r.failures()) CAPTURE(f);
    CHECK(r.all_pass());
}

TEST_CASE("comodule_tensor associativity on seeded random triples") {
    std::vector<std::pair<CoringPtr, Bialgebra>> batteries;
    {
        HopfAlgebra e = exterior_bialgebra(1, true, Field::rationals());
        batteries.emplace_back(share(e.bi.coring), e.bi);
    }
    {
        auto a = std::make_shared<GradedAlgebra>(realize_text("Q[x]", 3));
        TorHopf t = tor_bialgebra(a, 3);
        batteries.emplace_back(share(t.hopf.bi.coring), t.hopf.bi);
    }
    Rng rng(99);
    for (auto& [c, b] : batteries) {
        for (int trial = 0; trial < 3; ++trial) {
            Comodule m = random_comodule(c, &b, rng, 1);
            Comodule n = random_comodule(c, &b, rng, 1);
            Comodule p = random_comodule(c, &b, rng, 1);
            CHECK(check_coaction(m).all_pass());
            Comodule lhs = comodule_tensor(comodule_tensor(m, n, b), p, b);
            Comodule rhs = comodule_tensor(m, comodule_tensor(n, p, b), b);
            // flat index reassociation is the identity on (i*n2+j)*n3+l
            REQUIRE(lhs.dim() == rhs.dim());
            for (int i = 0; i < lhs.dim(); ++i)
                CHECK(sv_equal(lhs.coaction[static_cast<std::size_t>(i)], rhs.coaction[static_cast<std::size_t>(i)]));
            CHECK(check_coaction(lhs).all_pass());
        }
    }
}

TEST_CASE("phi: zero and regular comodules") {
    HopfAlgebra e = exterior_bialgebra(1, true, Field::rationals());
    auto c = share(e.bi.coring);
    // zero comodule -> zero module
    Comodule z;
    z.coring = c;
    DualModule dz = phi_dualize(z);
    CHECK(dz.space.dim() == 0);
    // regular comodule -> free rank-1 module over the dual algebra: the
    // action of the dual basis hits every basis vector
    Comodule reg = regular_comodule(c);
    DualModule d = phi_dualize(reg);
    CHECK(d.algebra.dim() == 2);
    // cyclic: applying the two dual basis elements to the socle generator
    // spans everything
    const Field& k = c->ground();
    RowReducer span(k, 2);
    int gen = 1;  // the degree-1 basis vector of the regular comodule
    for (int f = 0; f < 2; ++f) {
        auto it = d.action.find({f, gen});
        if (it != d.action.end()) span.insert(it->second);
    }
    CHECK(span.rank() == 2);
}

TEST_CASE("phi_inverse . phi_dualize is the identity on seeded random comodules") {
    std::vector<std::pair<CoringPtr, Bialgebra>> batteries;
    {
        HopfAlgebra e = exterior_bialgebra(1, true, Field::rationals());
        batteries.emplace_back(share(e.bi.coring), e.bi);
    }
    {
        HopfAlgebra e = exterior_bialgebra(2, false, Field::prime_field(2));
        batteries.emplace_back(share(e.bi.coring), e.bi);
    }
    Rng rng(4242);
    for (auto& [c, b] : batteries)
        for (int trial = 0; trial < 6; ++trial) {
            Comodule m = random_comodule(c, &b, rng, 2);
            DualModule d = phi_dualize(m);
            // the dual action is associative and unital
            AlgModule as_mod;
            as_mod.algebra = std::make_shared<GradedAlgebra>(d.algebra);
            as_mod.space = d.space;
            // transpose: phi gives a left action; check through the right
            // action of the opposite by swapping arguments
            for (const auto& [key, v] : d.action) as_mod.action[{key.second, key.first}] = v;
            // (left) unitality: eps acts as identity; associativity via the
            // opposite-algebra trick is checked in the stable module tests;
            // here we check the round trip exactly.
            Comodule back = phi_inverse(d, c);
            REQUIRE(back.dim() == m.dim());
            for (int i = 0; i < m.dim(); ++i)
                CHECK(sv_equal(back.coaction[static_cast<std::size_t>(i)], m.coaction[static_cast<std::size_t>(i)]));
        }
}

TEST_CASE("phi dual action is associative and unital") {
    HopfAlgebra e = exterior_bialgebra(2, true, Field::rationals());
    auto c = share(e.bi.coring);
    Rng rng(5);
    Comodule m = random_comodule(c, &e.bi, rng, 2);
    DualModule d = phi_dualize(m);
    const Field& k = c->ground();
    const GradedAlgebra& A = d.algebra;
    auto act = [&](const SparseVec& f, const SparseVec& v) {
        SparseVec out;
        for (const auto& [fi, cf] : f)
            for (const auto& [vi, cv] : v) {
                auto it = d.action.find({fi, vi});
                if (it != d.action.end()) out = sv_axpy(k, out, k.mul(cf, cv), it->second);
            }
        return out;
    };
    for (int vi = 0; vi < d.space.dim(); ++vi) {
        CHECK(sv_equal(act(A.unit, sv_unit(k, vi)), sv_unit(k, vi)));
        for (int f = 0; f < A.dim(); ++f)
            for (int g = 0; g < A.dim(); ++g) {
                SparseVec lhs = act(A.mul_basis(f, g), sv_unit(k, vi));
                SparseVec rhs = act(sv_unit(k, f), act(sv_unit(k, g), sv_unit(k, vi)));
                CHECK(sv_equal(lhs, rhs));
            }
    }
}

TEST_CASE("phi functoriality: morphisms transport and compose") {
    HopfAlgebra e = exterior_bialgebra(1, true, Field::rationals());
    auto c = share(e.bi.coring);
    Rng rng(31);
    Comodule m = random_comodule(c, &e.bi, rng, 2);
    auto endos = comodule_hom(m, m);
    REQUIRE(!endos.empty());
    for (const auto& f : endos) CHECK(is_comodule_map(m, m, f));
    // phi is the identity on underlying matrices, so composition is
    // literally preserved; check that transported maps intertwine the dual
    // action as module maps
    DualModule d = phi_dualize(m);
    const Field& k = c->ground();
    for (const auto& f : endos)
        for (int ai = 0; ai < d.algebra.dim(); ++ai)
            for (int vi = 0; vi < m.dim(); ++vi) {
                auto it = d.action.find({ai, vi});
                SparseVec lhs = it == d.action.end() ? SparseVec{} : f.apply(it->second);
                SparseVec rhs;
                for (const auto& [t, s] : f.col(vi)) {
                    auto jt = d.action.find({ai, t});
                    if (jt != d.action.end()) rhs = sv_axpy(k, rhs, s, jt->second);
                }
                CHECK(sv_equal(lhs, rhs));
            }
}

TEST_CASE("Galois induction and descent: unit case") {
    GaloisExtension g = galois_extension(qi_field());
    auto kq = std::make_shared<GradedAlgebra>(trivial_algebra(Field::rationals()));
    auto triv = share(trivial_coring(kq));
    auto tc = share(coring_tensor(*triv, g));
    // trivial D-comodule K
    Comodule unit;
    unit.coring = triv;
    unit.space.degrees = {0};
    unit.space.labels = {"1"};
    unit.base_action[{0, 0}] = sv_unit(Field::rationals(), 0);
    unit.coaction.push_back(SparseVec{{tensor_index(0, 0, 1), Field::rationals().one()}});
    CHECK(check_coaction(unit).all_pass());
    Comodule ind = induce_comodule(unit, g, tc);
    CHECK(ind.dim() == 2);  // K (x) L = L
    Report r = check_coaction(ind);
    for (const auto& f : r.failures()) CAPTURE(f);
    CHECK(r.all_pass());
    Comodule back = descend_comodule(ind, g, triv);
    CHECK(back.dim() == 1);
}

TEST_CASE("descent of the regular Galois-coring comodule has dimension 2 over K") {
    GaloisExtension g = galois_extension(qi_field());
    auto kq = std::make_shared<GradedAlgebra>(trivial_algebra(Field::rationals()));
    auto triv = share(trivial_coring(kq));
    auto tc = share(coring_tensor(*triv, g));
    // L (x)_K L as a comodule over the tensor coring (which here is the
    // Galois coring itself, D = K)
    Comodule reg = regular_comodule(tc);
    CHECK(check_coaction(reg).all_pass());
    Comodule v = descend_comodule(reg, g, triv);
    CHECK(v.dim() == 2);
    CHECK(check_coaction(v).all_pass());
}

TEST_CASE("descend . induce is the identity on seeded random D-comodules") {
    GaloisExtension g = galois_extension(qi_field());
    HopfAlgebra e1 = exterior_bialgebra(1, true, Field::rationals());
    auto d = share(e1.bi.coring);
    auto tc = share(coring_tensor(*d, g));
    Rng rng(808);
    for (int trial = 0; trial < 6; ++trial) {
        Comodule m = random_comodule(d, &e1.bi, rng, 2);
        Comodule ind = induce_comodule(m, g, tc);
        CHECK(check_coaction(ind).all_pass());
        CHECK(ind.dim() == 2 * m.dim());  // dim_K scales by [L:K]
        Comodule back = descend_comodule(ind, g, d);
        REQUIRE(back.dim() == m.dim());
        for (int i = 0; i < m.dim(); ++i)
            CHECK(sv_equal(back.coaction[static_cast<std::size_t>(i)], m.coaction[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("descent over GF(4)/GF(2)") {
    GaloisExtension g = galois_extension(Field::extension(2, {Rat(1), Rat(1), Rat(1)}));
    auto k2 = std::make_shared<GradedAlgebra>(trivial_algebra(Field::prime_field(2)));
    auto triv = share(trivial_coring(k2));
    auto tc = share(coring_tensor(*triv, g));
    Comodule reg = regular_comodule(tc);
    Comodule v = descend_comodule(reg, g, triv);
    CHECK(v.dim() * 2 == reg.dim());
}
