#include "coringlab/coring.hpp"

#include <algorithm>

namespace coringlab {

SparseVec Coring::act_left(int r, int c) const {
    auto it = left_action.find({r, c});
    return it == left_action.end() ? SparseVec{} : it->second;
}

SparseVec Coring::act_right(int c, int r) const {
    auto it = right_action.find({c, r});
    return it == right_action.end() ? SparseVec{} : it->second;
}

SparseVec Coring::act_left_vec(const SparseVec& r, const SparseVec& c) const {
    SparseVec out;
    const Field& k = ground();
    for (const auto& [ri, cr] : r)
        for (const auto& [ci, cc] : c) {
            Scalar s = k.mul(cr, cc);
            if (!s.is_zero()) out = sv_axpy(k, out, s, act_left(ri, ci));
        }
    return out;
}

SparseVec Coring::act_right_vec(const SparseVec& c, const SparseVec& r) const {
    SparseVec out;
    const Field& k = ground();
    for (const auto& [ci, cc] : c)
        for (const auto& [ri, cr] : r) {
            Scalar s = k.mul(cc, cr);
            if (!s.is_zero()) out = sv_axpy(k, out, s, act_right(ci, ri));
        }
    return out;
}

SparseVec Coring::comult_of(const SparseVec& v) const {
    SparseVec out;
    const Field& k = ground();
    for (const auto& [i, c] : v) out = sv_axpy(k, out, c, comult[static_cast<std::size_t>(i)]);
    return out;
}

SparseVec Coring::counit_of(const SparseVec& v) const { return counit.apply(v); }

SparseVec Bialgebra::mul_basis(int i, int j) const {
    auto it = mult.find({i, j});
    return it == mult.end() ? SparseVec{} : it->second;
}

SparseVec Bialgebra::mul(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    const Field& k = ground();
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            Scalar c = k.mul(ca, cb);
            if (!c.is_zero()) out = sv_axpy(k, out, c, mul_basis(i, j));
        }
    return out;
}

SparseVec Bialgebra::mul_tensor(const SparseVec& a, const SparseVec& b) const {
    // (x1 (x) x2) * (y1 (x) y2) = (-1)^{|x2||y1|} x1 y1 (x) x2 y2
    const Field& k = ground();
    int n = dim();
    SparseVec out;
    for (const auto& [fa, ca] : a) {
        auto [x1, x2] = tensor_split(fa, n);
        for (const auto& [fb, cb] : b) {
            auto [y1, y2] = tensor_split(fb, n);
            Scalar c = k.mul(ca, cb);
            if ((degree_of(x2) * degree_of(y1)) % 2 != 0) c = k.neg(c);
            if (c.is_zero()) continue;
            SparseVec left = mul_basis(x1, y1);
            SparseVec right = mul_basis(x2, y2);
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) {
                    Scalar s = k.mul(c, k.mul(cl, cr));
                    if (!s.is_zero()) out.emplace_back(tensor_index(l, r, n), s);
                }
        }
    }
    return sv_normalize(k, std::move(out));
}

Scalar Bialgebra::counit_scalar(const SparseVec& v) const {
    SparseVec r = coring.counit_of(v);
    return r.empty() ? ground().zero() : r.front().second;
}

// -- checkers ---------------------------------------------------------------

namespace {

// Apply r on the left of the first tensor factor: r.(x (x) y).
SparseVec left_on_first(const Coring& c, int r, const SparseVec& flat) {
    const Field& k = c.ground();
    int n = c.dim();
    SparseVec out;
    for (const auto& [f, s] : flat) {
        auto [x, y] = tensor_split(f, n);
        for (const auto& [t, v] : c.act_left(r, x)) out.emplace_back(tensor_index(t, y, n), k.mul(s, v));
    }
    return sv_normalize(k, std::move(out));
}

SparseVec right_on_second(const Coring& c, const SparseVec& flat, int r) {
    const Field& k = c.ground();
    int n = c.dim();
    SparseVec out;
    for (const auto& [f, s] : flat) {
        auto [x, y] = tensor_split(f, n);
        for (const auto& [t, v] : c.act_right(y, r)) out.emplace_back(tensor_index(x, t, n), k.mul(s, v));
    }
    return sv_normalize(k, std::move(out));
}

}  // namespace

Report check_coring(const Coring& c) {
    Report rep;
    const Field& k = c.ground();
    const GradedAlgebra& R = *c.base;
    int n = c.dim();

    // module axioms for both actions
    bool ok = true;
    std::string wit;
    for (int ci = 0; ci < n && ok; ++ci) {
        if (!sv_equal(c.act_left_vec(R.unit, sv_unit(k, ci)), sv_unit(k, ci)) ||
            !sv_equal(c.act_right_vec(sv_unit(k, ci), R.unit), sv_unit(k, ci))) {
            ok = false;
            wit = c.carrier.labels[static_cast<std::size_t>(ci)];
        }
    }
    rep.add("actions-unital", ok, wit);

    ok = true;
    wit.clear();
    for (int r1 = 0; r1 < R.dim() && ok; ++r1)
        for (int r2 = 0; r2 < R.dim() && ok; ++r2)
            for (int ci = 0; ci < n && ok; ++ci) {
                SparseVec e = sv_unit(k, ci);
                if (!sv_equal(c.act_left_vec(R.mul_basis(r1, r2), e),
                              c.act_left_vec(sv_unit(k, r1), c.act_left(r2, ci)))) {
                    ok = false;
                    wit = "left (" + R.space.labels[static_cast<std::size_t>(r1)] + "," +
                          R.space.labels[static_cast<std::size_t>(r2)] + "," +
                          c.carrier.labels[static_cast<std::size_t>(ci)] + ")";
                }
                if (ok && !sv_equal(c.act_right_vec(e, R.mul_basis(r1, r2)),
                                    c.act_right_vec(c.act_right(ci, r1), sv_unit(k, r2)))) {
                    ok = false;
                    wit = "right (" + c.carrier.labels[static_cast<std::size_t>(ci)] + "," +
                          R.space.labels[static_cast<std::size_t>(r1)] + "," +
                          R.space.labels[static_cast<std::size_t>(r2)] + ")";
                }
            }
    rep.add("actions-associative", ok, wit);

    ok = true;
    wit.clear();
    for (int r1 = 0; r1 < R.dim() && ok; ++r1)
        for (int r2 = 0; r2 < R.dim() && ok; ++r2)
            for (int ci = 0; ci < n && ok; ++ci)
                if (!sv_equal(c.act_right_vec(c.act_left(r1, ci), sv_unit(k, r2)),
                              c.act_left_vec(sv_unit(k, r1), c.act_right(ci, r2)))) {
                    ok = false;
                    wit = "(" + R.space.labels[static_cast<std::size_t>(r1)] + "," +
                          c.carrier.labels[static_cast<std::size_t>(ci)] + "," +
                          R.space.labels[static_cast<std::size_t>(r2)] + ")";
                }
    rep.add("actions-commute", ok, wit);

    // counit is a bimodule map
    ok = true;
    wit.clear();
    for (int r = 0; r < R.dim() && ok; ++r)
        for (int ci = 0; ci < n && ok; ++ci) {
            SparseVec lhs = c.counit_of(c.act_left(r, ci));
            SparseVec rhs = R.mul(sv_unit(k, r), c.counit_of(sv_unit(k, ci)));
            if (!sv_equal(lhs, rhs)) {
                ok = false;
                wit = "eps(r.c) at (" + R.space.labels[static_cast<std::size_t>(r)] + "," +
                      c.carrier.labels[static_cast<std::size_t>(ci)] + ")";
            }
            if (ok) {
                lhs = c.counit_of(c.act_right(ci, r));
                rhs = R.mul(c.counit_of(sv_unit(k, ci)), sv_unit(k, r));
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    wit = "eps(c.r) at (" + c.carrier.labels[static_cast<std::size_t>(ci)] + "," +
                          R.space.labels[static_cast<std::size_t>(r)] + ")";
                }
            }
        }
    rep.add("counit-bimodule-map", ok, wit);

    // quotient C (x)_R C
    TensorQuotient q2 = tensor_over_base(k, c.carrier, c.right_action, c.carrier, c.left_action, R);

    // comult is a bimodule map (checked in the quotient)
    ok = true;
    wit.clear();
    for (int r = 0; r < R.dim() && ok; ++r)
        for (int ci = 0; ci < n && ok; ++ci) {
            SparseVec lhs = q2.proj.apply(c.comult_of(c.act_left(r, ci)));
            SparseVec rhs = q2.proj.apply(left_on_first(c, r, c.comult[static_cast<std::size_t>(ci)]));
            if (!sv_equal(lhs, rhs)) {
                ok = false;
                wit = "Delta(r.c) at (" + R.space.labels[static_cast<std::size_t>(r)] + "," +
                      c.carrier.labels[static_cast<std::size_t>(ci)] + ")";
            }
            if (ok) {
                lhs = q2.proj.apply(c.comult_of(c.act_right(ci, r)));
                rhs = q2.proj.apply(right_on_second(c, c.comult[static_cast<std::size_t>(ci)], r));
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    wit = "Delta(c.r) at (" + c.carrier.labels[static_cast<std::size_t>(ci)] + "," +
                          R.space.labels[static_cast<std::size_t>(r)] + ")";
                }
            }
        }
    rep.add("comult-bimodule-map", ok, wit);

    // counit laws (eps (x) id) Delta = id = (id (x) eps) Delta
    ok = true;
    wit.clear();
    for (int ci = 0; ci < n && ok; ++ci) {
        SparseVec left_sum, right_sum;
        for (const auto& [f, s] : c.comult[static_cast<std::size_t>(ci)]) {
            auto [x, y] = tensor_split(f, n);
            left_sum = sv_axpy(k, left_sum, s, c.act_left_vec(c.counit_of(sv_unit(k, x)), sv_unit(k, y)));
            right_sum = sv_axpy(k, right_sum, s, c.act_right_vec(sv_unit(k, x), c.counit_of(sv_unit(k, y))));
        }
        if (!sv_equal(left_sum, sv_unit(k, ci)) || !sv_equal(right_sum, sv_unit(k, ci))) {
            ok = false;
            wit = c.carrier.labels[static_cast<std::size_t>(ci)];
        }
    }
    rep.add("counit-laws", ok, wit);

    // coassociativity in C (x)_R C (x)_R C
    TensorQuotient q3 = tensor3_over_base(k, c.carrier, c.right_action, c.carrier, c.left_action, c.right_action,
                                          c.carrier, c.left_action, R);
    ok = true;
    wit.clear();
    for (int ci = 0; ci < n && ok; ++ci) {
        SparseVec lhs_flat, rhs_flat;  // flat over ((x,y),z)
        for (const auto& [f, s] : c.comult[static_cast<std::size_t>(ci)]) {
            auto [x, y] = tensor_split(f, n);
            // (Delta (x) id): expand x
            for (const auto& [g, t] : c.comult[static_cast<std::size_t>(x)])
                lhs_flat.emplace_back(g * n + y, k.mul(s, t));
            // (id (x) Delta): expand y
            for (const auto& [g, t] : c.comult[static_cast<std::size_t>(y)]) {
                auto [y1, y2] = tensor_split(g, n);
                rhs_flat.emplace_back((x * n + y1) * n + y2, k.mul(s, t));
            }
        }
        lhs_flat = sv_normalize(k, std::move(lhs_flat));
        rhs_flat = sv_normalize(k, std::move(rhs_flat));
        if (!sv_equal(q3.proj.apply(lhs_flat), q3.proj.apply(rhs_flat))) {
            ok = false;
            wit = c.carrier.labels[static_cast<std::size_t>(ci)];
        }
    }
    rep.add("coassociativity", ok, wit);

    // grading of structure maps
    ok = true;
    wit.clear();
    for (int ci = 0; ci < n && ok; ++ci) {
        int d = c.carrier.degrees[static_cast<std::size_t>(ci)];
        for (const auto& [f, s] : c.comult[static_cast<std::size_t>(ci)]) {
            (void)s;
            auto [x, y] = tensor_split(f, n);
            if (c.carrier.degrees[static_cast<std::size_t>(x)] + c.carrier.degrees[static_cast<std::size_t>(y)] != d) {
                ok = false;
                wit = c.carrier.labels[static_cast<std::size_t>(ci)];
            }
        }
        for (const auto& [b, s] : c.counit_of(sv_unit(k, ci))) {
            (void)s;
            if (R.degree_of(b) != d) {
                ok = false;
                wit = c.carrier.labels[static_cast<std::size_t>(ci)];
            }
        }
    }
    rep.add("grading", ok, wit);

    // Symmetry of the base action, reported but not an axiom (the Remark's
    // "Provided R acts symmetrically" hypothesis).
    bool symmetric = true;
    for (int r = 0; r < R.dim() && symmetric; ++r)
        for (int ci = 0; ci < n && symmetric; ++ci)
            if (!sv_equal(c.act_left(r, ci), c.act_right(ci, r))) symmetric = false;
    rep.add("base-acts-symmetrically [informational]", true, symmetric ? "yes" : "no");
    return rep;
}

namespace {

bool bidegree_within(const Bialgebra& b, int i, int j) {
    if (!b.coring.truncation) return true;
    auto [smax, dmax] = *b.coring.truncation;
    int s = b.degree_of(i) + b.degree_of(j);
    int d = 0;
    if (!b.coring.idegs.empty())
        d = b.coring.idegs[static_cast<std::size_t>(i)] + b.coring.idegs[static_cast<std::size_t>(j)];
    return s <= smax && d <= dmax;
}

bool bidegree_within3(const Bialgebra& b, int i, int j, int l) {
    if (!b.coring.truncation) return true;
    auto [smax, dmax] = *b.coring.truncation;
    int s = b.degree_of(i) + b.degree_of(j) + b.degree_of(l);
    int d = 0;
    if (!b.coring.idegs.empty())
        d = b.coring.idegs[static_cast<std::size_t>(i)] + b.coring.idegs[static_cast<std::size_t>(j)] +
            b.coring.idegs[static_cast<std::size_t>(l)];
    return s <= smax && d <= dmax;
}

}  // namespace

Report check_bialgebra(const Bialgebra& b) {
    Report rep = check_coring(b.coring);
    const Field& k = b.ground();
    int n = b.dim();
    if (b.coring.base->dim() != 1) {
        rep.add("base-is-ground-field", false, "base has dimension > 1");
        return rep;
    }

    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
        if (!sv_equal(b.mul(b.unit, sv_unit(k, i)), sv_unit(k, i)) ||
            !sv_equal(b.mul(sv_unit(k, i), b.unit), sv_unit(k, i))) {
            ok = false;
            wit = b.coring.carrier.labels[static_cast<std::size_t>(i)];
        }
    }
    rep.add("carrier-unital", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int l = 0; l < n && ok; ++l) {
                if (!bidegree_within3(b, i, j, l)) continue;
                SparseVec lhs = b.mul(b.mul_basis(i, j), sv_unit(k, l));
                SparseVec rhs = b.mul(sv_unit(k, i), b.mul_basis(j, l));
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    wit = "(" + b.coring.carrier.labels[static_cast<std::size_t>(i)] + "," +
                          b.coring.carrier.labels[static_cast<std::size_t>(j)] + "," +
                          b.coring.carrier.labels[static_cast<std::size_t>(l)] + ")";
                }
            }
    rep.add("carrier-associative", ok, wit);

    // counit and comult are algebra maps
    ok = sv_equal(b.coring.comult_of(b.unit), [&] {
        SparseVec v;
        for (const auto& [i, ci] : b.unit)
            for (const auto& [j, cj] : b.unit) v.emplace_back(tensor_index(i, j, n), k.mul(ci, cj));
        return sv_normalize(k, std::move(v));
    }());
    rep.add("comult-unital", ok, ok ? "" : "Delta(1) != 1(x)1");

    ok = k.equal(b.counit_scalar(b.unit), k.one());
    rep.add("counit-unital", ok, ok ? "" : "eps(1) != 1");

    ok = true;
    wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            if (!bidegree_within(b, i, j)) continue;
            Scalar lhs = b.counit_scalar(b.mul_basis(i, j));
            Scalar rhs = k.mul(b.counit_scalar(sv_unit(k, i)), b.counit_scalar(sv_unit(k, j)));
            if (!k.equal(lhs, rhs)) {
                ok = false;
                wit = "eps(" + b.coring.carrier.labels[static_cast<std::size_t>(i)] + "*" +
                      b.coring.carrier.labels[static_cast<std::size_t>(j)] + ")";
            }
        }
    rep.add("counit-multiplicative", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            if (!bidegree_within(b, i, j)) continue;
            SparseVec lhs = b.coring.comult_of(b.mul_basis(i, j));
            SparseVec rhs = b.mul_tensor(b.coring.comult[static_cast<std::size_t>(i)],
                                         b.coring.comult[static_cast<std::size_t>(j)]);
            if (!sv_equal(lhs, rhs)) {
                ok = false;
                wit = "Delta(" + b.coring.carrier.labels[static_cast<std::size_t>(i)] + "*" +
                      b.coring.carrier.labels[static_cast<std::size_t>(j)] + ")";
            }
        }
    rep.add("bialgebra-compatibility", ok, wit);
    return rep;
}

Report check_hopf(const HopfAlgebra& h) {
    Report rep = check_bialgebra(h.bi);
    const Field& k = h.bi.ground();
    int n = h.bi.dim();
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
        SparseVec lhs, rhs;
        for (const auto& [f, s] : h.bi.coring.comult[static_cast<std::size_t>(i)]) {
            auto [x, y] = tensor_split(f, n);
            lhs = sv_axpy(k, lhs, s, h.bi.mul(h.antipode.col(x), sv_unit(k, y)));
            rhs = sv_axpy(k, rhs, s, h.bi.mul(sv_unit(k, x), h.antipode.col(y)));
        }
        SparseVec target = sv_scale(k, h.bi.counit_scalar(sv_unit(k, i)), h.bi.unit);
        if (!sv_equal(lhs, target) || !sv_equal(rhs, target)) {
            ok = false;
            wit = h.bi.coring.carrier.labels[static_cast<std::size_t>(i)];
        }
    }
    rep.add("antipode-axioms", ok, wit);
    return rep;
}

// -- constructors -------------------------------------------------------

Coring trivial_coring(const AlgebraPtr& r) {
    Coring c;
    c.base = r;
    c.carrier = r->space;
    const Field& k = r->field;
    for (int a = 0; a < r->dim(); ++a)
        for (int b = 0; b < r->dim(); ++b) {
            SparseVec v = r->mul_basis(a, b);
            if (!v.empty()) {
                c.left_action[{a, b}] = v;
                c.right_action[{a, b}] = std::move(v);
            }
        }
    c.comult.resize(static_cast<std::size_t>(r->dim()));
    // Delta(r) = r (x) 1 (equal to 1 (x) r in C (x)_R C)
    for (int a = 0; a < r->dim(); ++a) {
        SparseVec v;
        for (const auto& [u, cu] : r->unit) v.emplace_back(tensor_index(a, u, r->dim()), cu);
        c.comult[static_cast<std::size_t>(a)] = sv_normalize(k, std::move(v));
    }
    c.counit = SparseMatrix::identity(k, r->dim());
    return c;
}

namespace {

Bialgebra bialgebra_from_structure(const GradedAlgebra& a, const HopfStructure& h) {
    Bialgebra b;
    auto base = std::make_shared<GradedAlgebra>(trivial_algebra(a.field));
    b.coring.base = base;
    b.coring.carrier = a.space;
    const Field& k = a.field;
    for (int i = 0; i < a.dim(); ++i) {
        b.coring.left_action[{0, i}] = sv_unit(k, i);
        b.coring.right_action[{i, 0}] = sv_unit(k, i);
    }
    b.coring.comult = h.comult;
    b.coring.counit = SparseMatrix(k, 1, a.dim());
    for (const auto& [i, c] : h.counit) b.coring.counit.set(0, i, c);
    b.mult = a.mult;
    b.unit = a.unit;
    return b;
}

}  // namespace

HopfAlgebra hopf_from_structure(const GradedAlgebra& a, const HopfStructure& h) {
    HopfAlgebra out;
    out.bi = bialgebra_from_structure(a, h);
    out.antipode = h.antipode;
    return out;
}

HopfAlgebra exterior_bialgebra(int n, bool graded, const Field& k) {
    auto [a, h] = exterior_hopf(n, graded, k);
    return hopf_from_structure(a, h);
}

GaloisExtension galois_extension(const Field& ext_field) {
    GaloisExtension g;
    g.ext_field = ext_field;
    g.base_field = ext_field.characteristic() > 0 ? Field::prime_field(ext_field.characteristic())
                                                  : Field::rationals();
    if (!ext_field.is_extension()) {
        g.automorphisms = {SparseMatrix::identity(g.base_field, 1)};
        return g;
    }
    int deg = ext_field.degree();
    auto roots = ext_field.minpoly_roots_in_self();
    if (static_cast<int>(roots.size()) != deg)
        throw Error("extension is not Galois: minimal polynomial has " + std::to_string(roots.size()) +
                    " roots in the field, expected " + std::to_string(deg));
    for (const auto& rho : roots) {
        SparseMatrix m(g.base_field, deg, deg);
        Scalar pw = ext_field.one();
        for (int j = 0; j < deg; ++j) {
            auto coeffs = ext_field.coeffs(pw);
            for (int i = 0; i < deg; ++i) {
                Scalar ci = g.base_field.from_rat(coeffs[static_cast<std::size_t>(i)]);
                if (!ci.is_zero()) m.set(i, j, ci);
            }
            pw = ext_field.mul(pw, rho);
        }
        g.automorphisms.push_back(std::move(m));
    }
    // group closure: each composite must be one of the automorphisms
    for (const auto& s : g.automorphisms)
        for (const auto& t : g.automorphisms) {
            SparseMatrix st = s.times(t);
            bool found = false;
            for (const auto& u : g.automorphisms)
                if (st.equal(u)) found = true;
            if (!found) throw Error("automorphisms do not close under composition");
        }
    return g;
}

Coring galois_coring(const GaloisExtension& g) {
    const Field& k = g.base_field;
    auto base = std::make_shared<GradedAlgebra>(algebra_from_extension(g.ext_field));
    int n = base->dim();
    Coring c;
    c.base = base;
    // carrier basis y^i (x) y^j, flat (i, j)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.carrier.degrees.push_back(0);
            c.carrier.labels.push_back(base->space.labels[static_cast<std::size_t>(i)] + "(x)" +
                                       base->space.labels[static_cast<std::size_t>(j)]);
        }
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SparseVec lv, rv;
                for (const auto& [t, s] : base->mul_basis(a, i)) lv.emplace_back(tensor_index(t, j, n), s);
                for (const auto& [t, s] : base->mul_basis(j, a)) rv.emplace_back(tensor_index(i, t, n), s);
                if (!lv.empty()) c.left_action[{a, tensor_index(i, j, n)}] = sv_normalize(k, std::move(lv));
                if (!rv.empty()) c.right_action[{tensor_index(i, j, n), a}] = sv_normalize(k, std::move(rv));
            }
    int dim = n * n;
    c.comult.resize(static_cast<std::size_t>(dim));
    c.counit = SparseMatrix(k, n, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ci = tensor_index(i, j, n);
            // Delta(y^i (x) y^j) = (y^i (x) 1) (x)_L (1 (x) y^j)
            c.comult[static_cast<std::size_t>(ci)] =
                SparseVec{{tensor_index(tensor_index(i, 0, n), tensor_index(0, j, n), dim), k.one()}};
            for (const auto& [t, s] : base->mul_basis(i, j)) c.counit.set(t, ci, s);
        }
    return c;
}

Coring coring_tensor(const Coring& d, const GaloisExtension& g) {
    if (d.base->dim() != 1) throw BaseMismatchError("coring_tensor expects a coalgebra over the ground field");
    if (d.ground() != g.base_field) throw BaseMismatchError("coalgebra field does not match the Galois base field");
    const Field& k = g.base_field;
    auto base = std::make_shared<GradedAlgebra>(algebra_from_extension(g.ext_field));
    int n = base->dim();
    int m = d.dim();
    Coring c;
    c.base = base;
    auto flat = [&](int mi, int i, int j) { return (mi * n + i) * n + j; };
    for (int mi = 0; mi < m; ++mi)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                c.carrier.degrees.push_back(d.carrier.degrees[static_cast<std::size_t>(mi)]);
                c.carrier.labels.push_back(d.carrier.labels[static_cast<std::size_t>(mi)] + "(x)" +
                                           base->space.labels[static_cast<std::size_t>(i)] + "(x)" +
                                           base->space.labels[static_cast<std::size_t>(j)]);
            }
    int dim = m * n * n;
    for (int a = 0; a < n; ++a)
        for (int mi = 0; mi < m; ++mi)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    SparseVec lv, rv;
                    for (const auto& [t, s] : base->mul_basis(a, i)) lv.emplace_back(flat(mi, t, j), s);
                    for (const auto& [t, s] : base->mul_basis(j, a)) rv.emplace_back(flat(mi, i, t), s);
                    if (!lv.empty()) c.left_action[{a, flat(mi, i, j)}] = sv_normalize(k, std::move(lv));
                    if (!rv.empty()) c.right_action[{flat(mi, i, j), a}] = sv_normalize(k, std::move(rv));
                }
    c.comult.resize(static_cast<std::size_t>(dim));
    c.counit = SparseMatrix(k, n, dim);
    for (int mi = 0; mi < m; ++mi) {
        Scalar eps_d = d.counit_of(sv_unit(k, mi)).empty()
                           ? k.zero()
                           : d.counit_of(sv_unit(k, mi)).front().second;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int ci = flat(mi, i, j);
                SparseVec v;
                for (const auto& [f, s] : d.comult[static_cast<std::size_t>(mi)]) {
                    auto [m1, m2] = tensor_split(f, m);
                    v.emplace_back(tensor_index(flat(m1, i, 0), flat(m2, 0, j), dim), s);
                }
                c.comult[static_cast<std::size_t>(ci)] = sv_normalize(k, std::move(v));
                if (!eps_d.is_zero())
                    for (const auto& [t, s] : base->mul_basis(i, j)) c.counit.set(t, ci, k.mul(eps_d, s));
            }
    }
    return c;
}

GradedAlgebra dual_algebra(const Coring& c) {
    const Field& k = c.ground();
    int n = c.dim();
    if (c.truncation) {
        auto [smax, dmax] = *c.truncation;
        for (int i = 0; i < n; ++i) {
            int s = c.carrier.degrees[static_cast<std::size_t>(i)];
            int d = c.idegs.empty() ? 0 : c.idegs[static_cast<std::size_t>(i)];
            if (s >= smax || d >= dmax)
                throw InfiniteDimensionalError(
                    "carrier has classes on the truncation boundary; higher degrees may contribute");
        }
    }
    if (c.base->dim() == 1) {
        GradedAlgebra a;
        a.field = k;
        a.space.degrees = c.carrier.degrees;
        for (const auto& l : c.carrier.labels) a.space.labels.push_back(l + "^");
        for (int kk = 0; kk < n; ++kk)
            for (const auto& [f, s] : c.comult[static_cast<std::size_t>(kk)]) {
                auto [i, j] = tensor_split(f, n);
                Scalar v = s;
                if ((c.carrier.degrees[static_cast<std::size_t>(i)] * c.carrier.degrees[static_cast<std::size_t>(j)]) %
                        2 !=
                    0)
                    v = k.neg(v);
                auto& slot = a.mult[{i, j}];
                slot = sv_axpy(k, slot, v, sv_unit(k, kk));
                if (slot.empty()) a.mult.erase({i, j});
            }
        // unit of the dual = the counit functional
        SparseVec u;
        for (int i = 0; i < n; ++i) {
            SparseVec e = c.counit_of(sv_unit(k, i));
            if (!e.empty()) u.emplace_back(i, e.front().second);
        }
        a.unit = sv_normalize(k, std::move(u));
        a.degree_bound = *std::max_element(a.space.degrees.begin(), a.space.degrees.end());
        return a;
    }
    // Base a genuine algebra R: the right dual Hom_R(C, R) with convolution
    // (f*g)(c) = g(f(c_(1)) . c_(2)) and unit eps (both counit laws make eps
    // a two-sided unit for this orientation).
    const GradedAlgebra& R = *c.base;
    int nr = R.dim();
    // unknowns: matrix entries f[r][ci] (flat r*n + ci); right-linearity:
    // f(c.r) = f(c).r for all basis c, r.
    std::vector<SparseVec> rels;
    for (int ci = 0; ci < n; ++ci)
        for (int r = 0; r < nr; ++r) {
            // rel: sum over f-entries: f(c.r) - f(c).r = 0, one relation per
            // output coordinate of R
            // f(c.r): c.r = sum_t s_t e_t -> sum_t s_t f[.,t]
            // f(c).r: f[b, ci] * (e_b . r)
            for (int out = 0; out < nr; ++out) {
                SparseVec rel;
                for (const auto& [t, s] : c.act_right(ci, r)) rel.emplace_back(out * n + t, s);
                for (int b = 0; b < nr; ++b) {
                    Scalar coeff = sv_get(k, R.mul_basis(b, r), out);
                    if (!coeff.is_zero()) rel.emplace_back(b * n + ci, k.neg(coeff));
                }
                rel = sv_normalize(k, std::move(rel));
                if (!rel.empty()) rels.push_back(std::move(rel));
            }
        }
    SparseMatrix relmat(k, static_cast<int>(rels.size()), nr * n);
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (const auto& [j, s] : rels[i]) relmat.set(static_cast<int>(i), j, s);
    auto basis = kernel_basis(relmat);
    int dn = static_cast<int>(basis.size());
    auto as_matrix = [&](const SparseVec& flat) {
        SparseMatrix mf(k, nr, n);
        for (const auto& [f, s] : flat) mf.set(f / n, f % n, s);
        return mf;
    };
    auto convolve = [&](const SparseMatrix& f, const SparseMatrix& g) {
        SparseMatrix out(k, nr, n);
        for (int ci = 0; ci < n; ++ci) {
            SparseVec acc;
            for (const auto& [fl, s] : c.comult[static_cast<std::size_t>(ci)]) {
                auto [c1, c2] = tensor_split(fl, n);
                SparseVec fv = f.col(c1);  // element of R
                SparseVec fc2 = c.act_left_vec(fv, sv_unit(k, c2));
                acc = sv_axpy(k, acc, s, g.apply(fc2));
            }
            for (const auto& [t, s] : acc) out.set(t, ci, s);
        }
        return out;
    };
    RowReducer span(k, nr * n, true);
    for (const auto& b : basis) span.insert(b);
    GradedAlgebra a;
    a.field = k;
    for (int q = 0; q < dn; ++q) {
        a.space.degrees.push_back(0);
        a.space.labels.push_back("f" + std::to_string(q));
    }
    std::vector<SparseMatrix> mats;
    for (const auto& b : basis) mats.push_back(as_matrix(b));
    for (int qa = 0; qa < dn; ++qa)
        for (int qb = 0; qb < dn; ++qb) {
            SparseMatrix prod = convolve(mats[static_cast<std::size_t>(qa)], mats[static_cast<std::size_t>(qb)]);
            SparseVec flat;
            for (const auto& [i, j, s] : prod.triplets()) flat.emplace_back(i * n + j, s);
            flat = sv_normalize(k, std::move(flat));
            auto expr = span.express(flat);
            if (!expr) throw Error("convolution left the dual space (internal error)");
            if (!expr->empty()) a.mult[{qa, qb}] = *expr;
        }
    // unit: the counit functional expressed in the basis
    SparseVec eps_flat;
    for (const auto& [i, j, s] : c.counit.triplets()) eps_flat.emplace_back(i * n + j, s);
    eps_flat = sv_normalize(k, std::move(eps_flat));
    auto u = span.express(eps_flat);
    if (!u) throw Error("counit is not right-linear (invalid coring)");
    a.unit = *u;
    a.degree_bound = 0;
    return a;
}

Bialgebra dual_bialgebra(const Bialgebra& b) {
    const Field& k = b.ground();
    int n = b.dim();
    Coring dual_coring;
    dual_coring.base = b.coring.base;
    dual_coring.carrier = b.coring.carrier;
    for (auto& l : dual_coring.carrier.labels) l += "^";
    for (int i = 0; i < n; ++i) {
        dual_coring.left_action[{0, i}] = sv_unit(k, i);
        dual_coring.right_action[{i, 0}] = sv_unit(k, i);
    }
    // comult of the dual: t^{ij}_k = (-1)^{d_i d_j} m_{ij}^k
    dual_coring.comult.assign(static_cast<std::size_t>(n), {});
    for (const auto& [ij, v] : b.mult) {
        auto [i, j] = ij;
        for (const auto& [kk, s] : v) {
            Scalar t = s;
            if ((b.degree_of(i) * b.degree_of(j)) % 2 != 0) t = k.neg(t);
            dual_coring.comult[static_cast<std::size_t>(kk)] = sv_axpy(
                k, dual_coring.comult[static_cast<std::size_t>(kk)], t, sv_unit(k, tensor_index(i, j, n)));
        }
    }
    // counit of the dual: evaluation at the unit of b
    dual_coring.counit = SparseMatrix(k, 1, n);
    for (const auto& [i, s] : b.unit) dual_coring.counit.set(0, i, s);
    Bialgebra d;
    d.coring = std::move(dual_coring);
    // mult of the dual: m*_{ij}^k = (-1)^{d_i d_j} c_k^{ij}
    for (int kk = 0; kk < n; ++kk)
        for (const auto& [f, s] : b.coring.comult[static_cast<std::size_t>(kk)]) {
            auto [i, j] = tensor_split(f, n);
            Scalar t = s;
            if ((b.degree_of(i) * b.degree_of(j)) % 2 != 0) t = k.neg(t);
            auto& slot = d.mult[{i, j}];
            slot = sv_axpy(k, slot, t, sv_unit(k, kk));
            if (slot.empty()) d.mult.erase({i, j});
        }
    // unit of the dual: the counit functional of b
    SparseVec u;
    for (int i = 0; i < n; ++i) {
        Scalar e = b.counit_scalar(sv_unit(k, i));
        if (!e.is_zero()) u.emplace_back(i, e);
    }
    d.unit = sv_normalize(k, std::move(u));
    return d;
}

std::vector<SparseVec> primitives(const Bialgebra& b) {
    const Field& k = b.ground();
    int n = b.dim();
    SparseMatrix m(k, n * n, n);
    for (int i = 0; i < n; ++i) {
        SparseVec v = b.coring.comult[static_cast<std::size_t>(i)];
        for (const auto& [u, cu] : b.unit) {
            v = sv_axpy(k, v, k.neg(cu), sv_unit(k, tensor_index(i, u, n)));
            v = sv_axpy(k, v, k.neg(cu), sv_unit(k, tensor_index(u, i, n)));
        }
        for (const auto& [f, s] : v) m.set(f, i, s);
    }
    return kernel_basis(m);
}

std::vector<SparseVec> grouplikes(const Bialgebra& b) {
    const Field& k = b.ground();
    int n = b.dim();
    bool all_zero_degree = true;
    for (int i = 0; i < n; ++i)
        if (b.degree_of(i) != 0) all_zero_degree = false;
    auto is_grouplike = [&](const SparseVec& g) {
        if (!k.equal(b.counit_scalar(g), k.one())) return false;
        SparseVec gg;
        for (const auto& [i, ci] : g)
            for (const auto& [j, cj] : g) gg.emplace_back(tensor_index(i, j, n), k.mul(ci, cj));
        return sv_equal(b.coring.comult_of(g), sv_normalize(k, std::move(gg)));
    };
    if (!all_zero_degree) {
        // Connected positively graded: 1 is the only grouplike (the top
        // component of g - 1 would have to square to zero in the coproduct).
        bool connected = true;
        int zero_dim = 0;
        for (int i = 0; i < n; ++i) {
            if (b.degree_of(i) < 0) connected = false;
            if (b.degree_of(i) == 0) ++zero_dim;
        }
        if (!connected || zero_dim != 1)
            throw UnsupportedError("grouplike search implemented for connected graded or small ungraded bialgebras");
        std::vector<SparseVec> out;
        if (is_grouplike(b.unit)) out.push_back(b.unit);
        return out;
    }
    // Ungraded: enumerate the affine slice eps(g) = 1 over a small finite field.
    auto ord = k.order();
    if (!ord) throw UnsupportedError("grouplike enumeration requires a finite field in the ungraded case");
    double total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<double>(*ord);
    if (total > (1 << 20)) throw UnsupportedError("carrier too large for grouplike enumeration");
    std::vector<Scalar> elems = k.elements();
    std::vector<SparseVec> out;
    std::vector<std::size_t> counter(static_cast<std::size_t>(n), 0);
    for (;;) {
        SparseVec g;
        for (int i = 0; i < n; ++i) {
            const Scalar& s = elems[counter[static_cast<std::size_t>(i)]];
            if (!s.is_zero()) g.emplace_back(i, s);
        }
        if (is_grouplike(g)) out.push_back(g);
        int pos = 0;
        while (pos < n) {
            if (++counter[static_cast<std::size_t>(pos)] < elems.size()) break;
            counter[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return out;
}

SparseMatrix antipode_connected(const Bialgebra& b) {
    const Field& k = b.ground();
    int n = b.dim();
    int zero_dim = 0, unit_idx = -1;
    for (int i = 0; i < n; ++i) {
        if (b.degree_of(i) < 0) throw NotConnectedError("negative degrees");
        if (b.degree_of(i) == 0) {
            ++zero_dim;
            unit_idx = i;
        }
    }
    if (zero_dim != 1 || b.unit.size() != 1 || b.unit.front().first != unit_idx)
        throw NotConnectedError("degree-0 part is not spanned by the unit");
    // process by increasing degree
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return b.degree_of(a) < b.degree_of(c); });
    SparseMatrix s(k, n, n);
    Scalar unit_coeff = b.unit.front().second;  // normally 1
    s.set(unit_idx, unit_idx, k.inv(unit_coeff));
    for (int i : order) {
        if (b.degree_of(i) == 0) continue;
        // S(x) = -x - sum S(x') x'' over the reduced coproduct
        SparseVec reduced = b.coring.comult[static_cast<std::size_t>(i)];
        for (const auto& [u, cu] : b.unit) {
            reduced = sv_axpy(k, reduced, k.neg(cu), sv_unit(k, tensor_index(i, u, n)));
            reduced = sv_axpy(k, reduced, k.neg(cu), sv_unit(k, tensor_index(u, i, n)));
        }
        SparseVec sx = sv_neg(k, sv_unit(k, i));
        for (const auto& [f, c] : reduced) {
            auto [x1, x2] = tensor_split(f, n);
            sx = sv_axpy(k, sx, k.neg(c), b.mul(s.col(x1), sv_unit(k, x2)));
        }
        for (const auto& [t, c] : sx) s.set(t, i, c);
    }
    return s;
}

namespace {

std::vector<std::tuple<int, int, int>> compatible_mult_slots(const GradedVectorSpace& sp, const std::vector<int>& id) {
    std::vector<std::tuple<int, int, int>> out;
    int n = sp.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < n; ++t) {
                if (sp.degrees[static_cast<std::size_t>(i)] + sp.degrees[static_cast<std::size_t>(j)] !=
                    sp.degrees[static_cast<std::size_t>(t)])
                    continue;
                if (!id.empty() && id[static_cast<std::size_t>(i)] + id[static_cast<std::size_t>(j)] !=
                                       id[static_cast<std::size_t>(t)])
                    continue;
                out.emplace_back(i, j, t);
            }
    return out;
}

}  // namespace

std::string perturb_bialgebra(Bialgebra& b, Rng& rng) {
    const Field& k = b.ground();
    auto slots = compatible_mult_slots(b.coring.carrier, b.coring.idegs);
    if (slots.empty()) throw Error("no perturbable slots");
    auto [i, j, t] = slots[static_cast<std::size_t>(rng.below(slots.size()))];
    if (rng.below(2)) {
        auto& slot = b.mult[{i, j}];
        slot = sv_axpy(k, slot, k.one(), sv_unit(k, t));
        if (slot.empty()) b.mult.erase({i, j});
        return "mult[" + std::to_string(i) + "," + std::to_string(j) + "] += e" + std::to_string(t);
    }
    auto& cm = b.coring.comult[static_cast<std::size_t>(t)];
    cm = sv_axpy(k, cm, k.one(), sv_unit(k, tensor_index(i, j, b.dim())));
    return "comult[" + std::to_string(t) + "] += e" + std::to_string(i) + "(x)e" + std::to_string(j);
}

std::string perturb_coring(Coring& c, Rng& rng) {
    const Field& k = c.ground();
    int n = c.dim();
    // perturb one comultiplication constant within the grading
    std::vector<std::tuple<int, int, int>> slots;
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (c.carrier.degrees[static_cast<std::size_t>(i)] + c.carrier.degrees[static_cast<std::size_t>(j)] ==
                    c.carrier.degrees[static_cast<std::size_t>(t)])
                    slots.emplace_back(t, i, j);
    auto [t, i, j] = slots[static_cast<std::size_t>(rng.below(slots.size()))];
    auto& cm = c.comult[static_cast<std::size_t>(t)];
    cm = sv_axpy(k, cm, k.one(), sv_unit(k, tensor_index(i, j, n)));
    return "comult[" + std::to_string(t) + "] += e" + std::to_string(i) + "(x)e" + std::to_string(j);
}

}  // namespace coringlab
