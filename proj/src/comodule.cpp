#include "coringlab/comodule.hpp"

namespace coringlab {

SparseVec Comodule::coaction_of(const SparseVec& v) const {
    SparseVec out;
    const Field& k = ground();
    for (const auto& [i, c] : v) out = sv_axpy(k, out, c, coaction[static_cast<std::size_t>(i)]);
    return out;
}

SparseVec Comodule::base_act(const SparseVec& v, const SparseVec& r) const {
    SparseVec out;
    const Field& k = ground();
    for (const auto& [i, ci] : v)
        for (const auto& [j, cj] : r) {
            Scalar c = k.mul(ci, cj);
            if (c.is_zero()) continue;
            auto it = base_action.find({i, j});
            if (it != base_action.end()) out = sv_axpy(k, out, c, it->second);
        }
    return out;
}

Report check_coaction(const Comodule& m) {
    Report rep;
    const Field& k = m.ground();
    const Coring& C = *m.coring;
    const GradedAlgebra& R = *C.base;
    int nm = m.dim(), nc = C.dim();

    bool ok = true;
    std::string wit;
    for (int i = 0; i < nm && ok; ++i) {
        if (!sv_equal(m.base_act(sv_unit(k, i), R.unit), sv_unit(k, i))) {
            ok = false;
            wit = m.space.labels[static_cast<std::size_t>(i)];
        }
        for (int a = 0; a < R.dim() && ok; ++a)
            for (int b = 0; b < R.dim() && ok; ++b) {
                SparseVec lhs = m.base_act(sv_unit(k, i), R.mul_basis(a, b));
                SparseVec rhs = m.base_act(m.base_act(sv_unit(k, i), sv_unit(k, a)), sv_unit(k, b));
                if (!sv_equal(lhs, rhs)) {
                    ok = false;
                    wit = m.space.labels[static_cast<std::size_t>(i)];
                }
            }
    }
    rep.add("base-module-axioms", ok, wit);

    TensorQuotient q2 = tensor_over_base(k, m.space, m.base_action, C.carrier, C.left_action, R);
    ok = true;
    wit.clear();
    for (int i = 0; i < nm && ok; ++i)
        for (int a = 0; a < R.dim() && ok; ++a) {
            SparseVec lhs = q2.proj.apply(m.coaction_of(m.base_act(sv_unit(k, i), sv_unit(k, a))));
            SparseVec flat;
            for (const auto& [f, s] : m.coaction[static_cast<std::size_t>(i)]) {
                auto [mi, ci] = tensor_split(f, nc);
                for (const auto& [t, v] : C.act_right(ci, a)) flat.emplace_back(tensor_index(mi, t, nc), k.mul(s, v));
            }
            SparseVec rhs = q2.proj.apply(sv_normalize(k, std::move(flat)));
            if (!sv_equal(lhs, rhs)) {
                ok = false;
                wit = "rho(" + m.space.labels[static_cast<std::size_t>(i)] + "." +
                      R.space.labels[static_cast<std::size_t>(a)] + ")";
            }
        }
    rep.add("coaction-base-linear", ok, wit);

    ok = true;
    wit.clear();
    for (int i = 0; i < nm && ok; ++i) {
        SparseVec acc;
        for (const auto& [f, s] : m.coaction[static_cast<std::size_t>(i)]) {
            auto [mi, ci] = tensor_split(f, nc);
            acc = sv_axpy(k, acc, s, m.base_act(sv_unit(k, mi), C.counit_of(sv_unit(k, ci))));
        }
        if (!sv_equal(acc, sv_unit(k, i))) {
            ok = false;
            wit = m.space.labels[static_cast<std::size_t>(i)];
        }
    }
    rep.add("counit-law", ok, wit);

    TensorQuotient q3 = tensor3_over_base(k, m.space, m.base_action, C.carrier, C.left_action, C.right_action,
                                          C.carrier, C.left_action, R);
    ok = true;
    wit.clear();
    for (int i = 0; i < nm && ok; ++i) {
        SparseVec lhs, rhs;
        for (const auto& [f, s] : m.coaction[static_cast<std::size_t>(i)]) {
            auto [mi, ci] = tensor_split(f, nc);
            for (const auto& [g, t] : m.coaction[static_cast<std::size_t>(mi)]) {
                auto [mj, cj] = tensor_split(g, nc);
                lhs.emplace_back((mj * nc + cj) * nc + ci, k.mul(s, t));
            }
            for (const auto& [g, t] : C.comult[static_cast<std::size_t>(ci)]) {
                auto [c1, c2] = tensor_split(g, nc);
                rhs.emplace_back((mi * nc + c1) * nc + c2, k.mul(s, t));
            }
        }
        lhs = sv_normalize(k, std::move(lhs));
        rhs = sv_normalize(k, std::move(rhs));
        if (!sv_equal(q3.proj.apply(lhs), q3.proj.apply(rhs))) {
            ok = false;
            wit = m.space.labels[static_cast<std::size_t>(i)];
        }
    }
    rep.add("coassociativity", ok, wit);
    return rep;
}

Comodule regular_comodule(const CoringPtr& c) {
    Comodule m;
    m.coring = c;
    m.space = c->carrier;
    m.base_action = c->right_action;
    m.coaction = c->comult;
    return m;
}

Comodule unit_comodule(const CoringPtr& c, const Bialgebra& b) {
    const Field& k = c->ground();
    Comodule m;
    m.coring = c;
    m.space.degrees = {0};
    m.space.labels = {"1"};
    m.base_action[{0, 0}] = sv_unit(k, 0);
    SparseVec rho;
    for (const auto& [u, cu] : b.unit) rho.emplace_back(tensor_index(0, u, c->dim()), cu);
    m.coaction.push_back(sv_normalize(k, std::move(rho)));
    return m;
}

Comodule comodule_tensor(const Comodule& m1, const Comodule& m2, const Bialgebra& b) {
    if (m1.coring != m2.coring && !(m1.coring->comult == m2.coring->comult))
        throw BaseMismatchError("comodule_tensor requires comodules over the same bialgebra");
    const Field& k = m1.ground();
    int n1 = m1.dim(), n2 = m2.dim(), nc = b.dim();
    Comodule out;
    out.coring = m1.coring;
    out.space = m1.space.tensor(m2.space);
    for (int i = 0; i < n1 * n2; ++i) out.base_action[{i, 0}] = sv_unit(k, i);
    out.coaction.resize(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            SparseVec rho;
            for (const auto& [f1, s1] : m1.coaction[static_cast<std::size_t>(i)]) {
                auto [v0, b1] = tensor_split(f1, nc);
                for (const auto& [f2, s2] : m2.coaction[static_cast<std::size_t>(j)]) {
                    auto [w0, b2] = tensor_split(f2, nc);
                    Scalar s = k.mul(s1, s2);
                    int db1 = b.degree_of(b1);
                    int dw0 = m2.space.degrees[static_cast<std::size_t>(w0)];
                    if ((db1 * dw0) % 2 != 0) s = k.neg(s);
                    for (const auto& [bt, sb] : b.mul_basis(b1, b2)) {
                        Scalar v = k.mul(s, sb);
                        if (!v.is_zero())
                            rho.emplace_back(tensor_index(tensor_index(v0, w0, n2), bt, nc), v);
                    }
                }
            }
            out.coaction[static_cast<std::size_t>(tensor_index(i, j, n2))] = sv_normalize(k, std::move(rho));
        }
    return out;
}

DualModule phi_dualize(const Comodule& m) {
    const Coring& C = *m.coring;
    if (C.base->dim() != 1) throw UnsupportedError("phi_dualize expects a coalgebra over the ground field");
    const Field& k = m.ground();
    DualModule d;
    d.algebra = dual_algebra(C);
    d.space = m.space;
    int nc = C.dim();
    // f . v = (-1)^{|f| (|v| - |f|)} sum v_0 f(v_1): the double dualization
    // of the coaction, written in closed form on the original basis.
    for (int fi = 0; fi < nc; ++fi) {
        int df = C.carrier.degrees[static_cast<std::size_t>(fi)];
        for (int vi = 0; vi < m.dim(); ++vi) {
            int dv = m.space.degrees[static_cast<std::size_t>(vi)];
            SparseVec acc;
            for (const auto& [f, s] : m.coaction[static_cast<std::size_t>(vi)]) {
                auto [v0, c1] = tensor_split(f, nc);
                if (c1 != fi) continue;
                acc = sv_axpy(k, acc, s, sv_unit(k, v0));
            }
            if ((df * (dv - df)) % 2 != 0) acc = sv_neg(k, acc);
            if (!acc.empty()) d.action[{fi, vi}] = std::move(acc);
        }
    }
    return d;
}

Comodule phi_inverse(const DualModule& d, const CoringPtr& c) {
    const Field& k = c->ground();
    int nc = c->dim();
    Comodule m;
    m.coring = c;
    m.space = d.space;
    for (int i = 0; i < m.dim(); ++i) m.base_action[{i, 0}] = sv_unit(k, i);
    m.coaction.resize(static_cast<std::size_t>(m.dim()));
    for (int vi = 0; vi < m.dim(); ++vi) {
        int dv = d.space.degrees[static_cast<std::size_t>(vi)];
        SparseVec rho;
        for (int fi = 0; fi < nc; ++fi) {
            auto it = d.action.find({fi, vi});
            if (it == d.action.end()) continue;
            int df = c->carrier.degrees[static_cast<std::size_t>(fi)];
            Scalar sign = ((df * (dv - df)) % 2 != 0) ? k.neg(k.one()) : k.one();
            for (const auto& [v0, s] : it->second) rho.emplace_back(tensor_index(v0, fi, nc), k.mul(sign, s));
        }
        m.coaction[static_cast<std::size_t>(vi)] = sv_normalize(k, std::move(rho));
    }
    return m;
}

bool is_comodule_map(const Comodule& m, const Comodule& n, const SparseMatrix& f) {
    const Field& k = m.ground();
    int nc = m.coring->dim();
    for (int i = 0; i < m.dim(); ++i) {
        SparseVec lhs;
        for (const auto& [fl, s] : m.coaction[static_cast<std::size_t>(i)]) {
            auto [v0, c1] = tensor_split(fl, nc);
            for (const auto& [t, v] : f.col(v0)) lhs.emplace_back(tensor_index(t, c1, nc), k.mul(s, v));
        }
        lhs = sv_normalize(k, std::move(lhs));
        SparseVec rhs = n.coaction_of(f.col(i));
        if (!sv_equal(lhs, rhs)) return false;
        for (int a = 0; a < m.coring->base->dim(); ++a) {
            SparseVec l2 = f.apply(m.base_act(sv_unit(k, i), sv_unit(k, a)));
            SparseVec r2 = n.base_act(f.col(i), sv_unit(k, a));
            if (!sv_equal(l2, r2)) return false;
        }
    }
    return true;
}

std::vector<SparseMatrix> comodule_hom(const Comodule& m, const Comodule& n) {
    const Field& k = m.ground();
    int nc = m.coring->dim();
    int nm = m.dim(), nn = n.dim();
    std::vector<SparseVec> rels;
    for (int i = 0; i < nm; ++i) {
        std::map<int, SparseVec> rows;
        for (const auto& [fl, s] : m.coaction[static_cast<std::size_t>(i)]) {
            auto [v0, c1] = tensor_split(fl, nc);
            for (int t = 0; t < nn; ++t) rows[tensor_index(t, c1, nc)].emplace_back(t * nm + v0, s);
        }
        for (int t = 0; t < nn; ++t)
            for (const auto& [fl, s] : n.coaction[static_cast<std::size_t>(t)]) {
                auto [w0, c1] = tensor_split(fl, nc);
                rows[tensor_index(w0, c1, nc)].emplace_back(t * nm + i, k.neg(s));
            }
        for (auto& [key, rel] : rows) {
            (void)key;
            rel = sv_normalize(k, std::move(rel));
            if (!rel.empty()) rels.push_back(std::move(rel));
        }
        for (int t = 0; t < nn; ++t)
            if (n.space.degrees[static_cast<std::size_t>(t)] != m.space.degrees[static_cast<std::size_t>(i)])
                rels.push_back(sv_unit(k, t * nm + i));
        for (int a = 0; a < m.coring->base->dim(); ++a) {
            std::map<int, SparseVec> rows2;
            auto it = m.base_action.find({i, a});
            if (it != m.base_action.end())
                for (const auto& [j, s] : it->second)
                    for (int t = 0; t < nn; ++t) rows2[t].emplace_back(t * nm + j, s);
            for (int t = 0; t < nn; ++t) {
                auto itn = n.base_action.find({t, a});
                if (itn != n.base_action.end())
                    for (const auto& [u, s] : itn->second) rows2[u].emplace_back(t * nm + i, k.neg(s));
            }
            for (auto& [key, rel] : rows2) {
                (void)key;
                rel = sv_normalize(k, std::move(rel));
                if (!rel.empty()) rels.push_back(std::move(rel));
            }
        }
    }
    SparseMatrix relmat(k, static_cast<int>(rels.size()), nn * nm);
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (const auto& [j, s] : rels[r]) relmat.set(static_cast<int>(r), j, s);
    std::vector<SparseMatrix> out;
    for (const auto& kv : kernel_basis(relmat)) {
        SparseMatrix f(k, nn, nm);
        for (const auto& [fl, s] : kv) f.set(fl / nm, fl % nm, s);
        out.push_back(std::move(f));
    }
    return out;
}

Comodule induce_comodule(const Comodule& m, const GaloisExtension& g, const CoringPtr& tensor_coring) {
    if (m.coring->base->dim() != 1)
        throw BaseMismatchError("induce_comodule expects a comodule over a coalgebra over K");
    const Field& k = g.base_field;
    const GradedAlgebra& L = *tensor_coring->base;
    int n = L.dim();
    int nd = m.coring->dim();
    int nm = m.dim();
    Comodule out;
    out.coring = tensor_coring;
    for (int v = 0; v < nm; ++v)
        for (int l = 0; l < n; ++l) {
            out.space.degrees.push_back(m.space.degrees[static_cast<std::size_t>(v)]);
            out.space.labels.push_back(m.space.labels[static_cast<std::size_t>(v)] + "(x)" +
                                       L.space.labels[static_cast<std::size_t>(l)]);
        }
    for (int v = 0; v < nm; ++v)
        for (int l = 0; l < n; ++l)
            for (int a = 0; a < n; ++a) {
                SparseVec act;
                for (const auto& [t, s] : L.mul_basis(l, a)) act.emplace_back(tensor_index(v, t, n), s);
                if (!act.empty()) out.base_action[{tensor_index(v, l, n), a}] = sv_normalize(k, std::move(act));
            }
    int ncar = tensor_coring->dim();  // nd * n * n
    auto carrier_flat = [&](int x, int i, int j) { return (x * n + i) * n + j; };
    out.coaction.resize(static_cast<std::size_t>(nm) * static_cast<std::size_t>(n));
    for (int v = 0; v < nm; ++v)
        for (int l = 0; l < n; ++l) {
            SparseVec rho;
            for (const auto& [fl, s] : m.coaction[static_cast<std::size_t>(v)]) {
                auto [v0, x] = tensor_split(fl, nd);
                rho.emplace_back(tensor_index(tensor_index(v0, 0, n), carrier_flat(x, 0, l), ncar), s);
            }
            out.coaction[static_cast<std::size_t>(tensor_index(v, l, n))] = sv_normalize(k, std::move(rho));
        }
    return out;
}

Comodule descend_comodule(const Comodule& nmod, const GaloisExtension& g, const CoringPtr& d_coring) {
    const Field& k = g.base_field;
    const Coring& E = *nmod.coring;
    const GradedAlgebra& L = *E.base;
    int n = L.dim();
    int nd = d_coring->dim();
    int nn = nmod.dim();
    if (E.dim() != nd * n * n) throw BaseMismatchError("comodule is not over the matching tensor coring");
    auto carrier_split = [&](int f) {
        int j = f % n;
        int i = (f / n) % n;
        int x = f / (n * n);
        return std::tuple<int, int, int>(x, i, j);
    };
    const Coring& D = *d_coring;
    // The Galois part of the coaction: apply eps_D to the D-leg, land in
    // N (x)_L (L (x)_K L), and take the equalizer against v -> v (x) (1 (x) 1).
    GradedVectorSpace ll_space;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ll_space.degrees.push_back(0);
            ll_space.labels.push_back("g" + std::to_string(i) + "." + std::to_string(j));
        }
    MultTable left_on_ll;
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SparseVec v;
                for (const auto& [t, s] : L.mul_basis(a, i)) v.emplace_back(tensor_index(t, j, n), s);
                if (!v.empty()) left_on_ll[{a, tensor_index(i, j, n)}] = sv_normalize(k, std::move(v));
            }
    TensorQuotient q = tensor_over_base(k, nmod.space, nmod.base_action, ll_space, left_on_ll, L);
    SparseMatrix diff(k, q.space.dim(), nn);
    for (int v = 0; v < nn; ++v) {
        SparseVec flat;
        for (const auto& [f, s] : nmod.coaction[static_cast<std::size_t>(v)]) {
            auto [v0, car] = tensor_split(f, E.dim());
            auto [x, i, j] = carrier_split(car);
            SparseVec e = D.counit_of(sv_unit(k, x));
            if (e.empty()) continue;
            flat.emplace_back(tensor_index(v0, tensor_index(i, j, n), n * n), k.mul(s, e.front().second));
        }
        flat = sv_axpy(k, sv_normalize(k, std::move(flat)), k.neg(k.one()),
                       sv_unit(k, tensor_index(v, tensor_index(0, 0, n), n * n)));
        for (const auto& [t, s] : q.proj.apply(flat)) diff.set(t, v, s);
    }
    auto eq = kernel_basis(diff);
    if (static_cast<int>(eq.size()) * n != nn)
        throw NotDescendableError("equalizer has K-dimension " + std::to_string(eq.size()) + ", expected " +
                                  std::to_string(nn) + "/" + std::to_string(n));
    RowReducer span(k, nn, true);
    for (const auto& z : eq) span.insert(z);
    Comodule out;
    out.coring = d_coring;
    for (std::size_t qi = 0; qi < eq.size(); ++qi) {
        out.space.degrees.push_back(
            eq[qi].empty() ? 0 : nmod.space.degrees[static_cast<std::size_t>(eq[qi].front().first)]);
        out.space.labels.push_back("v" + std::to_string(qi));
    }
    for (int i = 0; i < out.space.dim(); ++i) out.base_action[{i, 0}] = sv_unit(k, i);
    out.coaction.resize(eq.size());
    for (std::size_t qi = 0; qi < eq.size(); ++qi) {
        std::map<int, SparseVec> by_d;
        for (const auto& [vz, sz] : eq[qi])
            for (const auto& [f, s] : nmod.coaction[static_cast<std::size_t>(vz)]) {
                auto [v0, car] = tensor_split(f, E.dim());
                auto [x, i, j] = carrier_split(car);
                SparseVec lval = L.mul_basis(i, j);
                SparseVec moved = nmod.base_act(sv_unit(k, v0), lval);
                by_d[x] = sv_axpy(k, by_d[x], k.mul(sz, s), moved);
            }
        SparseVec rho;
        for (const auto& [x, vec] : by_d) {
            if (vec.empty()) continue;
            auto expr = span.express(vec);
            if (!expr) throw NotDescendableError("descended coaction leaves the K-form (invalid descent datum)");
            for (const auto& [vq, s] : *expr) rho.emplace_back(tensor_index(vq, x, nd), s);
        }
        out.coaction[qi] = sv_normalize(k, std::move(rho));
    }
    return out;
}

Comodule random_comodule(const CoringPtr& c, const Bialgebra* b, Rng& rng, int max_blocks) {
    const Field& k = c->ground();
    std::vector<Comodule> blocks;
    int nblocks = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_blocks)));
    for (int i = 0; i < nblocks; ++i) {
        if (b != nullptr && rng.below(2))
            blocks.push_back(unit_comodule(c, *b));
        else
            blocks.push_back(regular_comodule(c));
    }
    Comodule m;
    m.coring = c;
    int nc = c->dim();
    int off = 0;
    for (std::size_t bl = 0; bl < blocks.size(); ++bl) {
        const Comodule& blk = blocks[bl];
        for (int i = 0; i < blk.dim(); ++i) {
            m.space.degrees.push_back(blk.space.degrees[static_cast<std::size_t>(i)]);
            m.space.labels.push_back("b" + std::to_string(bl) + ":" + blk.space.labels[static_cast<std::size_t>(i)]);
        }
        for (const auto& [key, v] : blk.base_action) {
            SparseVec w;
            for (const auto& [t, s] : v) w.emplace_back(t + off, s);
            m.base_action[{key.first + off, key.second}] = std::move(w);
        }
        for (int i = 0; i < blk.dim(); ++i) {
            SparseVec rho;
            for (const auto& [f, s] : blk.coaction[static_cast<std::size_t>(i)]) {
                auto [v0, c1] = tensor_split(f, nc);
                rho.emplace_back(tensor_index(v0 + off, c1, nc), s);
            }
            m.coaction.push_back(sv_normalize(k, std::move(rho)));
        }
        off += blk.dim();
    }
    int nm = m.dim();
    SparseMatrix t = SparseMatrix::identity(k, nm);
    SparseMatrix tinv = SparseMatrix::identity(k, nm);
    int ops = 2 * nm;
    for (int o = 0; o < ops; ++o) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(nm)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(nm)));
        if (i == j || m.space.degrees[static_cast<std::size_t>(i)] != m.space.degrees[static_cast<std::size_t>(j)])
            continue;
        Scalar cs = k.random_nonzero(rng);
        SparseMatrix e = SparseMatrix::identity(k, nm);
        e.set(i, j, cs);
        SparseMatrix einv = SparseMatrix::identity(k, nm);
        einv.set(i, j, k.neg(cs));
        t = e.times(t);
        tinv = tinv.times(einv);
    }
    Comodule out;
    out.coring = c;
    out.space = m.space;
    for (int i = 0; i < nm; ++i) {
        for (int a = 0; a < c->base->dim(); ++a) {
            SparseVec v = t.apply(m.base_act(tinv.col(i), sv_unit(k, a)));
            if (!v.empty()) out.base_action[{i, a}] = std::move(v);
        }
        SparseVec rho;
        for (const auto& [f, s] : m.coaction_of(tinv.col(i))) {
            auto [v0, c1] = tensor_split(f, nc);
            for (const auto& [tt, sv] : t.col(v0)) rho.emplace_back(tensor_index(tt, c1, nc), k.mul(s, sv));
        }
        out.coaction.push_back(sv_normalize(k, std::move(rho)));
    }
    return out;
}

}  // namespace coringlab
