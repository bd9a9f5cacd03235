#include "coringlab/stable.hpp"

#include <algorithm>

#include "coringlab/presentations.hpp"

namespace coringlab {

namespace {

// kE with its monomial basis, generator indices, and Hopf structure.
struct KEData {
    GradedAlgebra alg;
    HopfStructure hopf;
    std::vector<int> gens;  // basis indices of x_1..x_r
    int unit_idx = 0;
};

KEData ke_data(int p, int r) {
    KEData out;
    auto [a, h] = elementary_abelian_hopf(p, r, false);
    out.alg = std::move(a);
    out.hopf = std::move(h);
    for (int i = 1; i <= r; ++i) {
        const std::string want = "x" + std::to_string(i);
        for (int b = 0; b < out.alg.dim(); ++b)
            if (out.alg.space.labels[static_cast<std::size_t>(b)] == want) out.gens.push_back(b);
    }
    for (const auto& [u, c] : out.alg.unit) {
        (void)c;
        out.unit_idx = u;
    }
    return out;
}

SparseMatrix power(const SparseMatrix& m, int e) {
    SparseMatrix out = SparseMatrix::identity(m.field(), m.rows());
    for (int i = 0; i < e; ++i) out = out.times(m);
    return out;
}

}  // namespace

ShiftedPoint shifted_point(int p, int r, const std::vector<long long>& coords) {
    ShiftedPoint pt;
    pt.p = p;
    pt.r = r;
    Field k = Field::prime_field(p);
    bool nonzero = false;
    for (long long c : coords) {
        Scalar s = k.from_int(c);
        if (!s.is_zero()) nonzero = true;
        pt.a.push_back(std::move(s));
    }
    if (static_cast<int>(pt.a.size()) != r) throw Error("point has wrong length");
    if (!nonzero) throw ZeroPointError("the point a must be nonzero");
    return pt;
}

StableModule cyclic_module(int p, int block_size, const Field& k) {
    if (block_size < 0 || block_size > p) throw Error("block size must lie in [0, p]");
    StableModule m;
    m.field = k;
    m.p = p;
    m.t = SparseMatrix(k, block_size, block_size);
    for (int i = 0; i + 1 < block_size; ++i) m.t.set(i + 1, i, k.one());
    return m;
}

StableModule direct_sum(const StableModule& a, const StableModule& b) {
    StableModule out;
    out.field = a.field;
    out.p = a.p;
    int n = a.dim() + b.dim();
    out.t = SparseMatrix(a.field, n, n);
    for (const auto& [i, j, v] : a.t.triplets()) out.t.set(i, j, v);
    for (const auto& [i, j, v] : b.t.triplets()) out.t.set(i + a.dim(), j + a.dim(), v);
    return out;
}

EModule regular_emodule(const ShiftedPoint& pt) {
    KEData ke = ke_data(pt.p, pt.r);
    EModule m;
    m.field = ke.alg.field;
    m.p = pt.p;
    int n = ke.alg.dim();
    for (int g : ke.gens) {
        SparseMatrix x(m.field, n, n);
        for (int b = 0; b < n; ++b)
            for (const auto& [t, c] : ke.alg.mul_basis(g, b)) x.set(t, b, c);
        m.x.push_back(std::move(x));
    }
    return m;
}

std::vector<int> jordan_decompose(const StableModule& m) {
    const Field& k = m.field;
    int n = m.dim();
    std::vector<int> ranks;
    SparseMatrix pw = SparseMatrix::identity(k, n);
    for (int e = 0; e <= m.p + 1; ++e) {
        ranks.push_back(rank(pw));
        pw = pw.times(m.t);
    }
    if (ranks[static_cast<std::size_t>(m.p)] != 0) throw NotNilpotentError("t^p is nonzero");
    std::vector<int> blocks;
    for (int sz = m.p; sz >= 1; --sz) {
        int count = ranks[static_cast<std::size_t>(sz - 1)] - 2 * ranks[static_cast<std::size_t>(sz)] +
                    ranks[static_cast<std::size_t>(sz + 1)];
        for (int c = 0; c < count; ++c) blocks.push_back(sz);
    }
    return blocks;
}

StableModule stable_reduce(const StableModule& m) {
    const Field& k = m.field;
    int n = m.dim();
    // tops of the free blocks: a complement of ker(t^{p-1})
    SparseMatrix tp1 = power(m.t, m.p - 1);
    RowReducer ker_span(k, n);
    for (const auto& z : kernel_basis(tp1)) ker_span.insert(z);
    std::vector<SparseVec> tops;
    for (int i = 0; i < n; ++i)
        if (ker_span.insert(sv_unit(k, i)).novel) tops.push_back(sv_unit(k, i));
    // quotient by the free submodule they generate
    RowReducer sub(k, n);
    for (const auto& v : tops) {
        SparseVec cur = v;
        for (int e = 0; e < m.p; ++e) {
            sub.insert(cur);
            cur = m.t.apply(cur);
        }
    }
    auto free_cols = sub.free_cols();
    std::map<int, int> pos;
    for (std::size_t q = 0; q < free_cols.size(); ++q) pos[free_cols[q]] = static_cast<int>(q);
    StableModule out;
    out.field = k;
    out.p = m.p;
    out.t = SparseMatrix(k, static_cast<int>(free_cols.size()), static_cast<int>(free_cols.size()));
    for (std::size_t q = 0; q < free_cols.size(); ++q) {
        SparseVec img = sub.residue(m.t.apply(sv_unit(k, free_cols[q])));
        for (const auto& [c, v] : img) out.t.set(pos.at(c), static_cast<int>(q), v);
    }
    return out;
}

StableModule restrict_along(const EModule& m, const ShiftedPoint& pt) {
    const Field& k = m.field;
    StableModule out;
    out.field = k;
    out.p = pt.p;
    out.t = SparseMatrix(k, m.dim(), m.dim());
    for (int i = 0; i < pt.r; ++i)
        out.t = out.t.plus(m.x[static_cast<std::size_t>(i)].scaled(pt.a[static_cast<std::size_t>(i)]));
    return out;
}

Coinduced coinduce(const StableModule& n, const ShiftedPoint& pt) {
    const Field& k = n.field;
    KEData ke = ke_data(pt.p, pt.r);
    int ned = n.dim(), ked = ke.alg.dim();
    // phi(t) acting on kE by left multiplication
    SparseMatrix phit(k, ked, ked);
    for (int i = 0; i < pt.r; ++i) {
        int g = ke.gens[static_cast<std::size_t>(i)];
        for (int b = 0; b < ked; ++b)
            for (const auto& [t, c] : ke.alg.mul_basis(g, b)) {
                Scalar cur = phit.get(t, b);
                phit.set(t, b, k.add(cur, k.mul(pt.a[static_cast<std::size_t>(i)], c)));
            }
    }
    // unknowns f[nd][u], flat nd*ked + u; kC-linearity f(phi(t) u) = T f(u)
    std::vector<SparseVec> rels;
    for (int u = 0; u < ked; ++u)
        for (int out_n = 0; out_n < ned; ++out_n) {
            SparseVec rel;
            for (const auto& [v, c] : phit.col(u)) rel.emplace_back(out_n * ked + v, c);
            for (int mrow = 0; mrow < ned; ++mrow) {
                Scalar c = n.t.get(out_n, mrow);
                if (!c.is_zero()) rel.emplace_back(mrow * ked + u, k.neg(c));
            }
            rel = sv_normalize(k, std::move(rel));
            if (!rel.empty()) rels.push_back(std::move(rel));
        }
    SparseMatrix relmat(k, static_cast<int>(rels.size()), ned * ked);
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (const auto& [j, s] : rels[i]) relmat.set(static_cast<int>(i), j, s);
    Coinduced out;
    out.basis = kernel_basis(relmat);
    out.ke_dim = ked;
    out.n_dim = ned;
    out.span = std::make_shared<RowReducer>(k, ned * ked, true);
    for (const auto& b : out.basis) out.span->insert(b);
    int w = static_cast<int>(out.basis.size());
    out.emod.field = k;
    out.emod.p = pt.p;
    for (int j = 0; j < pt.r; ++j) {
        int g = ke.gens[static_cast<std::size_t>(j)];
        SparseMatrix xj(k, w, w);
        for (int b = 0; b < w; ++b) {
            SparseVec flat;
            for (int u = 0; u < ked; ++u)
                for (const auto& [v, c] : ke.alg.mul_basis(g, u))
                    for (int nn = 0; nn < ned; ++nn) {
                        Scalar fv = sv_get(k, out.basis[static_cast<std::size_t>(b)], nn * ked + v);
                        if (!fv.is_zero()) flat.emplace_back(nn * ked + u, k.mul(c, fv));
                    }
            auto expr = out.span->express(sv_normalize(k, std::move(flat)));
            if (!expr) throw Error("coinduced action left the solution space (internal)");
            for (const auto& [t, c] : *expr) xj.set(t, b, c);
        }
        out.emod.x.push_back(std::move(xj));
    }
    out.restricted = restrict_along(out.emod, pt);
    return out;
}

namespace {

// action matrices of every monomial basis element of kE on an EModule
std::vector<SparseMatrix> monomial_actions(const EModule& m, const KEData& ke) {
    const Field& k = m.field;
    std::vector<SparseMatrix> mono;
    mono.reserve(static_cast<std::size_t>(ke.alg.dim()));
    for (int b = 0; b < ke.alg.dim(); ++b) {
        SparseMatrix acc = SparseMatrix::identity(k, m.dim());
        const std::string& lab = ke.alg.space.labels[static_cast<std::size_t>(b)];
        if (lab != "1") {
            std::size_t pos = 0;
            while (pos < lab.size()) {
                std::size_t star = lab.find('*', pos);
                std::string factor = lab.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
                pos = star == std::string::npos ? lab.size() : star + 1;
                std::size_t caret = factor.find('^');
                std::string name = caret == std::string::npos ? factor : factor.substr(0, caret);
                int exp = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
                int gi = std::stoi(name.substr(1)) - 1;
                for (int e = 0; e < exp; ++e) acc = acc.times(m.x[static_cast<std::size_t>(gi)]);
            }
        }
        mono.push_back(std::move(acc));
    }
    return mono;
}

}  // namespace

SparseMatrix adjoint_forward(const EModule& m, const StableModule& n, const ShiftedPoint& pt,
                             const SparseMatrix& u) {
    const Field& k = n.field;
    KEData ke = ke_data(pt.p, pt.r);
    Coinduced cd = coinduce(n, pt);
    int ked = ke.alg.dim();
    auto mono = monomial_actions(m, ke);
    SparseMatrix out(k, static_cast<int>(cd.basis.size()), m.dim());
    for (int xi = 0; xi < m.dim(); ++xi) {
        SparseVec flat;
        for (int v = 0; v < ked; ++v) {
            SparseVec uv = u.apply(mono[static_cast<std::size_t>(v)].col(xi));
            for (const auto& [nn, c] : uv) flat.emplace_back(nn * ked + v, c);
        }
        auto expr = cd.span->express(sv_normalize(k, std::move(flat)));
        if (!expr) throw Error("adjoint image is not kC-linear (invalid input)");
        for (const auto& [t, c] : *expr) out.set(t, xi, c);
    }
    return out;
}

SparseMatrix adjoint_backward(const EModule& m, const StableModule& n, const ShiftedPoint& pt,
                              const SparseMatrix& w) {
    const Field& k = n.field;
    KEData ke = ke_data(pt.p, pt.r);
    Coinduced cd = coinduce(n, pt);
    int ked = cd.ke_dim;
    SparseMatrix out(k, n.dim(), m.dim());
    for (int xi = 0; xi < m.dim(); ++xi) {
        SparseVec img;
        for (const auto& [b, c] : w.col(xi))
            for (int nn = 0; nn < n.dim(); ++nn) {
                Scalar fv = sv_get(k, cd.basis[static_cast<std::size_t>(b)], nn * ked + ke.unit_idx);
                if (!fv.is_zero()) img = sv_axpy(k, img, k.mul(c, fv), sv_unit(k, nn));
            }
        for (const auto& [t, c] : img) out.set(t, xi, c);
    }
    return out;
}

std::vector<SparseMatrix> hom_kc(const StableModule& m, const StableModule& n) {
    const Field& k = m.field;
    int nm = m.dim(), nn = n.dim();
    // F T_m = T_n F
    std::vector<SparseVec> rels;
    for (int j = 0; j < nm; ++j) {
        std::map<int, SparseVec> rows;
        for (const auto& [jj, c] : m.t.col(j))
            for (int i = 0; i < nn; ++i) rows[i].emplace_back(i * nm + jj, c);
        for (int ii = 0; ii < nn; ++ii)
            for (int i = 0; i < nn; ++i) {
                Scalar c = n.t.get(ii, i);
                if (!c.is_zero()) rows[ii].emplace_back(i * nm + j, k.neg(c));
            }
        for (auto& [key, rel] : rows) {
            (void)key;
            rel = sv_normalize(k, std::move(rel));
            if (!rel.empty()) rels.push_back(std::move(rel));
        }
    }
    SparseMatrix relmat(k, static_cast<int>(rels.size()), nn * nm);
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (const auto& [j, s] : rels[i]) relmat.set(static_cast<int>(i), j, s);
    std::vector<SparseMatrix> out;
    for (const auto& z : kernel_basis(relmat)) {
        SparseMatrix f(k, nn, nm);
        for (const auto& [fl, s] : z) f.set(fl / nm, fl % nm, s);
        out.push_back(std::move(f));
    }
    return out;
}

SparseVec StableHom::express(const Field& k, const SparseMatrix& f) const {
    SparseVec flat;
    int nm = f.cols();
    for (const auto& [i, j, v] : f.triplets()) flat.emplace_back(i * nm + j, v);
    flat = sv_normalize(k, std::move(flat));
    auto expr = span->express(flat);
    if (!expr) throw Error("map is not kC-linear (cannot express stably)");
    SparseVec out;
    for (const auto& [idx, c] : *expr) {
        auto it = rep_of_input.find(idx);
        if (it != rep_of_input.end()) out.emplace_back(it->second, c);
    }
    return sv_normalize(k, std::move(out));
}

StableHom stable_hom(const StableModule& m, const StableModule& n) {
    const Field& k = m.field;
    int nm = m.dim(), nn = n.dim();
    StableHom out;
    out.span = std::make_shared<RowReducer>(k, nn * nm, true);
    // free cover F_n = kC (x) n, pi(t^e (x) v) = t^e v
    StableModule fn;
    fn.field = k;
    fn.p = n.p;
    int fdim = n.p * nn;
    fn.t = SparseMatrix(k, fdim, fdim);
    for (int e = 0; e + 1 < n.p; ++e)
        for (int v = 0; v < nn; ++v) fn.t.set((e + 1) * nn + v, e * nn + v, k.one());
    SparseMatrix pi(k, nn, fdim);
    SparseMatrix tpow = SparseMatrix::identity(k, nn);
    for (int e = 0; e < n.p; ++e) {
        for (int v = 0; v < nn; ++v)
            for (const auto& [t, c] : tpow.col(v)) pi.set(t, e * nn + v, c);
        tpow = n.t.times(tpow);
    }
    for (const auto& g : hom_kc(m, fn)) {
        SparseMatrix comp = pi.times(g);
        SparseVec flat;
        for (const auto& [i, j, v] : comp.triplets()) flat.emplace_back(i * nm + j, v);
        if (out.span->insert(sv_normalize(k, std::move(flat))).novel) ++out.factoring_dim;
    }
    for (const auto& f : hom_kc(m, n)) {
        ++out.hom_dim;
        SparseVec flat;
        for (const auto& [i, j, v] : f.triplets()) flat.emplace_back(i * nm + j, v);
        int input = out.span->inserted();
        if (out.span->insert(sv_normalize(k, std::move(flat))).novel) {
            out.rep_of_input[input] = static_cast<int>(out.reps.size());
            out.reps.push_back(f);
        }
    }
    return out;
}

ComonadValue comonad_value(const StableModule& n, const ShiftedPoint& pt) {
    const Field& k = n.field;
    KEData ke = ke_data(pt.p, pt.r);
    ComonadValue out;
    out.data = coinduce(n, pt);
    int w = static_cast<int>(out.data.basis.size());
    out.counit = SparseMatrix(k, n.dim(), w);
    for (int b = 0; b < w; ++b)
        for (int nn = 0; nn < n.dim(); ++nn) {
            Scalar fv = sv_get(k, out.data.basis[static_cast<std::size_t>(b)], nn * out.data.ke_dim + ke.unit_idx);
            if (!fv.is_zero()) out.counit.set(nn, b, fv);
        }
    return out;
}

SparseMatrix comonad_on_map(const StableModule& m, const StableModule& n, const ShiftedPoint& pt,
                            const SparseMatrix& g) {
    const Field& k = m.field;
    Coinduced cm = coinduce(m, pt), cn = coinduce(n, pt);
    int ked = cm.ke_dim;
    SparseMatrix out(k, static_cast<int>(cn.basis.size()), static_cast<int>(cm.basis.size()));
    for (std::size_t b = 0; b < cm.basis.size(); ++b) {
        SparseVec flat;
        for (const auto& [fl, c] : cm.basis[b]) {
            int mm = fl / ked, u = fl % ked;
            for (const auto& [t, s] : g.col(mm)) flat.emplace_back(t * ked + u, k.mul(c, s));
        }
        auto expr = cn.span->express(sv_normalize(k, std::move(flat)));
        if (!expr) throw Error("comonad image is not kC-linear (internal)");
        for (const auto& [t, c] : *expr) out.set(t, static_cast<int>(b), c);
    }
    return out;
}

SparseMatrix comonad_comult(const StableModule& n, const ShiftedPoint& pt) {
    const Field& k = n.field;
    KEData ke = ke_data(pt.p, pt.r);
    Coinduced c1 = coinduce(n, pt);
    Coinduced c2 = coinduce(c1.restricted, pt);
    int ked = c1.ke_dim;
    int w1 = static_cast<int>(c1.basis.size());
    SparseMatrix out(k, static_cast<int>(c2.basis.size()), w1);
    for (int b = 0; b < w1; ++b) {
        // Delta(f)(v) = v.f with (v.f)(w) = f(w v)
        SparseVec flat2;
        for (int v = 0; v < ked; ++v) {
            SparseVec vf;
            for (int w = 0; w < ked; ++w)
                for (const auto& [prod, c] : ke.alg.mul_basis(w, v))
                    for (int nn = 0; nn < c1.n_dim; ++nn) {
                        Scalar fv = sv_get(k, c1.basis[static_cast<std::size_t>(b)], nn * ked + prod);
                        if (!fv.is_zero()) vf.emplace_back(nn * ked + w, k.mul(c, fv));
                    }
            auto expr = c1.span->express(sv_normalize(k, std::move(vf)));
            if (!expr) throw Error("translated map is not kC-linear (internal)");
            for (const auto& [q, c] : *expr) flat2.emplace_back(q * ked + v, c);
        }
        auto expr2 = c2.span->express(sv_normalize(k, std::move(flat2)));
        if (!expr2) throw Error("comultiplication image is not kC-linear (internal)");
        for (const auto& [t, c] : *expr2) out.set(t, b, c);
    }
    return out;
}

StableEndo stable_endomorphism_algebra(int p) {
    Field k = Field::prime_field(p);
    StableEndo out;
    for (int i = 1; i <= p - 1; ++i) out.summand_sizes.push_back(i);
    int nvert = p - 1;
    QuiverData q;
    q.field.characteristic = p;
    q.vertices = nvert;
    for (int i = 1; i <= nvert - 1; ++i) q.arrows.push_back({"a" + std::to_string(i), i - 1, i});
    for (int i = 1; i <= nvert - 1; ++i) q.arrows.push_back({"b" + std::to_string(i), i, i - 1});
    auto aidx = [&](int i) { return i - 1; };
    auto bidx = [&](int i) { return nvert - 1 + i - 1; };
    if (nvert >= 2) {
        q.relations.push_back({{Rat(1), {aidx(1), bidx(1)}}});
        q.relations.push_back({{Rat(1), {bidx(nvert - 1), aidx(nvert - 1)}}});
        for (int i = 1; i <= nvert - 2; ++i)
            q.relations.push_back({{Rat(1), {bidx(i), aidx(i)}}, {Rat(-1), {aidx(i + 1), bidx(i + 1)}}});
    }
    AlgebraPresentation pres;
    pres.kind = AlgebraPresentation::Kind::QuiverWithRelations;
    pres.data = q;
    out.quiver_pi = realize(pres, 2 * p);
    out.quiver_pi.validate();

    std::vector<StableModule> mods;
    for (int i = 1; i <= nvert; ++i) mods.push_back(cyclic_module(p, i, k));
    std::map<std::pair<int, int>, StableHom> shom;
    std::map<std::pair<int, int>, int> block_offset;
    int total = 0;
    for (int i = 0; i < nvert; ++i)
        for (int j = 0; j < nvert; ++j) {
            StableHom h = stable_hom(mods[static_cast<std::size_t>(i)], mods[static_cast<std::size_t>(j)]);
            block_offset[{i, j}] = total;
            total += static_cast<int>(h.reps.size());
            shom.emplace(std::make_pair(i, j), std::move(h));
        }
    out.stable_end_dim = total;
    out.report.add("dimension-match", total == out.quiver_pi.dim(),
                   "stable End dim " + std::to_string(total) + " vs quiver dim " +
                       std::to_string(out.quiver_pi.dim()));

    auto alpha = [&](int i) {  // M_i -> M_{i+1}, t^a -> t^{a+1}
        SparseMatrix m(k, i + 1, i);
        for (int a = 0; a < i; ++a) m.set(a + 1, a, k.one());
        return m;
    };
    auto beta = [&](int i) {  // M_{i+1} -> M_i, truncation
        SparseMatrix m(k, i, i + 1);
        for (int a = 0; a < i; ++a) m.set(a, a, k.one());
        return m;
    };
    if (nvert >= 2) {
        bool ok = shom.at({0, 0}).express(k, beta(1).times(alpha(1))).empty();
        out.report.add("relation b1.a1 = 0", ok);
        ok = shom.at({nvert - 1, nvert - 1}).express(k, alpha(nvert - 1).times(beta(nvert - 1))).empty();
        out.report.add("relation a_(p-2).b_(p-2) = 0", ok);
        for (int i = 1; i <= nvert - 2; ++i) {
            SparseVec lhs = shom.at({i, i}).express(k, alpha(i).times(beta(i)));
            SparseVec rhs = shom.at({i, i}).express(k, beta(i + 1).times(alpha(i + 1)));
            out.report.add("relation a_" + std::to_string(i) + ".b_" + std::to_string(i) + " = b_" +
                               std::to_string(i + 1) + ".a_" + std::to_string(i + 1),
                           sv_equal(lhs, rhs));
        }
    }
    RowReducer indep(k, total, false);
    bool all_indep = true;
    for (int b2 = 0; b2 < out.quiver_pi.dim(); ++b2) {
        const std::string& lab = out.quiver_pi.space.labels[static_cast<std::size_t>(b2)];
        int src = -1, tgt = -1;
        SparseMatrix img(k, 0, 0);
        if (lab[0] == 'e') {
            src = tgt = std::stoi(lab.substr(1)) - 1;
            img = SparseMatrix::identity(k, src + 1);
        } else {
            std::size_t pos = 0;
            std::vector<std::string> names;
            while (pos < lab.size()) {
                std::size_t star = lab.find('*', pos);
                names.push_back(lab.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
                pos = star == std::string::npos ? lab.size() : star + 1;
            }
            for (const auto& nm : names) {
                int i = std::stoi(nm.substr(1));
                SparseMatrix step = nm[0] == 'a' ? alpha(i) : beta(i);
                int s = nm[0] == 'a' ? i - 1 : i;
                int t = nm[0] == 'a' ? i : i - 1;
                if (src < 0) {
                    src = s;
                    img = step;
                } else {
                    img = step.times(img);
                }
                tgt = t;
            }
        }
        out.images.push_back(img);
        SparseVec coords = shom.at({src, tgt}).express(k, img);
        SparseVec global;
        for (const auto& [r, c] : coords) global.emplace_back(block_offset.at({src, tgt}) + r, c);
        if (!indep.insert(global).novel) all_indep = false;
    }
    out.report.add("independent-stable-images", all_indep);
    return out;
}

std::vector<int> comonad_object_jordan_type(const ShiftedPoint& pt) {
    Field k = pt.field();
    StableModule g = cyclic_module(pt.p, 1, k);
    for (int i = 2; i <= pt.p - 1; ++i) g = direct_sum(g, cyclic_module(pt.p, i, k));
    Coinduced c = coinduce(g, pt);
    return jordan_decompose(c.restricted);
}

ShiftedCoringP2 shifted_subgroup_bialgebra_p2(const ShiftedPoint& pt) {
    if (pt.p != 2) throw Error("p = 2 constructor called with odd p");
    Field k = pt.field();
    KEData ke = ke_data(2, pt.r);
    StableModule triv = cyclic_module(2, 1, k);
    Coinduced c1 = coinduce(triv, pt);
    int w = static_cast<int>(c1.basis.size());
    int ked = c1.ke_dim;
    ShiftedCoringP2 out;
    out.rank = pt.r;
    Report& rep = out.certification;
    rep.add("carrier-dimension-2^(r-1)", w == (1 << (pt.r - 1)),
            "dim " + std::to_string(w) + " vs " + std::to_string(1 << (pt.r - 1)));
    auto jt = jordan_decompose(c1.restricted);
    bool all_ones = true;
    for (int b : jt)
        if (b != 1) all_ones = false;
    rep.add("stable-reduction-trivial", all_ones);

    Bialgebra& bi = out.hopf.bi;
    auto base = std::make_shared<GradedAlgebra>(trivial_algebra(k));
    bi.coring.base = base;
    for (int i = 0; i < w; ++i) {
        bi.coring.carrier.degrees.push_back(0);
        bi.coring.carrier.labels.push_back("f" + std::to_string(i));
        bi.coring.left_action[{0, i}] = sv_unit(k, i);
        bi.coring.right_action[{i, 0}] = sv_unit(k, i);
    }
    auto value_at = [&](int b, int u) { return sv_get(k, c1.basis[static_cast<std::size_t>(b)], u); };
    // multiplication: convolution through the Hopf diagonal of kE
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b) {
            SparseVec flat;
            for (int u = 0; u < ked; ++u) {
                Scalar acc = k.zero();
                for (const auto& [fl, c] : ke.hopf.comult[static_cast<std::size_t>(u)]) {
                    auto [u1, u2] = tensor_split(fl, ked);
                    acc = k.add(acc, k.mul(c, k.mul(value_at(a, u1), value_at(b, u2))));
                }
                if (!acc.is_zero()) flat.emplace_back(u, acc);
            }
            auto expr = c1.span->express(flat);
            if (!expr) throw Error("convolution left the coinduced space (internal)");
            if (!expr->empty()) bi.mult[{a, b}] = *expr;
        }
    {
        SparseVec eps;
        for (const auto& [i, c] : *ke.alg.augmentation) eps.emplace_back(i, c);
        auto expr = c1.span->express(sv_normalize(k, std::move(eps)));
        if (!expr) throw Error("augmentation is not kC-linear (internal)");
        bi.unit = *expr;
    }
    bi.coring.counit = SparseMatrix(k, 1, w);
    for (int b = 0; b < w; ++b) {
        Scalar v = value_at(b, ke.unit_idx);
        if (!v.is_zero()) bi.coring.counit.set(0, b, v);
    }
    // comultiplication through the identification W (x) W = coinduce(W-space)
    {
        Coinduced c2 = coinduce(c1.restricted, pt);
        SparseMatrix delta = comonad_comult(triv, pt);
        std::vector<int> input_pair;
        RowReducer psi_solver(k, static_cast<int>(c2.basis.size()), true);
        for (int a = 0; a < w; ++a)
            for (int b = 0; b < w; ++b) {
                // psi(f_a (x) e_b): v -> f_a(v) e_b, flat over (w-coord, v)
                SparseVec flat;
                for (int v = 0; v < ked; ++v) {
                    Scalar fv = value_at(a, v);
                    if (!fv.is_zero()) flat.emplace_back(b * ked + v, fv);
                }
                auto expr = c2.span->express(sv_normalize(k, std::move(flat)));
                if (!expr) throw Error("tensor identification left the coinduced space (internal)");
                psi_solver.insert(*expr);
                input_pair.push_back(tensor_index(a, b, w));
            }
        bi.coring.comult.resize(static_cast<std::size_t>(w));
        for (int b = 0; b < w; ++b) {
            auto expr = psi_solver.express(delta.col(b));
            if (!expr) throw Error("comonad comultiplication escapes the tensor square (internal)");
            SparseVec cm;
            for (const auto& [idx, c] : *expr) cm.emplace_back(input_pair[static_cast<std::size_t>(idx)], c);
            bi.coring.comult[static_cast<std::size_t>(b)] = sv_normalize(k, std::move(cm));
        }
    }
    // over GF(2) the antipode of an exterior bialgebra is the identity
    out.hopf.antipode = SparseMatrix::identity(k, w);
    rep.add("hopf-axioms", check_hopf(out.hopf).all_pass());

    auto prim = primitives(bi);
    rep.add("primitive-count-(r-1)", static_cast<int>(prim.size()) == pt.r - 1, "got " + std::to_string(prim.size()));
    if (static_cast<int>(prim.size()) == pt.r - 1 && w == (1 << (pt.r - 1))) {
        int n = pt.r - 1;
        SparseMatrix u(k, w, w);
        HopfAlgebra ext = exterior_bialgebra(n, false, k);
        std::vector<unsigned> masks;
        for (unsigned msk = 0; msk < (1u << n); ++msk) masks.push_back(msk);
        std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
            int px = __builtin_popcount(x), py = __builtin_popcount(y);
            if (px != py) return px < py;
            return x < y;
        });
        for (std::size_t col = 0; col < masks.size(); ++col) {
            SparseVec prod = bi.unit;
            for (int g = 0; g < n; ++g)
                if (masks[col] >> g & 1u) prod = bi.mul(prod, prim[static_cast<std::size_t>(g)]);
            for (const auto& [t, c] : prod) u.set(t, static_cast<int>(col), c);
        }
        RowReducer inv(k, w, true);
        bool invertible = true;
        for (int col = 0; col < w; ++col)
            if (!inv.insert(u.col(col)).novel) invertible = false;
        rep.add("primitive-basis-invertible", invertible);
        if (invertible) {
            auto express_u = [&](const SparseVec& v) {
                auto e = inv.express(v);
                return e ? *e : SparseVec{};
            };
            bool mult_match = true, comult_match = true, counit_match = true;
            for (int i = 0; i < w && mult_match; ++i)
                for (int j = 0; j < w && mult_match; ++j)
                    if (!sv_equal(express_u(bi.mul(u.col(i), u.col(j))), ext.bi.mul_basis(i, j))) mult_match = false;
            for (int i = 0; i < w && comult_match; ++i) {
                SparseVec dc = bi.coring.comult_of(u.col(i));
                SparseVec in_u;
                for (const auto& [fl, c] : dc) {
                    auto [x, y] = tensor_split(fl, w);
                    for (const auto& [xi, cx] : express_u(sv_unit(k, x)))
                        for (const auto& [yi, cy] : express_u(sv_unit(k, y)))
                            in_u.emplace_back(tensor_index(xi, yi, w), k.mul(c, k.mul(cx, cy)));
                }
                if (!sv_equal(sv_normalize(k, std::move(in_u)), ext.bi.coring.comult[static_cast<std::size_t>(i)]))
                    comult_match = false;
            }
            for (int i = 0; i < w; ++i)
                if (!k.equal(bi.counit_scalar(u.col(i)), ext.bi.counit_scalar(sv_unit(k, i)))) counit_match = false;
            rep.add("matches-exterior-bialgebra", mult_match && comult_match && counit_match);
        }
    }
    return out;
}

ShiftedCoringOddP shifted_subgroup_coring_odd(const ShiftedPoint& pt) {
    if (pt.p == 2) throw Error("odd-p constructor called with p = 2");
    Field k = pt.field();
    int nvert = pt.p - 1;
    std::vector<StableModule> mods;
    for (int i = 1; i <= nvert; ++i) mods.push_back(cyclic_module(pt.p, i, k));
    StableModule g = mods[0];
    for (int i = 1; i < nvert; ++i) g = direct_sum(g, mods[static_cast<std::size_t>(i)]);

    StableEndo endo = stable_endomorphism_algebra(pt.p);
    // the stable category is ungraded: forget the path-length grading of Pi
    GradedAlgebra pi_ungraded = endo.quiver_pi;
    for (auto& d : pi_ungraded.space.degrees) d = 0;
    pi_ungraded.degree_bound = 0;
    auto pi = std::make_shared<GradedAlgebra>(std::move(pi_ungraded));

    ComonadValue cv = comonad_value(g, pt);
    ShiftedCoringOddP out;
    out.object_jordan_type = jordan_decompose(cv.data.restricted);

    const StableModule& cobj = cv.data.restricted;
    StableHom y_c = stable_hom(g, cobj);
    int carrier_dim = static_cast<int>(y_c.reps.size());

    Coring& c = out.coring;
    c.base = pi;
    c.stable = true;
    c.proj_factor_dims = {y_c.factoring_dim};
    for (int i = 0; i < carrier_dim; ++i) {
        c.carrier.degrees.push_back(0);
        c.carrier.labels.push_back("h" + std::to_string(i));
    }
    // images of the realized Pi basis inside stable End(G), as whole-G maps
    std::vector<int> offs(static_cast<std::size_t>(nvert) + 1, 0);
    for (int i = 0; i < nvert; ++i)
        offs[static_cast<std::size_t>(i) + 1] = offs[static_cast<std::size_t>(i)] + (i + 1);
    std::vector<SparseMatrix> whole_images;
    StableHom end_g = stable_hom(g, g);
    RowReducer pi_images(k, static_cast<int>(end_g.reps.size()), true);
    for (int b = 0; b < pi->dim(); ++b) {
        const SparseMatrix& img = endo.images[static_cast<std::size_t>(b)];
        int src = img.cols() - 1, tgt = img.rows() - 1;
        SparseMatrix whole(k, g.dim(), g.dim());
        for (const auto& [i, j, v] : img.triplets())
            whole.set(offs[static_cast<std::size_t>(tgt)] + i, offs[static_cast<std::size_t>(src)] + j, v);
        whole_images.push_back(whole);
        pi_images.insert(end_g.express(k, whole));
    }
    auto pi_coords = [&](const SparseMatrix& f) {
        auto expr = pi_images.express(end_g.express(k, f));
        if (!expr) throw Error("stable endomorphism not in the image of Pi (internal)");
        return *expr;
    };
    for (int b = 0; b < pi->dim(); ++b) {
        SparseMatrix cwhole = comonad_on_map(g, g, pt, whole_images[static_cast<std::size_t>(b)]);
        for (int h = 0; h < carrier_dim; ++h) {
            SparseVec rv = y_c.express(k, y_c.reps[static_cast<std::size_t>(h)].times(
                                              whole_images[static_cast<std::size_t>(b)]));
            if (!rv.empty()) c.right_action[{h, b}] = rv;
            SparseVec lv = y_c.express(k, cwhole.times(y_c.reps[static_cast<std::size_t>(h)]));
            if (!lv.empty()) c.left_action[{b, h}] = lv;
        }
    }
    c.counit = SparseMatrix(k, pi->dim(), carrier_dim);
    for (int h = 0; h < carrier_dim; ++h)
        for (const auto& [t, s] : pi_coords(cv.counit.times(y_c.reps[static_cast<std::size_t>(h)])))
            c.counit.set(t, h, s);
    {
        SparseMatrix delta = comonad_comult(g, pt);
        Coinduced c2 = coinduce(cobj, pt);
        StableHom y_cc = stable_hom(g, c2.restricted);
        RowReducer mu_span(k, static_cast<int>(y_cc.reps.size()), true);
        std::vector<int> mu_pair;
        for (int a = 0; a < carrier_dim; ++a) {
            SparseMatrix ca = comonad_on_map(g, cobj, pt, y_c.reps[static_cast<std::size_t>(a)]);
            for (int b = 0; b < carrier_dim; ++b) {
                SparseMatrix muv = ca.times(y_c.reps[static_cast<std::size_t>(b)]);
                mu_span.insert(y_cc.express(k, muv));
                mu_pair.push_back(tensor_index(a, b, carrier_dim));
            }
        }
        c.comult.resize(static_cast<std::size_t>(carrier_dim));
        for (int h = 0; h < carrier_dim; ++h) {
            SparseMatrix dh = delta.times(y_c.reps[static_cast<std::size_t>(h)]);
            auto expr = mu_span.express(y_cc.express(k, dh));
            if (!expr) throw Error("comultiplication not expressible through mu (internal)");
            SparseVec cm;
            for (const auto& [idx, s] : *expr) cm.emplace_back(mu_pair[static_cast<std::size_t>(idx)], s);
            c.comult[static_cast<std::size_t>(h)] = sv_normalize(k, std::move(cm));
        }
    }
    out.axioms = check_coring(c);
    return out;
}

StableModule random_stable_module(int p, const Field& k, Rng& rng, int max_dim) {
    StableModule m = cyclic_module(p, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p))), k);
    while (m.dim() < max_dim && rng.below(2))
        m = direct_sum(m, cyclic_module(p, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p))), k));
    int n = m.dim();
    SparseMatrix t = SparseMatrix::identity(k, n), tinv = SparseMatrix::identity(k, n);
    for (int o = 0; o < 2 * n; ++o) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (i == j) continue;
        Scalar c = k.random_nonzero(rng);
        SparseMatrix e = SparseMatrix::identity(k, n);
        e.set(i, j, c);
        SparseMatrix einv = SparseMatrix::identity(k, n);
        einv.set(i, j, k.neg(c));
        t = e.times(t);
        tinv = tinv.times(einv);
    }
    m.t = t.times(m.t).times(tinv);
    return m;
}

EModule random_emodule(const ShiftedPoint& pt, Rng& rng, int max_dim) {
    KEData ke = ke_data(pt.p, pt.r);
    auto a = std::make_shared<GradedAlgebra>(ke.alg);
    AlgModule mod = random_module(a, rng, max_dim);
    EModule out;
    out.field = a->field;
    out.p = pt.p;
    for (int g : ke.gens) {
        SparseMatrix x(a->field, mod.dim(), mod.dim());
        for (int i = 0; i < mod.dim(); ++i)
            for (const auto& [t, c] : mod.act_basis(i, g)) x.set(t, i, c);
        out.x.push_back(std::move(x));
    }
    return out;
}

}  // namespace coringlab
