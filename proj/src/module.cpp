#include "coringlab/module.hpp"

namespace coringlab {

SparseVec AlgModule::act_basis(int mi, int aj) const {
    auto it = action.find({mi, aj});
    if (it == action.end()) return {};
    return it->second;
}

SparseVec AlgModule::act(const SparseVec& m, const SparseVec& a) const {
    SparseVec out;
    const Field& k = algebra->field;
    for (const auto& [mi, cm] : m)
        for (const auto& [aj, ca] : a) {
            Scalar c = k.mul(cm, ca);
            if (c.is_zero()) continue;
            out = sv_axpy(k, out, c, act_basis(mi, aj));
        }
    return out;
}

std::optional<std::string> AlgModule::check() const {
    const Field& k = algebra->field;
    for (int mi = 0; mi < dim(); ++mi) {
        if (!sv_equal(act(sv_unit(k, mi), algebra->unit), sv_unit(k, mi)))
            return "m*1 != m at " + space.labels[static_cast<std::size_t>(mi)];
        for (int i = 0; i < algebra->dim(); ++i) {
            for (const auto& [t, c] : act_basis(mi, i)) {
                (void)c;
                if (space.degrees[static_cast<std::size_t>(t)] !=
                    space.degrees[static_cast<std::size_t>(mi)] + algebra->degree_of(i))
                    return "action not degree-preserving";
            }
            for (int j = 0; j < algebra->dim(); ++j) {
                SparseVec lhs = act(sv_unit(k, mi), algebra->mul_basis(i, j));
                SparseVec rhs = act(act_basis(mi, i), sv_unit(k, j));
                if (!sv_equal(lhs, rhs))
                    return "associativity fails at (" + space.labels[static_cast<std::size_t>(mi)] + ", " +
                           algebra->space.labels[static_cast<std::size_t>(i)] + ", " +
                           algebra->space.labels[static_cast<std::size_t>(j)] + ")";
            }
        }
    }
    return std::nullopt;
}

void AlgModule::validate() const {
    space.validate();
    if (auto w = check()) throw Error("not a module: " + *w);
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    return ModuleMap(g.degree + f.degree, g.mat.times(f.mat));
}

ModuleMap identity_module_map(const AlgModule& m) {
    return ModuleMap(0, SparseMatrix::identity(m.algebra->field, m.dim()));
}

std::optional<std::string> check_module_map(const AlgModule& source, const AlgModule& target, const ModuleMap& f) {
    const Field& k = source.algebra->field;
    if (f.mat.cols() != source.dim() || f.mat.rows() != target.dim()) return "shape mismatch";
    for (int mi = 0; mi < source.dim(); ++mi) {
        for (const auto& [t, c] : f.mat.col(mi)) {
            (void)c;
            if (target.space.degrees[static_cast<std::size_t>(t)] !=
                source.space.degrees[static_cast<std::size_t>(mi)] + f.degree)
                return "map is not homogeneous of the stated degree";
        }
        for (int aj = 0; aj < source.algebra->dim(); ++aj) {
            SparseVec lhs = f.apply(source.act_basis(mi, aj));
            SparseVec rhs = target.act(f.apply(sv_unit(k, mi)), sv_unit(k, aj));
            if (!sv_equal(lhs, rhs)) return "does not intertwine the action";
        }
    }
    return std::nullopt;
}

AlgModule regular_module(const AlgebraPtr& a) {
    AlgModule m;
    m.algebra = a;
    m.space = a->space;
    m.action = a->mult;
    return m;
}

AlgModule shifted_module(AlgModule m, int n) {
    m.space = m.space.shifted(n);
    return m;
}

AlgModule direct_sum(const AlgModule& a, const AlgModule& b) {
    if (a.algebra != b.algebra && !(a.algebra->space == b.algebra->space && a.algebra->mult == b.algebra->mult))
        throw BaseMismatchError("direct sum over different algebras");
    AlgModule out;
    out.algebra = a.algebra;
    out.space.degrees = a.space.degrees;
    for (const auto& l : a.space.labels) out.space.labels.push_back("l:" + l);
    for (int i = 0; i < b.dim(); ++i) {
        out.space.degrees.push_back(b.space.degrees[static_cast<std::size_t>(i)]);
        out.space.labels.push_back("r:" + b.space.labels[static_cast<std::size_t>(i)]);
    }
    out.action = a.action;
    int off = a.dim();
    for (const auto& [key, v] : b.action) {
        SparseVec w;
        for (const auto& [t, c] : v) w.emplace_back(t + off, c);
        out.action[{key.first + off, key.second}] = std::move(w);
    }
    return out;
}

AlgModule restrict_scalars(const AlgModule& m, const AlgebraMap& psi) {
    AlgModule out;
    out.algebra = psi.source;
    out.space = m.space;
    for (int mi = 0; mi < m.dim(); ++mi)
        for (int aj = 0; aj < psi.source->dim(); ++aj) {
            SparseVec v = m.act(sv_unit(m.algebra->field, mi), psi.images[static_cast<std::size_t>(aj)]);
            if (!v.empty()) out.action[{mi, aj}] = std::move(v);
        }
    return out;
}

namespace {

TensorQuotient quotient_from_relations(const Field& k, const GradedVectorSpace& flat_space,
                                       const std::vector<SparseVec>& relations) {
    RowReducer red(k, flat_space.dim());
    for (const auto& r : relations) red.insert(r);
    TensorQuotient out;
    std::vector<int> free_cols = red.free_cols();
    std::map<int, int> pos_of;
    for (std::size_t q = 0; q < free_cols.size(); ++q) {
        pos_of[free_cols[q]] = static_cast<int>(q);
        out.space.degrees.push_back(flat_space.degrees[static_cast<std::size_t>(free_cols[q])]);
        out.space.labels.push_back(flat_space.labels[static_cast<std::size_t>(free_cols[q])]);
    }
    out.proj = SparseMatrix(k, static_cast<int>(free_cols.size()), flat_space.dim());
    for (int f = 0; f < flat_space.dim(); ++f) {
        SparseVec res = red.residue(sv_unit(k, f));
        for (const auto& [c, v] : res) out.proj.set(pos_of.at(c), f, v);
    }
    out.section = SparseMatrix(k, flat_space.dim(), static_cast<int>(free_cols.size()));
    for (std::size_t q = 0; q < free_cols.size(); ++q) out.section.set(free_cols[q], static_cast<int>(q), k.one());
    return out;
}

}  // namespace

TensorQuotient tensor_over_base(const Field& k, const GradedVectorSpace& x_space, const MultTable& right_on_x,
                                const GradedVectorSpace& y_space, const MultTable& left_on_y,
                                const GradedAlgebra& base) {
    int dx = x_space.dim(), dy = y_space.dim();
    GradedVectorSpace flat = x_space.tensor(y_space);
    std::vector<SparseVec> rels;
    for (int xi = 0; xi < dx; ++xi)
        for (int a = 0; a < base.dim(); ++a) {
            auto xr = right_on_x.find({xi, a});
            for (int yj = 0; yj < dy; ++yj) {
                auto ly = left_on_y.find({a, yj});
                SparseVec rel;
                if (xr != right_on_x.end())
                    for (const auto& [t, c] : xr->second) rel.emplace_back(tensor_index(t, yj, dy), c);
                if (ly != left_on_y.end())
                    for (const auto& [t, c] : ly->second) rel.emplace_back(tensor_index(xi, t, dy), k.neg(c));
                rel = sv_normalize(k, std::move(rel));
                if (!rel.empty()) rels.push_back(std::move(rel));
            }
        }
    TensorQuotient out = quotient_from_relations(k, flat, rels);
    for (int q = 0; q < out.space.dim(); ++q) {
        SparseVec s = out.section.col(q);
        out.basis_pairs.push_back(tensor_split(s.front().first, dy));
    }
    return out;
}

TensorQuotient tensor3_over_base(const Field& k, const GradedVectorSpace& x_space, const MultTable& right_on_x,
                                 const GradedVectorSpace& y_space, const MultTable& left_on_y,
                                 const MultTable& right_on_y, const GradedVectorSpace& z_space,
                                 const MultTable& left_on_z, const GradedAlgebra& base) {
    int dx = x_space.dim(), dy = y_space.dim(), dz = z_space.dim();
    GradedVectorSpace flat = x_space.tensor(y_space).tensor(z_space);
    auto flat3 = [&](int i, int j, int l) { return (i * dy + j) * dz + l; };
    std::vector<SparseVec> rels;
    for (int a = 0; a < base.dim(); ++a) {
        for (int xi = 0; xi < dx; ++xi)
            for (int yj = 0; yj < dy; ++yj) {
                auto xr = right_on_x.find({xi, a});
                auto ly = left_on_y.find({a, yj});
                for (int zl = 0; zl < dz; ++zl) {
                    SparseVec rel;
                    if (xr != right_on_x.end())
                        for (const auto& [t, c] : xr->second) rel.emplace_back(flat3(t, yj, zl), c);
                    if (ly != left_on_y.end())
                        for (const auto& [t, c] : ly->second) rel.emplace_back(flat3(xi, t, zl), k.neg(c));
                    rel = sv_normalize(k, std::move(rel));
                    if (!rel.empty()) rels.push_back(std::move(rel));
                }
            }
        for (int yj = 0; yj < dy; ++yj)
            for (int zl = 0; zl < dz; ++zl) {
                auto yr = right_on_y.find({yj, a});
                auto lz = left_on_z.find({a, zl});
                for (int xi = 0; xi < dx; ++xi) {
                    SparseVec rel;
                    if (yr != right_on_y.end())
                        for (const auto& [t, c] : yr->second) rel.emplace_back(flat3(xi, t, zl), c);
                    if (lz != left_on_z.end())
                        for (const auto& [t, c] : lz->second) rel.emplace_back(flat3(xi, yj, t), k.neg(c));
                    rel = sv_normalize(k, std::move(rel));
                    if (!rel.empty()) rels.push_back(std::move(rel));
                }
            }
    }
    TensorQuotient out = quotient_from_relations(k, flat, rels);
    for (int q = 0; q < out.space.dim(); ++q) {
        SparseVec s = out.section.col(q);
        out.basis_pairs.push_back(tensor_split(s.front().first, dz));  // (flat xy, z)
    }
    return out;
}

BaseChangeResult base_change(const AlgModule& m, const AlgebraMap& psi) {
    const Field& k = psi.target->field;
    const GradedAlgebra& B = *psi.target;
    MultTable left_on_b;
    for (int a = 0; a < psi.source->dim(); ++a)
        for (int b = 0; b < B.dim(); ++b) {
            SparseVec v = B.mul(psi.images[static_cast<std::size_t>(a)], sv_unit(k, b));
            if (!v.empty()) left_on_b[{a, b}] = std::move(v);
        }
    TensorQuotient q = tensor_over_base(k, m.space, m.action, B.space, left_on_b, *psi.source);
    AlgModule out;
    out.algebra = psi.target;
    out.space = q.space;
    int dim_b = B.dim();
    for (int qi = 0; qi < q.space.dim(); ++qi) {
        auto [mi, bi] = q.basis_pairs[static_cast<std::size_t>(qi)];
        for (int bj = 0; bj < dim_b; ++bj) {
            SparseVec flatv;
            for (const auto& [t, c] : B.mul_basis(bi, bj)) flatv.emplace_back(tensor_index(mi, t, dim_b), c);
            SparseVec v = q.proj.apply(flatv);
            if (!v.empty()) out.action[{qi, bj}] = std::move(v);
        }
    }
    return {std::move(out), std::move(q)};
}

AlgModule random_module(const AlgebraPtr& a, Rng& rng, int max_dim) {
    const Field& k = a->field;
    AlgModule f = shifted_module(regular_module(a), static_cast<int>(rng.below(3)) - 1);
    if (rng.below(2)) f = direct_sum(f, shifted_module(regular_module(a), static_cast<int>(rng.below(3)) - 1));
    RowReducer red(k, f.dim(), false);
    int gens = 1 + static_cast<int>(rng.below(2));
    for (int g = 0; g < gens; ++g) {
        int pivot = static_cast<int>(rng.below(static_cast<std::uint64_t>(f.dim())));
        int deg = f.space.degrees[static_cast<std::size_t>(pivot)];
        SparseVec elem;
        for (int i = 0; i < f.dim(); ++i)
            if (f.space.degrees[static_cast<std::size_t>(i)] == deg && rng.below(2))
                elem.emplace_back(i, k.random_nonzero(rng));
        for (int aj = 0; aj < a->dim(); ++aj) {
            SparseVec v = f.act(elem, sv_unit(k, aj));
            if (!v.empty()) red.insert(v);
        }
        red.insert(elem);
    }
    auto free_cols = red.free_cols();
    while (static_cast<int>(free_cols.size()) > max_dim) {
        int extra = free_cols[static_cast<std::size_t>(rng.below(free_cols.size()))];
        for (int aj = 0; aj < a->dim(); ++aj) {
            SparseVec v = f.act(sv_unit(k, extra), sv_unit(k, aj));
            if (!v.empty()) red.insert(v);
        }
        red.insert(sv_unit(k, extra));
        free_cols = red.free_cols();
    }
    std::map<int, int> pos;
    AlgModule out;
    out.algebra = a;
    for (std::size_t q = 0; q < free_cols.size(); ++q) {
        pos[free_cols[q]] = static_cast<int>(q);
        out.space.degrees.push_back(f.space.degrees[static_cast<std::size_t>(free_cols[q])]);
        out.space.labels.push_back("m" + std::to_string(q));
    }
    auto project = [&](const SparseVec& v) {
        SparseVec res = red.residue(v);
        SparseVec outv;
        for (const auto& [c, s] : res) outv.emplace_back(pos.at(c), s);
        return outv;
    };
    for (std::size_t q = 0; q < free_cols.size(); ++q)
        for (int aj = 0; aj < a->dim(); ++aj) {
            SparseVec v = project(f.act(sv_unit(k, free_cols[q]), sv_unit(k, aj)));
            if (!v.empty()) out.action[{static_cast<int>(q), aj}] = std::move(v);
        }
    return out;
}

}  // namespace coringlab
