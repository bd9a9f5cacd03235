#include "coringlab/bar.hpp"

#include <algorithm>
#include <functional>

namespace coringlab {

namespace {

void require_connected_augmented(const GradedAlgebra& a) {
    if (!a.is_augmented()) throw NotAugmentedError("algebra has no augmentation");
    if (!a.is_connected()) throw NotConnectedError("algebra is not connected (degree-0 part must be the unit line)");
}

}  // namespace

BarComplex::BarComplex(AlgebraPtr a, int s_max, int d_max) : algebra_(std::move(a)), s_max_(s_max), d_max_(d_max) {
    require_connected_augmented(*algebra_);
    if (algebra_->truncated && algebra_->degree_bound < d_max)
        throw Error("algebra truncated below the requested bar degree; realize with a larger bound");
    for (int i = 0; i < algebra_->dim(); ++i)
        if (algebra_->degree_of(i) > 0) {
            letter_of_basis_[i] = static_cast<int>(letters_.size());
            letters_.push_back(i);
        }
    // enumerate words per slice, lexicographic in letter indices
    for (int s = 0; s <= s_max_; ++s) {
        // build all words of length s with degree sum <= d_max
        std::vector<std::vector<int>> acc;
        std::vector<int> cur;
        std::function<void(int)> gen = [&](int deg) {
            if (static_cast<int>(cur.size()) == s) {
                acc.push_back(cur);
                return;
            }
            for (std::size_t l = 0; l < letters_.size(); ++l) {
                int nd = deg + letter_degree(static_cast<int>(l));
                if (nd > d_max_) continue;
                cur.push_back(static_cast<int>(l));
                gen(nd);
                cur.pop_back();
            }
        };
        gen(0);
        for (auto& w : acc) {
            int d = 0;
            for (int l : w) d += letter_degree(l);
            auto key = std::make_pair(s, d);
            index_[key][w] = static_cast<int>(words_[key].size());
            words_[key].push_back(w);
        }
    }
    // differentials
    for (int s = 1; s <= s_max_; ++s)
        for (int d = s; d <= d_max_; ++d) {
            auto key = std::make_pair(s, d);
            auto it = words_.find(key);
            int cols = it == words_.end() ? 0 : static_cast<int>(it->second.size());
            int rows = slice_dim(s - 1, d);
            SparseMatrix m(algebra_->field, rows, cols);
            const Field& k = algebra_->field;
            if (it != words_.end()) {
                for (int wi = 0; wi < cols; ++wi) {
                    const auto& w = it->second[static_cast<std::size_t>(wi)];
                    for (int face = 1; face < s; ++face) {
                        // merge letters at positions face-1 and face, sign (-1)^face
                        SparseVec prod = algebra_->mul_basis(letters_[static_cast<std::size_t>(w[face - 1])],
                                                             letters_[static_cast<std::size_t>(w[face])]);
                        for (const auto& [t, c] : prod) {
                            auto lt = letter_of_basis_.find(t);
                            if (lt == letter_of_basis_.end()) continue;  // cannot happen for connected algebras
                            std::vector<int> merged;
                            merged.reserve(w.size() - 1);
                            merged.insert(merged.end(), w.begin(), w.begin() + face - 1);
                            merged.push_back(lt->second);
                            merged.insert(merged.end(), w.begin() + face + 1, w.end());
                            int row = index_.at({s - 1, d}).at(merged);
                            Scalar v = face % 2 == 0 ? c : k.neg(c);
                            Scalar cur_v = m.get(row, wi);
                            m.set(row, wi, k.add(cur_v, v));
                        }
                    }
                }
            }
            diff_.emplace(key, std::move(m));
        }
}

const std::vector<std::vector<int>>& BarComplex::words(int s, int d) const {
    static const std::vector<std::vector<int>> empty;
    auto it = words_.find({s, d});
    return it == words_.end() ? empty : it->second;
}

int BarComplex::slice_dim(int s, int d) const { return static_cast<int>(words(s, d).size()); }

int BarComplex::word_index(int s, int d, const std::vector<int>& w) const { return index_.at({s, d}).at(w); }

const SparseMatrix& BarComplex::differential(int s, int d) const {
    static const SparseMatrix* dummy = nullptr;
    (void)dummy;
    auto it = diff_.find({s, d});
    if (it == diff_.end()) throw Error("differential outside the computed window");
    return it->second;
}

BarComplex bar_complex(const AlgebraPtr& a, int s_max, int d_max) { return BarComplex(a, s_max, d_max); }

// -- shuffles ---------------------------------------------------------------

namespace {

// All (p, q)-shuffles of u and v with the sign of the interleaving
// permutation (each letter has homological weight 1; internal degrees do not
// enter the sign, which is what makes the shuffle a chain map for strictly
// commutative algebras).
void shuffle_words(const std::vector<int>& u, const std::vector<int>& v,
                   const std::function<void(const std::vector<int>&, int)>& emit) {
    int p = static_cast<int>(u.size()), q = static_cast<int>(v.size());
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(p + q));
    std::function<void(int, int, int)> rec = [&](int i, int j, int inversions) {
        if (i == p && j == q) {
            emit(w, inversions % 2 == 0 ? 1 : -1);
            return;
        }
        if (i < p) {
            w.push_back(u[static_cast<std::size_t>(i)]);
            rec(i + 1, j, inversions);
            w.pop_back();
        }
        if (j < q) {
            // placing v_j now: every unplaced u-letter will pass it
            w.push_back(v[static_cast<std::size_t>(j)]);
            rec(i, j + 1, inversions + (p - i));
            w.pop_back();
        }
    };
    rec(0, 0, 0);
    return;
}

struct ClassInfo {
    int s, d;
    int local;  // index within the homology slice
};

}  // namespace

class TorBuilder {
  public:
    TorBuilder(AlgebraPtr a, int max_degree) : bar_(a, max_degree, max_degree), k_(a->field), dmax_(max_degree) {
        for (int s = 0; s <= dmax_; ++s)
            for (int d = s; d <= dmax_; ++d) {
                if (bar_.slice_dim(s, d) == 0) continue;
                SparseMatrix d_out = s >= 1 ? bar_.differential(s, d)
                                            : SparseMatrix(k_, 0, bar_.slice_dim(0, d));
                SparseMatrix d_in = (s + 1 <= dmax_ && bar_.slice_dim(s + 1, d) > 0)
                                        ? bar_.differential(s + 1, d)
                                        : SparseMatrix(k_, bar_.slice_dim(s, d), 0);
                homology_.emplace(std::make_pair(s, d), HomologySlice(d_in, d_out));
            }
        for (const auto& [key, h] : homology_)
            for (int i = 0; i < h.dim(); ++i) {
                global_of_[{key.first, key.second, i}] = static_cast<int>(classes_.size());
                classes_.push_back({key.first, key.second, i});
            }
    }

    TorHopf build() {
        TorHopf out;
        Bialgebra& b = out.hopf.bi;
        auto base = std::make_shared<GradedAlgebra>(trivial_algebra(k_));
        b.coring.base = base;
        int n = static_cast<int>(classes_.size());
        for (int g = 0; g < n; ++g) {
            const auto& ci = classes_[static_cast<std::size_t>(g)];
            b.coring.carrier.degrees.push_back(ci.s);
            b.coring.idegs.push_back(ci.d);
            b.coring.carrier.labels.push_back("b" + std::to_string(ci.s) + "." + std::to_string(ci.d) + "." +
                                              std::to_string(ci.local));
            out.bidegrees.emplace_back(ci.s, ci.d);
        }
        for (const auto& [key, h] : homology_)
            if (h.dim() > 0) out.dims[key] = h.dim();
        b.coring.truncation = std::make_pair(dmax_, dmax_);
        for (int i = 0; i < n; ++i) {
            b.coring.left_action[{0, i}] = sv_unit(k_, i);
            b.coring.right_action[{i, 0}] = sv_unit(k_, i);
        }
        // unit: the class of the empty word at (0, 0)
        int unit_idx = global_of_.at({0, 0, 0});
        b.unit = sv_unit(k_, unit_idx);
        // counit: projection onto the (0,0) coefficient
        b.coring.counit = SparseMatrix(k_, 1, n);
        b.coring.counit.set(0, unit_idx, k_.one());
        // products via shuffles
        for (int g1 = 0; g1 < n; ++g1)
            for (int g2 = 0; g2 < n; ++g2) {
                const auto& c1 = classes_[static_cast<std::size_t>(g1)];
                const auto& c2 = classes_[static_cast<std::size_t>(g2)];
                int s = c1.s + c2.s, d = c1.d + c2.d;
                if (s > dmax_ || d > dmax_) continue;  // outside the window
                SparseVec prod = shuffle_product(c1, c2);
                SparseVec expr = express_classes(s, d, prod);
                if (!expr.empty()) b.mult[{g1, g2}] = std::move(expr);
            }
        // coproducts via deconcatenation and a Kuenneth expression
        b.coring.comult.resize(static_cast<std::size_t>(n));
        for (int g = 0; g < n; ++g)
            b.coring.comult[static_cast<std::size_t>(g)] = deconcat_class(classes_[static_cast<std::size_t>(g)], n);
        out.hopf.antipode = antipode_connected(b);
        return out;
    }

  private:
    const HomologySlice& hom(int s, int d) const { return homology_.at({s, d}); }

    SparseVec rep_of(const ClassInfo& c) const { return hom(c.s, c.d).reps()[static_cast<std::size_t>(c.local)]; }

    SparseVec shuffle_product(const ClassInfo& c1, const ClassInfo& c2) const {
        int s = c1.s + c2.s, d = c1.d + c2.d;
        const auto& w1 = bar_.words(c1.s, c1.d);
        const auto& w2 = bar_.words(c2.s, c2.d);
        SparseVec out;
        for (const auto& [i1, a1] : rep_of(c1))
            for (const auto& [i2, a2] : rep_of(c2)) {
                Scalar coeff = k_.mul(a1, a2);
                if (coeff.is_zero()) continue;
                shuffle_words(w1[static_cast<std::size_t>(i1)], w2[static_cast<std::size_t>(i2)],
                              [&](const std::vector<int>& w, int sign) {
                                  Scalar v = sign > 0 ? coeff : k_.neg(coeff);
                                  out.emplace_back(bar_.word_index(s, d, w), v);
                              });
            }
        return sv_normalize(k_, std::move(out));
    }

    // express a cycle in slice (s, d) in the global class basis
    SparseVec express_classes(int s, int d, const SparseVec& cycle) const {
        if (cycle.empty()) return {};
        auto e = hom(s, d).express(cycle);
        SparseVec out;
        for (const auto& [local, c] : e.class_coeffs) out.emplace_back(global_of_.at({s, d, local}), c);
        return sv_normalize(k_, std::move(out));
    }

    // Deconcatenation of the class representative, expressed in the tensor
    // basis of homology classes (single linear solve per bidegree against the
    // boundaries of the tensor complex: Kuenneth over a field).
    SparseVec deconcat_class(const ClassInfo& c, int n_classes) {
        int s = c.s, d = c.d;
        auto key = std::make_pair(s, d);
        auto it = kunneth_.find(key);
        if (it == kunneth_.end()) it = kunneth_.emplace(key, build_kunneth(s, d)).first;
        const Kunneth& K = it->second;
        // flatten the deconcatenation of the representative
        SparseVec flat;
        for (const auto& [wi, a] : rep_of(c)) {
            const auto& w = bar_.words(s, d)[static_cast<std::size_t>(wi)];
            for (int cut = 0; cut <= s; ++cut) {
                std::vector<int> w1(w.begin(), w.begin() + cut);
                std::vector<int> w2(w.begin() + cut, w.end());
                int d1 = 0;
                for (int l : w1) d1 += bar_.letter_degree(l);
                auto off = K.offset.find({cut, d1});
                if (off == K.offset.end()) throw Error("deconcatenation split missing (internal)");
                int i1 = bar_.word_index(cut, d1, w1);
                int i2 = bar_.word_index(s - cut, d - d1, w2);
                flat.emplace_back(off->second + i1 * bar_.slice_dim(s - cut, d - d1) + i2, a);
            }
        }
        flat = sv_normalize(k_, std::move(flat));
        auto expr = K.span->express(flat);
        if (!expr) throw Error("deconcatenation is not a cycle modulo boundaries (internal)");
        SparseVec out;
        for (const auto& [idx, a] : *expr) {
            auto pr = K.pair_of_input.find(idx);
            if (pr == K.pair_of_input.end()) continue;  // boundary part
            out.emplace_back(tensor_index(pr->second.first, pr->second.second, n_classes), a);
        }
        return sv_normalize(k_, std::move(out));
    }

    struct Kunneth {
        std::map<std::pair<int, int>, int> offset;       // (s1, d1) -> flat offset of slice pair
        std::unique_ptr<RowReducer> span;                // boundaries then class pairs
        std::map<int, std::pair<int, int>> pair_of_input;  // insertion idx -> (global1, global2)
    };

    Kunneth build_kunneth(int s, int d) {
        Kunneth K;
        // flat space: sum over splits (s1, d1) + (s2, d2) = (s, d)
        int total = 0;
        for (int s1 = 0; s1 <= s; ++s1)
            for (int d1 = 0; d1 <= d; ++d1) {
                int n1 = bar_.slice_dim(s1, d1);
                int n2 = bar_.slice_dim(s - s1, d - d1);
                if (n1 == 0 || n2 == 0) continue;
                K.offset[{s1, d1}] = total;
                total += n1 * n2;
            }
        K.span = std::make_unique<RowReducer>(k_, total, true);
        // boundaries: tensor differential from homological degree s+1
        for (int s1 = 0; s1 <= s + 1; ++s1)
            for (int d1 = 0; d1 <= d; ++d1) {
                int s2 = s + 1 - s1, d2 = d - d1;
                int n1 = bar_.slice_dim(s1, d1), n2 = bar_.slice_dim(s2, d2);
                if (n1 == 0 || n2 == 0) continue;
                for (int i1 = 0; i1 < n1; ++i1)
                    for (int i2 = 0; i2 < n2; ++i2) {
                        SparseVec col;
                        // d(w1) (x) w2
                        if (s1 >= 1) {
                            auto off = K.offset.find({s1 - 1, d1});
                            if (off != K.offset.end()) {
                                int width2 = bar_.slice_dim(s2, d2);
                                for (const auto& [r, v] : bar_.differential(s1, d1).col(i1))
                                    col.emplace_back(off->second + r * width2 + i2, v);
                            }
                        }
                        // (-1)^{s1} w1 (x) d(w2)
                        if (s2 >= 1) {
                            auto off = K.offset.find({s1, d1});
                            if (off != K.offset.end()) {
                                int width2 = bar_.slice_dim(s2 - 1, d2);
                                for (const auto& [r, v] : bar_.differential(s2, d2).col(i2))
                                    col.emplace_back(off->second + i1 * width2 + r,
                                                     s1 % 2 == 0 ? v : k_.neg(v));
                            }
                        }
                        K.span->insert(sv_normalize(k_, std::move(col)));
                    }
            }
        // class representative pairs
        for (const auto& [off_key, off] : K.offset) {
            auto [s1, d1] = off_key;
            int s2 = s - s1, d2 = d - d1;
            auto h1 = homology_.find({s1, d1});
            auto h2 = homology_.find({s2, d2});
            if (h1 == homology_.end() || h2 == homology_.end()) continue;
            int width2 = bar_.slice_dim(s2, d2);
            for (int l1 = 0; l1 < h1->second.dim(); ++l1)
                for (int l2 = 0; l2 < h2->second.dim(); ++l2) {
                    SparseVec flat;
                    for (const auto& [w1, a1] : h1->second.reps()[static_cast<std::size_t>(l1)])
                        for (const auto& [w2, a2] : h2->second.reps()[static_cast<std::size_t>(l2)])
                            flat.emplace_back(off + w1 * width2 + w2, k_.mul(a1, a2));
                    int input_idx = K.span->inserted();
                    auto res = K.span->insert(sv_normalize(k_, std::move(flat)));
                    if (!res.novel) throw Error("Kuenneth representatives are not independent (internal)");
                    K.pair_of_input[input_idx] = {global_of_.at({s1, d1, l1}), global_of_.at({s2, d2, l2})};
                }
        }
        return K;
    }

    BarComplex bar_;
    Field k_;
    int dmax_;
    std::map<std::pair<int, int>, HomologySlice> homology_;
    std::vector<ClassInfo> classes_;
    std::map<std::tuple<int, int, int>, int> global_of_;
    std::map<std::pair<int, int>, Kunneth> kunneth_;
};

TorHopf tor_bialgebra(const AlgebraPtr& a, int max_degree) {
    TorBuilder b(a, max_degree);
    return b.build();
}

std::map<int, int> TorHopf::dims_by_hdeg() const {
    std::map<int, int> out;
    for (const auto& [key, v] : dims) out[key.first] += v;
    return out;
}

// -- minimal resolution oracle ------------------------------------------

namespace {

// Free right module presented by generator degrees; flat basis (gen, algebra
// basis element) filtered by degree <= dmax.
struct FreeFlat {
    std::vector<int> gen_degrees;
    std::vector<std::pair<int, int>> basis;        // (gen, algebra idx)
    std::map<std::pair<int, int>, int> index;
    std::vector<std::vector<int>> by_degree;       // degree -> flat indices

    FreeFlat(const std::vector<int>& gens, const GradedAlgebra& a, int dmax) : gen_degrees(gens) {
        by_degree.assign(static_cast<std::size_t>(dmax) + 1, {});
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (int b = 0; b < a.dim(); ++b) {
                int d = gens[g] + a.degree_of(b);
                if (d > dmax) continue;
                index[{static_cast<int>(g), b}] = static_cast<int>(basis.size());
                by_degree[static_cast<std::size_t>(d)].push_back(static_cast<int>(basis.size()));
                basis.emplace_back(static_cast<int>(g), b);
            }
    }

    // right multiplication of a flat vector by algebra basis element
    SparseVec times(const SparseVec& v, int aj, const GradedAlgebra& a) const {
        SparseVec out;
        for (const auto& [f, c] : v) {
            auto [g, b] = basis[static_cast<std::size_t>(f)];
            for (const auto& [t, s] : a.mul_basis(b, aj)) {
                auto it = index.find({g, t});
                if (it == index.end()) continue;  // beyond dmax
                out.emplace_back(it->second, a.field.mul(c, s));
            }
        }
        return sv_normalize(a.field, std::move(out));
    }
};

}  // namespace

DimTable tor_dims_via_resolution(const AlgebraPtr& aptr, int n_max, int d_max) {
    const GradedAlgebra& a = *aptr;
    require_connected_augmented(a);
    if (a.truncated && a.degree_bound < d_max)
        throw Error("algebra truncated below the requested resolution degree");
    const Field& k = a.field;
    DimTable dims;
    dims[{0, 0}] = 1;

    // F_0 = A with one generator in degree 0; the first syzygy module is the
    // augmentation ideal (positive-degree part).
    std::vector<int> gens = {0};
    FreeFlat cur(gens, a, d_max);
    // kernel elements of the current differential, by degree
    std::vector<std::vector<SparseVec>> kernel_by_degree(static_cast<std::size_t>(d_max) + 1);
    for (int b = 0; b < a.dim(); ++b)
        if (a.degree_of(b) > 0)
            kernel_by_degree[static_cast<std::size_t>(a.degree_of(b))].push_back(
                sv_unit(k, cur.index.at({0, b})));

    for (int n = 1; n <= n_max; ++n) {
        // minimal generators of the kernel, degree by degree
        std::vector<int> new_gen_degrees;
        std::vector<SparseVec> new_gen_images;  // elements of cur
        RowReducer generated(k, static_cast<int>(cur.basis.size()));
        for (int d = 0; d <= d_max; ++d) {
            // grow the generated submodule: existing gens times algebra
            // elements landing in degree d
            for (std::size_t g = 0; g < new_gen_images.size(); ++g) {
                int need = d - new_gen_degrees[g];
                if (need <= 0) continue;
                for (int aj = 0; aj < a.dim(); ++aj)
                    if (a.degree_of(aj) == need) {
                        SparseVec v = cur.times(new_gen_images[g], aj, a);
                        if (!v.empty()) generated.insert(v);
                    }
            }
            for (const auto& z : kernel_by_degree[static_cast<std::size_t>(d)]) {
                if (generated.insert(z).novel) {
                    new_gen_degrees.push_back(d);
                    new_gen_images.push_back(z);
                    dims[{n, d}] += 1;
                }
            }
        }
        if (n == n_max) break;
        // next free module and its kernel
        FreeFlat nxt(new_gen_degrees, a, d_max);
        // differential matrix per degree; kernel per degree
        for (auto& kd : kernel_by_degree) kd.clear();
        for (int d = 0; d <= d_max; ++d) {
            const auto& cols = nxt.by_degree[static_cast<std::size_t>(d)];
            const auto& rows = cur.by_degree[static_cast<std::size_t>(d)];
            if (cols.empty()) continue;
            std::map<int, int> row_local;
            for (std::size_t r = 0; r < rows.size(); ++r) row_local[rows[r]] = static_cast<int>(r);
            SparseMatrix m(k, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
                auto [g, b] = nxt.basis[static_cast<std::size_t>(cols[cidx])];
                SparseVec img = cur.times(new_gen_images[static_cast<std::size_t>(g)], b, a);
                for (const auto& [f, c] : img) m.set(row_local.at(f), static_cast<int>(cidx), c);
            }
            for (const auto& z : kernel_basis(m)) {
                SparseVec zz;
                for (const auto& [local, c] : z) zz.emplace_back(cols[static_cast<std::size_t>(local)], c);
                kernel_by_degree[static_cast<std::size_t>(d)].push_back(sv_normalize(k, std::move(zz)));
            }
        }
        cur = std::move(nxt);
        // translate kernels: nothing to do, they are already in cur coordinates
    }
    return dims;
}

}  // namespace coringlab
