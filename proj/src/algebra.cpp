#include "coringlab/algebra.hpp"

#include "coringlab/errors.hpp"

namespace coringlab {

SparseVec GradedAlgebra::mul_basis(int i, int j) const {
    auto it = mult.find({i, j});
    if (it == mult.end()) return {};
    return it->second;
}

SparseVec GradedAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            Scalar c = field.mul(ca, cb);
            if (c.is_zero()) continue;
            out = sv_axpy(field, out, c, mul_basis(i, j));
        }
    return out;
}

Scalar GradedAlgebra::aug_of(const SparseVec& a) const {
    if (!augmentation) throw NotAugmentedError("algebra has no augmentation");
    Scalar acc = field.zero();
    for (const auto& [i, c] : a) acc = field.add(acc, field.mul(c, sv_get(field, *augmentation, i)));
    return acc;
}

bool GradedAlgebra::is_connected() const {
    int zero_dim = 0;
    int zero_idx = -1;
    for (int i = 0; i < dim(); ++i) {
        if (degree_of(i) < 0) return false;
        if (degree_of(i) == 0) {
            ++zero_dim;
            zero_idx = i;
        }
    }
    if (zero_dim != 1) return false;
    return unit.size() == 1 && unit.front().first == zero_idx;
}

std::optional<std::string> GradedAlgebra::check_unital() const {
    for (int i = 0; i < dim(); ++i) {
        SparseVec e = sv_unit(field, i);
        if (!sv_equal(mul(unit, e), e)) return "1*" + space.labels[static_cast<std::size_t>(i)];
        if (!sv_equal(mul(e, unit), e)) return space.labels[static_cast<std::size_t>(i)] + "*1";
    }
    return std::nullopt;
}

std::optional<std::string> GradedAlgebra::check_associative() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            SparseVec ij = mul_basis(i, j);
            for (int k = 0; k < dim(); ++k) {
                SparseVec lhs = mul(ij, sv_unit(field, k));
                SparseVec rhs = mul(sv_unit(field, i), mul_basis(j, k));
                if (!sv_equal(lhs, rhs))
                    return "(" + space.labels[static_cast<std::size_t>(i)] + "*" +
                           space.labels[static_cast<std::size_t>(j)] + ")*" +
                           space.labels[static_cast<std::size_t>(k)];
            }
        }
    return std::nullopt;
}

std::optional<std::string> GradedAlgebra::check_augmentation_map() const {
    if (!augmentation) return std::nullopt;
    if (!field.equal(aug_of(unit), field.one())) return "aug(1) != 1";
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            Scalar lhs = aug_of(mul_basis(i, j));
            Scalar rhs = field.mul(aug_of(sv_unit(field, i)), aug_of(sv_unit(field, j)));
            // Truncated products of positive total degree have augmentation 0
            // on both sides, so the comparison stays meaningful.
            if (!field.equal(lhs, rhs))
                return "aug(" + space.labels[static_cast<std::size_t>(i)] + "*" +
                       space.labels[static_cast<std::size_t>(j)] + ")";
        }
    return std::nullopt;
}

void GradedAlgebra::validate() const {
    space.validate();
    for (const auto& [ij, v] : mult) {
        int want = degree_of(ij.first) + degree_of(ij.second);
        for (const auto& [k, c] : v) {
            (void)c;
            if (degree_of(k) != want) throw Error("multiplication not degree-preserving");
        }
    }
    if (auto w = check_unital()) throw Error("algebra not unital at " + *w);
    if (auto w = check_associative()) throw Error("algebra not associative at " + *w);
    if (auto w = check_augmentation_map()) throw Error("augmentation is not an algebra map: " + *w);
}

GradedAlgebra trivial_algebra(const Field& k) {
    GradedAlgebra a;
    a.field = k;
    a.space.degrees = {0};
    a.space.labels = {"1"};
    a.mult[{0, 0}] = sv_unit(k, 0);
    a.unit = sv_unit(k, 0);
    a.augmentation = sv_unit(k, 0);
    a.degree_bound = 0;
    return a;
}

GradedAlgebra algebra_from_extension(const Field& ext) {
    if (!ext.is_extension()) return trivial_algebra(ext);
    Field base = ext.characteristic() > 0 ? Field::prime_field(ext.characteristic()) : Field::rationals();
    int n = ext.degree();
    GradedAlgebra a;
    a.field = base;
    a.space.degrees.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) a.space.labels.push_back(i == 0 ? "1" : (i == 1 ? "y" : "y^" + std::to_string(i)));
    // Structure constants from multiplication in the extension field itself.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar prod = ext.mul(ext.from_coeffs([&] {
                                      std::vector<Rat> c(static_cast<std::size_t>(n), Rat(0));
                                      c[static_cast<std::size_t>(i)] = 1;
                                      return c;
                                  }()),
                                  ext.from_coeffs([&] {
                                      std::vector<Rat> c(static_cast<std::size_t>(n), Rat(0));
                                      c[static_cast<std::size_t>(j)] = 1;
                                      return c;
                                  }()));
            SparseVec v;
            auto coeffs = ext.coeffs(prod);
            for (int k = 0; k < n; ++k) {
                Scalar ck = base.from_rat(coeffs[static_cast<std::size_t>(k)]);
                if (!ck.is_zero()) v.emplace_back(k, ck);
            }
            if (!v.empty()) a.mult[{i, j}] = std::move(v);
        }
    a.unit = sv_unit(base, 0);
    a.degree_bound = 0;
    // No augmentation: an extension field has no base-algebra map unless trivial.
    return a;
}

SparseVec AlgebraMap::apply(const SparseVec& a) const {
    SparseVec out;
    for (const auto& [i, c] : a) out = sv_axpy(target->field, out, c, images[static_cast<std::size_t>(i)]);
    return out;
}

std::optional<std::string> AlgebraMap::check() const {
    if (source->field != target->field) return "ground field mismatch";
    if (static_cast<int>(images.size()) != source->dim()) return "image list length mismatch";
    // degree preservation
    for (int i = 0; i < source->dim(); ++i)
        for (const auto& [k, c] : images[static_cast<std::size_t>(i)]) {
            (void)c;
            if (target->degree_of(k) != source->degree_of(i))
                return "image of " + source->space.labels[static_cast<std::size_t>(i)] + " not degree-preserving";
        }
    if (!sv_equal(apply(source->unit), target->unit)) return "unit not preserved";
    int bound = std::min(source->degree_bound, target->degree_bound);
    for (int i = 0; i < source->dim(); ++i)
        for (int j = 0; j < source->dim(); ++j) {
            if (source->degree_of(i) + source->degree_of(j) > bound) continue;
            SparseVec lhs = apply(source->mul_basis(i, j));
            SparseVec rhs = target->mul(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
            if (!sv_equal(lhs, rhs))
                return "phi(" + source->space.labels[static_cast<std::size_t>(i)] + "*" +
                       source->space.labels[static_cast<std::size_t>(j)] + ") != product of images";
        }
    return std::nullopt;
}

void AlgebraMap::validate() const {
    if (auto w = check()) throw Error("not an algebra map: " + *w);
}

AlgebraMap identity_map(const AlgebraPtr& a) {
    AlgebraMap m;
    m.source = a;
    m.target = a;
    for (int i = 0; i < a->dim(); ++i) m.images.push_back(sv_unit(a->field, i));
    return m;
}

}  // namespace coringlab
