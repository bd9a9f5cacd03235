#pragma once

#include "coringlab/algebra.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/rng.hpp"

namespace coringlab {

/// Finite-dimensional graded right module over a GradedAlgebra, as a graded
/// space with a sparse action table (module basis, algebra basis) -> vector.
struct AlgModule {
    AlgebraPtr algebra;
    GradedVectorSpace space;
    MultTable action;

    int dim() const { return space.dim(); }
    SparseVec act_basis(int mi, int aj) const;
    SparseVec act(const SparseVec& m, const SparseVec& a) const;
    std::optional<std::string> check() const;  // unitality + associativity
    void validate() const;
    bool operator==(const AlgModule& other) const {
        return space == other.space && action == other.action;
    }
};

/// Degree-homogeneous linear map between modules (not necessarily a module
/// map; check_module_map tests the intertwining condition).
struct ModuleMap {
    int degree = 0;
    SparseMatrix mat;  // target.dim x source.dim

    ModuleMap() : mat(Field::rationals(), 0, 0) {}
    ModuleMap(int deg, SparseMatrix m) : degree(deg), mat(std::move(m)) {}
    SparseVec apply(const SparseVec& v) const { return mat.apply(v); }
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap identity_module_map(const AlgModule& m);
std::optional<std::string> check_module_map(const AlgModule& source, const AlgModule& target, const ModuleMap& f);

/// The algebra as a right module over itself.
AlgModule regular_module(const AlgebraPtr& a);
/// Same action, all degrees shifted by n.
AlgModule shifted_module(AlgModule m, int n);
/// Direct sum, source-first index blocks.
AlgModule direct_sum(const AlgModule& a, const AlgModule& b);
/// Restriction of scalars along psi to a module over psi's source.
AlgModule restrict_scalars(const AlgModule& m, const AlgebraMap& psi);

/// Deterministic quotient X (x)_A Y of the span of pure tensors by the
/// middle relations (x.a)(x)y - x(x)(a.y). Flat index (i, j) -> i*dimY + j.
struct TensorQuotient {
    GradedVectorSpace space;                    // quotient basis
    std::vector<std::pair<int, int>> basis_pairs;  // representative pure tensors
    SparseMatrix proj = SparseMatrix(Field::rationals(), 0, 0);     // q x (dimX*dimY)
    SparseMatrix section = SparseMatrix(Field::rationals(), 0, 0);  // (dimX*dimY) x q, proj*section = id
};

/// right_on_x: (x, a) -> x-vector; left_on_y: (a, y) -> y-vector.
TensorQuotient tensor_over_base(const Field& k, const GradedVectorSpace& x_space, const MultTable& right_on_x,
                                const GradedVectorSpace& y_space, const MultTable& left_on_y,
                                const GradedAlgebra& base);

/// Triple quotient X (x)_A Y (x)_A Z; Y needs both actions.
TensorQuotient tensor3_over_base(const Field& k, const GradedVectorSpace& x_space, const MultTable& right_on_x,
                                 const GradedVectorSpace& y_space, const MultTable& left_on_y,
                                 const MultTable& right_on_y, const GradedVectorSpace& z_space,
                                 const MultTable& left_on_z, const GradedAlgebra& base);

/// Base change m (x)_A B along psi: A -> B, with the quotient data needed to
/// transport maps. The result is a module over psi's target.
struct BaseChangeResult {
    AlgModule module;
    TensorQuotient q;  // quotient of m (x)_k B
};
BaseChangeResult base_change(const AlgModule& m, const AlgebraMap& psi);

/// Seeded random module over `a`: a quotient of a small sum of shifted free
/// modules by a random submodule. Total dimension <= max_dim.
AlgModule random_module(const AlgebraPtr& a, Rng& rng, int max_dim);

}  // namespace coringlab
