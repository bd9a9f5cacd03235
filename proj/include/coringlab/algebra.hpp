#pragma once

#include <limits>
#include <memory>
#include <optional>

#include "coringlab/graded.hpp"
#include "coringlab/sparse.hpp"

namespace coringlab {

/// Sparse multiplication table: (i, j) -> sparse product vector. Missing
/// pairs multiply to zero.
using MultTable = std::map<std::pair<int, int>, SparseVec>;

/// Graded unital associative algebra over an exact field, given by a graded
/// basis, sparse structure constants, a unit vector, and (when the algebra is
/// augmented) an augmentation functional. Products whose degree exceeds
/// degree_bound are truncated to zero; `truncated` records whether anything
/// actually lives beyond the bound.
struct GradedAlgebra {
    Field field = Field::rationals();
    GradedVectorSpace space;
    MultTable mult;
    SparseVec unit;
    std::optional<SparseVec> augmentation;
    int degree_bound = std::numeric_limits<int>::max();
    bool truncated = false;

    int dim() const { return space.dim(); }
    int degree_of(int i) const { return space.degrees[static_cast<std::size_t>(i)]; }

    SparseVec mul_basis(int i, int j) const;
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
    Scalar aug_of(const SparseVec& a) const;  // requires augmentation
    bool is_augmented() const { return augmentation.has_value(); }
    /// Connected: non-negative grading, 1-dimensional degree-0 part spanned
    /// by the unit.
    bool is_connected() const;

    /// Exhaustive checks on basis pairs/triples (degree sums within the
    /// bound). Returns a witness description on failure.
    std::optional<std::string> check_unital() const;
    std::optional<std::string> check_associative() const;
    std::optional<std::string> check_augmentation_map() const;
    void validate() const;  // throws Error on any failure
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// The ground field as a one-dimensional algebra (basis label "1").
GradedAlgebra trivial_algebra(const Field& k);

/// A simple field extension L/K realized as a K-algebra with basis
/// 1, y, ..., y^(d-1) in degree 0.
GradedAlgebra algebra_from_extension(const Field& ext);

/// Degree-preserving algebra map, stored on the full source basis.
struct AlgebraMap {
    AlgebraPtr source;
    AlgebraPtr target;
    std::vector<SparseVec> images;

    SparseVec apply(const SparseVec& a) const;
    /// Unit preservation, degree preservation, multiplicativity on basis
    /// pairs (within both degree bounds). Witness on failure.
    std::optional<std::string> check() const;
    void validate() const;
};

AlgebraMap identity_map(const AlgebraPtr& a);

/// Coalgebra-side structure carried by a group algebra kE (and friends):
/// comultiplication with values in the flattened tensor basis
/// (i, j) -> i * dim + j, an antipode matrix, and the counit functional.
struct HopfStructure {
    std::vector<SparseVec> comult;  // per basis element, over flat tensor indices
    SparseMatrix antipode = SparseMatrix(Field::rationals(), 0, 0);
    SparseVec counit;
};

}  // namespace coringlab
