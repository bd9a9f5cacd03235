#pragma once

#include <tuple>
#include <vector>

#include "coringlab/field.hpp"

namespace coringlab {

/// Sparse vector: (index, scalar) pairs, sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// a + c*b, entries over F. Either argument may alias the result.
SparseVec sv_axpy(const Field& F, const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sv_add(const Field& F, const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const Field& F, const Scalar& c, const SparseVec& a);
SparseVec sv_neg(const Field& F, const SparseVec& a);
Scalar sv_get(const Field& F, const SparseVec& a, int idx);
SparseVec sv_unit(const Field& F, int idx);
/// Sorts, merges duplicates, drops zeros.
SparseVec sv_normalize(const Field& F, SparseVec v);
bool sv_equal(const SparseVec& a, const SparseVec& b);

class SparseMatrix {
  public:
    SparseMatrix(Field field, int rows, int cols);

    static SparseMatrix identity(const Field& field, int n);
    static SparseMatrix from_triplets(const Field& field, int rows, int cols,
                                      const std::vector<std::tuple<int, int, Scalar>>& entries);
    /// Convenience for tests: integer entries, mapped through from_int.
    static SparseMatrix from_dense(const Field& field, const std::vector<std::vector<long long>>& dense);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, const Scalar& v);
    Scalar get(int i, int j) const;
    const SparseVec& row(int i) const { return rows_data_[static_cast<std::size_t>(i)]; }

    /// Matrix product this * other.
    SparseMatrix times(const SparseMatrix& other) const;
    /// this * column vector.
    SparseVec apply(const SparseVec& v) const;
    /// Column j as a sparse vector.
    SparseVec col(int j) const;
    SparseMatrix transpose() const;
    SparseMatrix plus(const SparseMatrix& other) const;
    SparseMatrix scaled(const Scalar& c) const;
    bool is_zero() const;
    bool equal(const SparseMatrix& other) const;
    std::size_t nnz() const;
    std::vector<std::tuple<int, int, Scalar>> triplets() const;

  private:
    Field field_;
    int rows_, cols_;
    std::vector<SparseVec> rows_data_;  // per-row, sorted by column
};

}  // namespace coringlab
