#pragma once

#include <map>
#include <optional>

#include "coringlab/sparse.hpp"

namespace coringlab {

/// Incremental exact row reduction maintaining a reduced echelon basis of the
/// span of the inserted vectors. Insertion order is part of the contract:
/// identical input sequences give identical pivots, rows, and combinations,
/// which is what makes every basis in the library reproducible.
class RowReducer {
  public:
    RowReducer(Field field, int width, bool track = false);

    struct Insert {
        bool novel;       // true if the vector enlarged the span
        int pivot;        // pivot column if novel, -1 otherwise
        SparseVec combo;  // if !novel and tracking: expression over inserted inputs
    };

    /// Insert a vector; returns whether it was independent of the span so far.
    Insert insert(const SparseVec& v);

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    int inserted() const { return inserted_; }
    const Field& field() const { return field_; }

    /// Canonical residue of v modulo the current span (fully reduced).
    SparseVec residue(const SparseVec& v) const;
    /// If v lies in the span: its expression over the inserted inputs
    /// (index = insertion position). Requires track = true.
    std::optional<SparseVec> express(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return residue(v).empty(); }

    std::vector<int> pivot_cols() const;
    std::vector<int> free_cols() const;
    /// Reduced rows keyed by pivot column.
    const std::map<int, SparseVec>& rows() const { return rows_; }

  private:
    Field field_;
    int width_;
    bool track_;
    int inserted_ = 0;
    std::map<int, SparseVec> rows_;    // pivot col -> reduced row (lead = 1)
    std::map<int, SparseVec> combos_;  // pivot col -> expression over inserted inputs
    // reduce v in place; returns the combination over current rows (by pivot col)
    SparseVec reduce_(SparseVec& v) const;
};

/// Rank by Gaussian elimination with the fixed pivot rule: lowest column
/// index first, ties broken by lowest row index.
int rank(const SparseMatrix& m);

/// Deterministic kernel basis (echelon with respect to column insertion order).
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/// One solution of A x = b, if any.
std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b);

/// Homology of  C_in --d_in--> C_mid --d_out--> C_out  at the middle term.
/// Stores deterministic class representatives and can express any cycle in
/// that basis modulo boundaries.
class HomologySlice {
  public:
    HomologySlice(const SparseMatrix& d_in, const SparseMatrix& d_out);

    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<SparseVec>& reps() const { return reps_; }
    int boundary_rank() const { return boundary_rank_; }
    int cycle_dim() const { return cycle_dim_; }

    struct Expression {
        SparseVec class_coeffs;    // coefficients over reps()
        SparseVec boundary_combo;  // combination of d_in columns realizing the boundary part
    };
    /// Express a cycle in the representative basis modulo boundaries.
    /// Throws NotAComplexError if v is not a cycle.
    Expression express(const SparseVec& v) const;

  private:
    Field field_;
    SparseMatrix d_out_;
    RowReducer span_;                // tracked: d_in columns then reps
    int n_boundary_inputs_;          // number of d_in columns inserted
    std::map<int, int> rep_of_input_;  // insertion index -> rep position
    std::vector<SparseVec> reps_;
    int boundary_rank_ = 0;
    int cycle_dim_ = 0;
};

}  // namespace coringlab
