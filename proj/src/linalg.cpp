#include "coringlab/linalg.hpp"

#include <algorithm>

namespace coringlab {

RowReducer::RowReducer(Field field, int width, bool track)
    : field_(std::move(field)), width_(width), track_(track) {}

SparseVec RowReducer::reduce_(SparseVec& v) const {
    // Rows are in RREF: a pivot column appears in no other row, so one
    // left-to-right sweep fully reduces v.
    SparseVec used;
    std::size_t i = 0;
    while (i < v.size()) {
        int c = v[i].first;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        Scalar coeff = v[i].second;
        v = sv_axpy(field_, v, field_.neg(coeff), it->second);
        used.emplace_back(c, coeff);
        // the entry at c vanished; v changed, restart scan at same position
        // (entries before position i are untouched: row lead is its leftmost)
    }
    return used;  // keyed by pivot col
}

RowReducer::Insert RowReducer::insert(const SparseVec& input) {
    SparseVec v = input;
    SparseVec used = reduce_(v);
    int my_index = inserted_++;
    if (v.empty()) {
        Insert r;
        r.novel = false;
        r.pivot = -1;
        if (track_) {
            SparseVec combo;
            for (const auto& [pc, coeff] : used) combo = sv_axpy(field_, combo, coeff, combos_.at(pc));
            r.combo = std::move(combo);
        }
        return r;
    }
    // Normalize so the leading entry is 1.
    Scalar lead = v.front().second;
    int pivot = v.front().first;
    Scalar lead_inv = field_.inv(lead);
    SparseVec row = sv_scale(field_, lead_inv, v);
    SparseVec combo;
    if (track_) {
        combo = sv_unit(field_, my_index);
        for (const auto& [pc, coeff] : used) combo = sv_axpy(field_, combo, field_.neg(coeff), combos_.at(pc));
        combo = sv_scale(field_, lead_inv, combo);
    }
    // Back-eliminate the new pivot column from existing rows.
    for (auto& [pc, r] : rows_) {
        Scalar c = sv_get(field_, r, pivot);
        if (c.is_zero()) continue;
        r = sv_axpy(field_, r, field_.neg(c), row);
        if (track_) combos_[pc] = sv_axpy(field_, combos_[pc], field_.neg(c), combo);
    }
    rows_.emplace(pivot, std::move(row));
    if (track_) combos_.emplace(pivot, std::move(combo));
    Insert r;
    r.novel = true;
    r.pivot = pivot;
    return r;
}

SparseVec RowReducer::residue(const SparseVec& v) const {
    SparseVec w = v;
    reduce_(w);
    return w;
}

std::optional<SparseVec> RowReducer::express(const SparseVec& v) const {
    if (!track_) throw Error("RowReducer::express requires tracking");
    SparseVec w = v;
    SparseVec used = reduce_(w);
    if (!w.empty()) return std::nullopt;
    SparseVec combo;
    for (const auto& [pc, coeff] : used) combo = sv_axpy(field_, combo, coeff, combos_.at(pc));
    return combo;
}

std::vector<int> RowReducer::pivot_cols() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [pc, r] : rows_) out.push_back(pc);
    return out;
}

std::vector<int> RowReducer::free_cols() const {
    std::vector<int> out;
    auto it = rows_.begin();
    for (int c = 0; c < width_; ++c) {
        while (it != rows_.end() && it->first < c) ++it;
        if (it == rows_.end() || it->first != c) out.push_back(c);
    }
    return out;
}

int rank(const SparseMatrix& m) {
    const Field& F = m.field();
    std::vector<SparseVec> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        for (const auto& [j, v] : m.row(i)) {
            (void)j;
            F.require_own(v);
        }
        rows.push_back(m.row(i));
    }
    std::vector<bool> done(rows.size(), false);
    int r = 0;
    for (;;) {
        // pivot: lowest column index, then lowest row index
        int best_col = m.cols(), best_row = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            int lead = rows[i].front().first;
            if (lead < best_col) {
                best_col = lead;
                best_row = static_cast<int>(i);
            }
        }
        if (best_row < 0) break;
        ++r;
        done[static_cast<std::size_t>(best_row)] = true;
        const SparseVec pivot_row = rows[static_cast<std::size_t>(best_row)];
        Scalar inv = F.inv(pivot_row.front().second);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            Scalar c = sv_get(F, rows[i], best_col);
            if (c.is_zero()) continue;
            rows[i] = sv_axpy(F, rows[i], F.neg(F.mul(c, inv)), pivot_row);
        }
    }
    return r;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    RowReducer red(m.field(), m.rows(), true);
    std::vector<SparseVec> kernel;
    for (int j = 0; j < m.cols(); ++j) {
        auto res = red.insert(m.col(j));
        if (!res.novel) {
            // col_j = sum combo_i col_i  =>  kernel vector e_j - combo
            SparseVec k = sv_neg(m.field(), res.combo);
            k = sv_axpy(m.field(), k, m.field().one(), sv_unit(m.field(), j));
            kernel.push_back(sv_normalize(m.field(), std::move(k)));
        }
    }
    return kernel;
}

std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b) {
    RowReducer red(a.field(), a.rows(), true);
    for (int j = 0; j < a.cols(); ++j) red.insert(a.col(j));
    return red.express(b);
}

HomologySlice::HomologySlice(const SparseMatrix& d_in, const SparseMatrix& d_out)
    : field_(d_in.field()), d_out_(d_out), span_(d_in.field(), d_in.rows(), true) {
    if (d_in.rows() != d_out.cols()) throw Error("homology: dimension mismatch between differentials");
    if (!d_out.times(d_in).is_zero()) throw NotAComplexError("composite differential is nonzero");
    n_boundary_inputs_ = d_in.cols();
    for (int j = 0; j < d_in.cols(); ++j) {
        if (span_.insert(d_in.col(j)).novel) ++boundary_rank_;
    }
    auto cycles = kernel_basis(d_out);
    cycle_dim_ = static_cast<int>(cycles.size());
    for (auto& z : cycles) {
        int input_index = span_.inserted();
        if (span_.insert(z).novel) {
            rep_of_input_.emplace(input_index, static_cast<int>(reps_.size()));
            reps_.push_back(std::move(z));
        }
    }
}

HomologySlice::Expression HomologySlice::express(const SparseVec& v) const {
    if (!d_out_.apply(v).empty()) throw NotAComplexError("vector is not a cycle");
    auto combo = span_.express(v);
    if (!combo) throw Error("cycle not in computed span (internal error)");
    Expression e;
    for (const auto& [idx, c] : *combo) {
        if (idx < n_boundary_inputs_)
            e.boundary_combo.emplace_back(idx, c);
        else
            e.class_coeffs.emplace_back(rep_of_input_.at(idx), c);
    }
    return e;
}

}  // namespace coringlab
