#include "coringlab/sparse.hpp"

#include <algorithm>
#include <map>

namespace coringlab {

SparseVec sv_axpy(const Field& F, const SparseVec& a, const Scalar& c, const SparseVec& b) {
    if (c.is_zero() || b.empty()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            Scalar v = F.mul(c, b[j].second);
            if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = F.add(a[i].second, F.mul(c, b[j].second));
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sv_add(const Field& F, const SparseVec& a, const SparseVec& b) { return sv_axpy(F, a, F.one(), b); }

SparseVec sv_scale(const Field& F, const Scalar& c, const SparseVec& a) {
    SparseVec out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) {
        Scalar w = F.mul(c, v);
        if (!w.is_zero()) out.emplace_back(i, std::move(w));
    }
    return out;
}

SparseVec sv_neg(const Field& F, const SparseVec& a) {
    SparseVec out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) out.emplace_back(i, F.neg(v));
    return out;
}

Scalar sv_get(const Field& F, const SparseVec& a, int idx) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const std::pair<int, Scalar>& e, int i) { return e.first < i; });
    if (it != a.end() && it->first == idx) return it->second;
    return F.zero();
}

SparseVec sv_unit(const Field& F, int idx) { return SparseVec{{idx, F.one()}}; }

SparseVec sv_normalize(const Field& F, SparseVec v) {
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second = F.add(out.back().second, e.second);
        else
            out.push_back(std::move(e));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

bool sv_equal(const SparseVec& a, const SparseVec& b) { return a == b; }

SparseMatrix::SparseMatrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), rows_data_(static_cast<std::size_t>(rows)) {}

SparseMatrix SparseMatrix::identity(const Field& field, int n) {
    SparseMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

SparseMatrix SparseMatrix::from_triplets(const Field& field, int rows, int cols,
                                         const std::vector<std::tuple<int, int, Scalar>>& entries) {
    SparseMatrix m(field, rows, cols);
    std::map<std::pair<int, int>, Scalar> acc;
    for (const auto& [i, j, v] : entries) {
        if (i < 0 || i >= rows || j < 0 || j >= cols) throw Error("sparse entry out of range");
        field.require_own(v);
        auto it = acc.find({i, j});
        if (it == acc.end())
            acc.emplace(std::make_pair(i, j), v);
        else
            it->second = field.add(it->second, v);
    }
    for (const auto& [ij, v] : acc)
        if (!v.is_zero()) m.rows_data_[static_cast<std::size_t>(ij.first)].emplace_back(ij.second, v);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Field& field, const std::vector<std::vector<long long>>& dense) {
    int r = static_cast<int>(dense.size());
    int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
    SparseMatrix m(field, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                m.set(i, j, field.from_int(dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    return m;
}

void SparseMatrix::set(int i, int j, const Scalar& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("sparse entry out of range");
    field_.require_own(v);
    auto& row = rows_data_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {j, v});
    }
}

Scalar SparseMatrix::get(int i, int j) const { return sv_get(field_, row(i), j); }

SparseMatrix SparseMatrix::times(const SparseMatrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix dimension mismatch in product");
    SparseMatrix out(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        SparseVec acc;
        for (const auto& [k, v] : rows_data_[static_cast<std::size_t>(i)])
            acc = sv_axpy(field_, acc, v, other.rows_data_[static_cast<std::size_t>(k)]);
        out.rows_data_[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    // out_i = sum_j m[i][j] v_j; iterate column-wise over v.
    SparseVec out;
    for (const auto& [j, c] : v) {
        if (j < 0 || j >= cols_) throw Error("vector index out of range in apply");
        (void)c;
    }
    for (int i = 0; i < rows_; ++i) {
        const auto& row = rows_data_[static_cast<std::size_t>(i)];
        Scalar acc = field_.zero();
        std::size_t a = 0, b = 0;
        bool nonzero = false;
        while (a < row.size() && b < v.size()) {
            if (row[a].first < v[b].first)
                ++a;
            else if (v[b].first < row[a].first)
                ++b;
            else {
                acc = field_.add(acc, field_.mul(row[a].second, v[b].second));
                nonzero = true;
                ++a;
                ++b;
            }
        }
        if (nonzero && !acc.is_zero()) out.emplace_back(i, std::move(acc));
    }
    return out;
}

SparseVec SparseMatrix::col(int j) const {
    SparseVec out;
    for (int i = 0; i < rows_; ++i) {
        Scalar v = get(i, j);
        if (!v.is_zero()) out.emplace_back(i, std::move(v));
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : rows_data_[static_cast<std::size_t>(i)])
            out.rows_data_[static_cast<std::size_t>(j)].emplace_back(i, v);
    return out;
}

SparseMatrix SparseMatrix::plus(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix dimension mismatch in sum");
    SparseMatrix out(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        out.rows_data_[static_cast<std::size_t>(i)] =
            sv_add(field_, rows_data_[static_cast<std::size_t>(i)], other.rows_data_[static_cast<std::size_t>(i)]);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
    SparseMatrix out(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        out.rows_data_[static_cast<std::size_t>(i)] = sv_scale(field_, c, rows_data_[static_cast<std::size_t>(i)]);
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& r : rows_data_)
        if (!r.empty()) return false;
    return true;
}

bool SparseMatrix::equal(const SparseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && rows_data_ == other.rows_data_;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_data_) n += r.size();
    return n;
}

std::vector<std::tuple<int, int, Scalar>> SparseMatrix::triplets() const {
    std::vector<std::tuple<int, int, Scalar>> out;
    out.reserve(nnz());
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : rows_data_[static_cast<std::size_t>(i)]) out.emplace_back(i, j, v);
    return out;
}

}  // namespace coringlab
