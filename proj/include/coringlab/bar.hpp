#pragma once

#include "coringlab/coring.hpp"

namespace coringlab {

/// Normalized bar complex of a connected augmented graded algebra, truncated
/// to the triangle s <= d <= max_degree (the bidegree (s, d) slice is empty
/// when d < s because every letter has positive internal degree).
///
/// Words are sequences of augmentation-ideal basis letters; the differential
/// merges adjacent letters with the sign (-1)^i on the i-th face. Internal
/// degree is preserved, homological degree drops by one.
class BarComplex {
  public:
    BarComplex(AlgebraPtr a, int s_max, int d_max);

    AlgebraPtr algebra() const { return algebra_; }
    int s_max() const { return s_max_; }
    int d_max() const { return d_max_; }
    /// Augmentation-ideal basis, as indices into the algebra basis.
    const std::vector<int>& letters() const { return letters_; }
    int letter_degree(int letter) const { return algebra_->degree_of(letters_[static_cast<std::size_t>(letter)]); }

    const std::vector<std::vector<int>>& words(int s, int d) const;
    int slice_dim(int s, int d) const;
    int word_index(int s, int d, const std::vector<int>& w) const;
    /// differential (s, d) -> (s-1, d)
    const SparseMatrix& differential(int s, int d) const;

  private:
    AlgebraPtr algebra_;
    int s_max_, d_max_;
    std::vector<int> letters_;
    std::map<int, int> letter_of_basis_;  // algebra basis idx -> letter idx
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> words_;
    std::map<std::pair<int, int>, std::map<std::vector<int>, int>> index_;
    std::map<std::pair<int, int>, SparseMatrix> diff_;
    friend class TorBuilder;
};

/// Bigraded dimension table, (homological degree, internal degree) -> dim.
using DimTable = std::map<std::pair<int, int>, int>;

/// Tor of the ground field against itself, as a bigraded Hopf algebra:
/// homology of the bar complex with the shuffle product, deconcatenation
/// coproduct, and the antipode of a connected graded bialgebra. Carrier
/// degrees are homological; internal degrees are kept in coring.idegs and the
/// truncation window (max_degree, max_degree) is recorded.
struct TorHopf {
    HopfAlgebra hopf;
    DimTable dims;                         // within the computed window
    std::vector<std::pair<int, int>> bidegrees;  // per basis element
    std::map<int, int> dims_by_hdeg() const;
};

BarComplex bar_complex(const AlgebraPtr& a, int s_max, int d_max);
TorHopf tor_bialgebra(const AlgebraPtr& a, int max_degree);

/// Independent oracle: bigraded Tor dimensions from a degreewise minimal
/// free resolution of the ground field (iterated syzygies with minimal
/// generator selection). Shares no code with the bar construction.
DimTable tor_dims_via_resolution(const AlgebraPtr& a, int n_max, int d_max);

}  // namespace coringlab
