#pragma once

#include <map>
#include <string>
#include <vector>

#include "coringlab/field.hpp"

namespace coringlab {

/// Finite graded vector space presented by a flat basis: basis vector i has
/// degree degrees[i] and a unique label.
struct GradedVectorSpace {
    std::vector<int> degrees;
    std::vector<std::string> labels;

    int dim() const { return static_cast<int>(degrees.size()); }
    std::map<int, int> dims_by_degree() const;
    std::vector<int> indices_of_degree(int d) const;
    void validate() const;  // label uniqueness, matching lengths

    /// Grading shift: the degree-d component of the result is the degree d-n
    /// component of the input, so every basis degree increases by n.
    GradedVectorSpace shifted(int n) const;

    /// Tensor product space; index (i, j) flattens to i * other.dim() + j.
    GradedVectorSpace tensor(const GradedVectorSpace& other) const;

    bool operator==(const GradedVectorSpace& other) const = default;
};

inline int tensor_index(int i, int j, int dim_second) { return i * dim_second + j; }
inline std::pair<int, int> tensor_split(int flat, int dim_second) { return {flat / dim_second, flat % dim_second}; }

}  // namespace coringlab
