#include "coringlab/graded.hpp"

#include <set>

#include "coringlab/errors.hpp"

namespace coringlab {

std::map<int, int> GradedVectorSpace::dims_by_degree() const {
    std::map<int, int> out;
    for (int d : degrees) ++out[d];
    return out;
}

std::vector<int> GradedVectorSpace::indices_of_degree(int d) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (degrees[static_cast<std::size_t>(i)] == d) out.push_back(i);
    return out;
}

void GradedVectorSpace::validate() const {
    if (degrees.size() != labels.size()) throw Error("graded space: degrees/labels length mismatch");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw Error("graded space: duplicate label '" + l + "'");
}

GradedVectorSpace GradedVectorSpace::shifted(int n) const {
    GradedVectorSpace out = *this;
    for (auto& d : out.degrees) d += n;
    return out;
}

GradedVectorSpace GradedVectorSpace::tensor(const GradedVectorSpace& other) const {
    GradedVectorSpace out;
    out.degrees.reserve(static_cast<std::size_t>(dim()) * static_cast<std::size_t>(other.dim()));
    out.labels.reserve(out.degrees.capacity());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < other.dim(); ++j) {
            out.degrees.push_back(degrees[static_cast<std::size_t>(i)] + other.degrees[static_cast<std::size_t>(j)]);
            out.labels.push_back(labels[static_cast<std::size_t>(i)] + "(x)" + other.labels[static_cast<std::size_t>(j)]);
        }
    return out;
}

}  // namespace coringlab
