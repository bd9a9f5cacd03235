#pragma once

#include <variant>

#include "coringlab/algebra.hpp"

namespace coringlab {

/// Field spec as written in a presentation: characteristic plus optional
/// minimal polynomial (ascending coefficients, monic).
struct FieldSpecText {
    std::int64_t characteristic = 0;
    std::vector<Rat> minpoly;  // empty = prime field / Q
    Field realize() const;
};

struct VarSpec {
    std::string name;
    int degree = 1;
};

struct PolyQuotientData {
    FieldSpecText field;
    std::vector<VarSpec> vars;
    std::vector<std::vector<int>> relations;  // exponent vectors over vars
};

struct ExteriorData {
    FieldSpecText field;
    int generators = 0;
    bool graded = true;
};

struct GroupAlgebraData {
    std::int64_t p = 2;
    int rank = 1;
    bool graded = false;
};

struct QuiverArrow {
    std::string name;
    int from = 0, to = 0;  // vertex indices, 0-based
};

struct QuiverRelationTerm {
    Rat coeff;
    std::vector<int> path;  // arrow indices in traversal order (first applied first)
};

struct QuiverData {
    FieldSpecText field;
    int vertices = 0;
    std::vector<QuiverArrow> arrows;
    std::vector<std::vector<QuiverRelationTerm>> relations;
};

struct AlgebraPresentation {
    enum class Kind { PolynomialQuotient, Exterior, GroupAlgebraElementaryAbelian, QuiverWithRelations };
    Kind kind;
    std::variant<PolyQuotientData, ExteriorData, GroupAlgebraData, QuiverData> data;
};

/// Parse the textual grammar
///   FIELD '[' vars ']' [ '/(' relations ')' ]
/// with FIELD one of Q, Q(poly), GF(p), GF(p^n;poly); vars a comma list of
/// identifiers with optional ":degree"; relations a comma list of monomials.
/// Throws ParseError (with position), NonPrimeCharacteristicError, or
/// NonMonomialRelationError.
AlgebraPresentation parse_presentation(const std::string& text);

/// Parse just a FIELD token (as used in ComonadSpec ring lists): "Q",
/// "Q(x^2+1)", "GF(p)", "GF(p^n;poly)".
FieldSpecText parse_field_spec(const std::string& text);

/// Monomial/path basis realization up to the degree bound.
GradedAlgebra realize(const AlgebraPresentation& pres, int degree_bound);

/// Convenience: parse + realize a presentation string. A pure field token
/// (no variables) realizes as the extension algebra over its prime field.
GradedAlgebra realize_text(const std::string& text, int degree_bound);

/// kE = k[x_1..x_r]/(x_i^p) with its primitive Hopf structure
/// (Delta x_i = x_i(x)1 + 1(x)x_i, S x_i = -x_i).
std::pair<GradedAlgebra, HopfStructure> elementary_abelian_hopf(std::int64_t p, int rank, bool graded);

/// Exterior algebra on n generators (degree 1 when graded, else 0) with the
/// primitive Hopf structure. Used by coring-core's exterior_bialgebra.
std::pair<GradedAlgebra, HopfStructure> exterior_hopf(int n, bool graded, const Field& k);

}  // namespace coringlab
