#pragma once

#include "coringlab/module.hpp"
#include "coringlab/presentations.hpp"

namespace coringlab {

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string witness;  // offending basis element, if any
};

struct Report {
    std::vector<AxiomResult> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    void add(const std::string& axiom, bool pass, const std::string& witness = "") {
        entries.push_back({axiom, pass, witness});
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& e : entries)
            if (!e.pass) out.push_back(e.axiom + (e.witness.empty() ? "" : " @ " + e.witness));
        return out;
    }
};

/// Coring over a base algebra R, all data linear over the ground field
/// (R itself is an algebra over that field, so corings over genuine rings
/// like Pi or an extension field L fit the same shape). The comultiplication
/// is stored on representatives in carrier (x)_k carrier and all axioms are
/// checked in the quotient carrier (x)_R carrier.
struct Coring {
    AlgebraPtr base;
    GradedVectorSpace carrier;
    MultTable left_action;           // (base idx, carrier idx) -> carrier vec
    MultTable right_action;          // (carrier idx, base idx) -> carrier vec
    std::vector<SparseVec> comult;   // per carrier idx, flat (j, k) -> j*dim + k
    SparseMatrix counit;             // base.dim x carrier.dim

    std::vector<int> idegs;          // internal degrees (bigraded carriers); may be empty
    std::optional<std::pair<int, int>> truncation;  // {s_max, d_max} for truncated carriers
    bool stable = false;
    std::vector<int> proj_factor_dims;

    Coring() : counit(Field::rationals(), 0, 0) {}
    const Field& ground() const { return base->field; }
    int dim() const { return carrier.dim(); }
    SparseVec act_left(int r, int c) const;
    SparseVec act_right(int c, int r) const;
    SparseVec act_left_vec(const SparseVec& r, const SparseVec& c) const;
    SparseVec act_right_vec(const SparseVec& c, const SparseVec& r) const;
    SparseVec comult_of(const SparseVec& v) const;  // representative in C(x)C
    SparseVec counit_of(const SparseVec& v) const;  // element of base
};

/// Bialgebra: a coring over the ground field itself, together with an
/// algebra structure on the carrier. Koszul signs use the carrier degrees.
struct Bialgebra {
    Coring coring;
    MultTable mult;
    SparseVec unit;

    const Field& ground() const { return coring.ground(); }
    int dim() const { return coring.dim(); }
    int degree_of(int i) const { return coring.carrier.degrees[static_cast<std::size_t>(i)]; }
    SparseVec mul_basis(int i, int j) const;
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
    /// Multiplication on the tensor square with the Koszul sign in the swap.
    SparseVec mul_tensor(const SparseVec& a, const SparseVec& b) const;
    Scalar counit_scalar(const SparseVec& v) const;
};

struct HopfAlgebra {
    Bialgebra bi;
    SparseMatrix antipode;
    HopfAlgebra() : antipode(Field::rationals(), 0, 0) {}
};

Report check_coring(const Coring& c);
Report check_bialgebra(const Bialgebra& b);
Report check_hopf(const HopfAlgebra& h);

/// R as a coring over itself (Delta the canonical isomorphism, counit id).
Coring trivial_coring(const AlgebraPtr& r);

/// 2^n-dimensional exterior Hopf algebra with primitive generators.
HopfAlgebra exterior_bialgebra(int n, bool graded, const Field& k);

/// Package an algebra with a HopfStructure (e.g. kE) as a HopfAlgebra.
HopfAlgebra hopf_from_structure(const GradedAlgebra& a, const HopfStructure& h);

struct GaloisExtension {
    Field base_field = Field::rationals();
    Field ext_field = Field::rationals();
    std::vector<SparseMatrix> automorphisms;  // over base_field, acting on coefficient vectors
};

/// Builds the Galois data of L over its prime field (Q or GF(p)); throws if
/// the extension is not Galois (too few roots of the minimal polynomial).
GaloisExtension galois_extension(const Field& ext_field);

/// The Galois coring L (x)_K L over L, counit the multiplication and
/// Delta(a (x) b) = (a (x) 1) (x)_L (1 (x) b), trivial grading.
Coring galois_coring(const GaloisExtension& g);

/// d (x)_K (L (x)_K L) over L with componentwise structure maps; d must be a
/// coring over the trivial base K.
Coring coring_tensor(const Coring& d, const GaloisExtension& g);

/// Graded dual of a finite coalgebra over a field: mult = Delta^*, with the
/// Koszul pairing sign. Degrees stay numerically positive; they live in the
/// opposite (cohomological) convention, recorded by callers in envelopes.
/// Throws InfiniteDimensionalError when truncation metadata shows nonzero
/// boundary degrees.
GradedAlgebra dual_algebra(const Coring& c);

/// Full dual of a bialgebra: (mult, comult) -> (comult^*, mult^*). Involutive
/// on the nose: dual(dual(b)) has equal structure constants.
Bialgebra dual_bialgebra(const Bialgebra& b);

/// Basis of { x : Delta(x) = x(x)1 + 1(x)x }.
std::vector<SparseVec> primitives(const Bialgebra& b);

/// Grouplikes { g : Delta(g) = g(x)g, eps(g) = 1 }. Complete for connected
/// positively graded bialgebras and for ungraded ones over small finite
/// fields (affine-slice enumeration).
std::vector<SparseVec> grouplikes(const Bialgebra& b);

/// Antipode of a connected graded bialgebra by the standard recursion
/// S(x) = -x - sum S(x') x''. Throws NotConnectedError.
SparseMatrix antipode_connected(const Bialgebra& b);

/// Seeded single-constant perturbations for mutation testing: adds 1 to one
/// degree-compatible structure constant. Returns what was changed.
std::string perturb_bialgebra(Bialgebra& b, Rng& rng);
std::string perturb_coring(Coring& c, Rng& rng);

}  // namespace coringlab
