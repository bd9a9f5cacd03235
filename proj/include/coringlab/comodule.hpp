#pragma once

#include "coringlab/coring.hpp"

namespace coringlab {

using CoringPtr = std::shared_ptr<const Coring>;

/// Right comodule over a coring: a graded right module over the coring's
/// base together with a coaction into space (x)_base carrier, stored on
/// representatives in space (x)_k carrier (flat index (m, c) -> m*dim_C + c).
struct Comodule {
    CoringPtr coring;
    GradedVectorSpace space;
    MultTable base_action;            // (space idx, base idx) -> space vec
    std::vector<SparseVec> coaction;  // per space idx

    const Field& ground() const { return coring->ground(); }
    int dim() const { return space.dim(); }
    /// K-dimension divided by the base rank, when the base acts freely.
    SparseVec coaction_of(const SparseVec& v) const;
    SparseVec base_act(const SparseVec& v, const SparseVec& r) const;
};

Report check_coaction(const Comodule& m);

/// The carrier as a comodule over itself via the comultiplication.
Comodule regular_comodule(const CoringPtr& c);
/// The ground field with coaction 1 -> 1 (x) 1_B over a bialgebra.
Comodule unit_comodule(const CoringPtr& c, const Bialgebra& b);

/// Monoidal product over a bialgebra: coaction
/// (id (x) mult) (id (x) swap (x) id) (rho1 (x) rho2), Koszul sign in the swap.
Comodule comodule_tensor(const Comodule& m1, const Comodule& m2, const Bialgebra& b);

/// Left module over the dual algebra of a finite coalgebra. The action is
/// the double-dualization of the coaction, computed in closed form on the
/// original basis (so phi_inverse is the literal inverse).
struct DualModule {
    GradedAlgebra algebra;
    GradedVectorSpace space;
    MultTable action;  // (algebra idx, space idx) -> space vec
};

DualModule phi_dualize(const Comodule& m);
Comodule phi_inverse(const DualModule& d, const CoringPtr& c);

/// Basis of the space of comodule morphisms m -> n (degree-0 intertwiners).
std::vector<SparseMatrix> comodule_hom(const Comodule& m, const Comodule& n);

/// Whether f intertwines coactions (and base actions).
bool is_comodule_map(const Comodule& m, const Comodule& n, const SparseMatrix& f);

/// Galois induction: a D-comodule over K becomes a comodule over
/// coring_tensor(D, g) on the space m (x)_K L.
Comodule induce_comodule(const Comodule& m, const GaloisExtension& g, const CoringPtr& tensor_coring);

/// Galois descent: the K-form of a comodule over coring_tensor(D, g),
/// computed as the equalizer of the coaction against the unit map. Throws
/// NotDescendableError when the equalizer has the wrong dimension.
Comodule descend_comodule(const Comodule& n, const GaloisExtension& g, const CoringPtr& d_coring);

/// Seeded random comodule: direct sums of regular/unit blocks conjugated by
/// a random degree-preserving change of basis.
Comodule random_comodule(const CoringPtr& c, const Bialgebra* b, Rng& rng, int max_blocks = 2);

}  // namespace coringlab
