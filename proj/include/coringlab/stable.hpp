#pragma once

#include "coringlab/comodule.hpp"

namespace coringlab {

/// Finite-dimensional module over kC = k[t]/(t^p): a nilpotent operator
/// with t^p = 0.
struct StableModule {
    Field field = Field::rationals();
    int p = 2;
    SparseMatrix t = SparseMatrix(Field::rationals(), 0, 0);
    int dim() const { return t.rows(); }
};

/// Module over kE = k[x_1..x_r]/(x_i^p): commuting nilpotent operators.
struct EModule {
    Field field = Field::rationals();
    int p = 2;
    std::vector<SparseMatrix> x;  // one matrix per generator
    int dim() const { return x.empty() ? 0 : x.front().rows(); }
};

/// The cyclic shifted subgroup phi: kC -> kE, t -> sum a_i x_i for a
/// nonzero point a.
struct ShiftedPoint {
    int p = 2;
    int r = 1;
    std::vector<Scalar> a;
    Field field() const { return Field::prime_field(p); }
};

ShiftedPoint shifted_point(int p, int r, const std::vector<long long>& coords);

StableModule cyclic_module(int p, int block_size, const Field& k);  // k[t]/(t^size)
StableModule direct_sum(const StableModule& a, const StableModule& b);
EModule regular_emodule(const ShiftedPoint& pt);  // kE over itself

/// Jordan block sizes (descending) from the rank sequence of powers of t.
std::vector<int> jordan_decompose(const StableModule& m);

/// Strip all Jordan blocks of size p (quotient by the free part); idempotent.
StableModule stable_reduce(const StableModule& m);

/// Restriction along phi: the kE-module becomes (V, sum a_i X_i).
StableModule restrict_along(const EModule& m, const ShiftedPoint& pt);

/// Coinduction phi^!: the space of kC-linear maps kE -> n with kE acting by
/// translation. Keeps the solution basis so maps can be transported.
struct Coinduced {
    EModule emod;
    StableModule restricted;          // phi_* phi^! n
    std::vector<SparseVec> basis;     // kC-linear maps, flat (n-coord, kE-coord)
    std::shared_ptr<RowReducer> span; // for expressing maps in the basis
    int ke_dim = 0;
    int n_dim = 0;
};
Coinduced coinduce(const StableModule& n, const ShiftedPoint& pt);

/// Adjunction Hom_kC(phi_* M, N) = Hom_kE(M, phi^! N): both directions.
SparseMatrix adjoint_forward(const EModule& m, const StableModule& n, const ShiftedPoint& pt,
                             const SparseMatrix& u);
SparseMatrix adjoint_backward(const EModule& m, const StableModule& n, const ShiftedPoint& pt,
                              const SparseMatrix& w);

/// Basis of Hom_kC(m, n).
std::vector<SparseMatrix> hom_kc(const StableModule& m, const StableModule& n);

/// Stable homs: Hom_kC(m, n) modulo maps factoring through projectives, with
/// deterministic complement representatives.
struct StableHom {
    std::vector<SparseMatrix> reps;           // representatives of a basis
    int hom_dim = 0;                          // dim Hom before the quotient
    int factoring_dim = 0;                    // dim of the projective-factoring subspace
    std::shared_ptr<RowReducer> span;         // factoring subspace then reps
    std::map<int, int> rep_of_input;
    /// Coordinates of a map in the representative basis, modulo factoring maps.
    SparseVec express(const Field& k, const SparseMatrix& f) const;
};
StableHom stable_hom(const StableModule& m, const StableModule& n);

/// The comonad C = phi_* phi^! evaluated at a module, on objects and maps;
/// counit = evaluation at 1, comultiplication via the adjunction unit.
struct ComonadValue {
    Coinduced data;
    SparseMatrix counit = SparseMatrix(Field::rationals(), 0, 0);  // C(n) -> n
};
ComonadValue comonad_value(const StableModule& n, const ShiftedPoint& pt);
/// C(g) for g : m -> n.
SparseMatrix comonad_on_map(const StableModule& m, const StableModule& n, const ShiftedPoint& pt,
                            const SparseMatrix& g);
/// Delta_n : C(n) -> C(C(n)).
SparseMatrix comonad_comult(const StableModule& n, const ShiftedPoint& pt);

/// The stable endomorphism algebra of G = k[t]/(t) + ... + k[t]/(t^{p-1}),
/// with the verification data tying it to the preprojective quiver algebra.
struct StableEndo {
    GradedAlgebra quiver_pi;               // realized path algebra with the mesh relations
    std::vector<SparseMatrix> images;      // stable representative of each quiver basis element
    int stable_end_dim = 0;                // sum of stable hom dims
    Report report;                         // relations + dimension match + independence
    std::vector<int> summand_sizes;        // 1 .. p-1
};
StableEndo stable_endomorphism_algebra(int p);

/// The coring extracted from the comonad at p = 2 (a full bialgebra over k)
/// together with its certification against the exterior bialgebra.
struct ShiftedCoringP2 {
    HopfAlgebra hopf;
    Report certification;  // dims, primitive count, structure-constant match
    int rank = 0;
};
ShiftedCoringP2 shifted_subgroup_bialgebra_p2(const ShiftedPoint& pt);

/// The odd-p coring over Pi: structure constants on the stable reduction of
/// the comonad value at G, with the axiom report computed in the stable hom
/// spaces. Exploratory output: no normal form is certified.
struct ShiftedCoringOddP {
    Coring coring;         // base = realized quiver Pi
    Report axioms;
    std::vector<int> object_jordan_type;  // Jordan type of the comonad value at G
};
ShiftedCoringOddP shifted_subgroup_coring_odd(const ShiftedPoint& pt);

/// Jordan type of the underlying comonad value at G (any p), for the
/// dimension checks against the displayed direct-sum formula.
std::vector<int> comonad_object_jordan_type(const ShiftedPoint& pt);

StableModule random_stable_module(int p, const Field& k, Rng& rng, int max_dim);
EModule random_emodule(const ShiftedPoint& pt, Rng& rng, int max_dim);

}  // namespace coringlab
