#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "taured/algebra.hpp"
#include "taured/matrix.hpp"

namespace taured {

/// A right module given as a quiver representation: one vector space per
/// vertex and, for each arrow a : s -> t, a dim(s) x dim(t) matrix acting on
/// row vectors. Construction checks shapes and every relation of the algebra.
class Representation {
public:
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }

  /// Action of a path: product of arrow maps, identity for a trivial path.
  Matrix path_action(const Path& p) const;
  /// Action of the component e_from x e_to of an algebra element.
  Matrix act(const Element& x, std::size_t from, std::size_t to) const;

  friend bool operator==(const Representation& lhs, const Representation& rhs);

private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// Per-vertex blocks f_w : M_w -> N_w with M_a f_t == f_s N_a for a : s -> t.
struct Morphism {
  std::vector<Matrix> blocks;
};

bool is_morphism(const Representation& m, const Representation& n, const Morphism& f);

Representation simple(const AlgebraPtr& a, std::size_t v);
/// e_v A: basis at w is the residue paths from v to w, arrows act by right
/// concatenation.
Representation projective(const AlgebraPtr& a, std::size_t v);
/// D(A e_v): basis at w is dual to the residue paths from w to v.
Representation injective(const AlgebraPtr& a, std::size_t v);
/// A as a right module over itself.
Representation regular_module(const AlgebraPtr& a);

Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts);

/// Basis of Hom(M, N) from the nullspace of the stacked commutation
/// constraints. Throws Error(AlgebraMismatch).
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// An isomorphism M -> N, verified, if the search finds one.
std::optional<Morphism> find_isomorphism(const Representation& m, const Representation& n);
bool is_iso(const Representation& m, const Representation& n);

/// Submodule spanned per vertex by the rows of `bases` (must be closed).
Representation submodule(const Representation& m, const std::vector<Matrix>& bases);
/// M / U for the submodule U spanned per vertex by the rows of `bases`.
Representation quotient_module(const Representation& m, const std::vector<Matrix>& bases);
/// Per-vertex row bases (reduced echelon) of M * rad.
std::vector<Matrix> radical_subspaces(const Representation& m);
/// Dimension vectors of the layers of the radical series, top first.
std::vector<std::vector<std::size_t>> radical_layers(const Representation& m);

/// Minimal projective presentation P1 -> P0 -> M -> 0. The map is stored as
/// entries u(j, i) in e_{p0[i]} A e_{p1[j]}: the summand P_{p1[j]} maps to P0
/// by left multiplication with the column (u(j, i))_i.
struct PresentationMap {
  std::vector<std::size_t> p0;
  std::vector<std::size_t> p1;
  std::vector<std::vector<Element>> entries;  // entries[j][i]
};

/// Throws Error(ZeroModule).
PresentationMap minimal_presentation(const Representation& m);
/// True iff every entry lies in the radical (no trivial-path component).
bool entries_in_radical(const Algebra& a, const PresentationMap& p);

/// Auslander-Reiten translate: the kernel of nu(P1) -> nu(P0) for the
/// minimal presentation of M, nu sending P_v to I_v.
Representation tau(const Representation& m);
/// The map nu(P1) -> nu(P0) as per-vertex matrices (rows: nu(P1)).
std::vector<Matrix> nakayama_map(const AlgebraPtr& a, const PresentationMap& p);

/// Per-vertex echelon bases of the trace of M in N, the sum of all images
/// of maps M -> N.
std::vector<Matrix> trace_subspaces(const Representation& m, const Representation& n);
/// N in Fac M, decided by the trace of M in N.
bool in_fac(const Representation& n, const Representation& m);
bool is_sincere(const Representation& m);

/// Heuristic indecomposability audit for user-supplied modules: every basis
/// endomorphism must be a scalar plus a nilpotent.
bool looks_indecomposable(const Representation& m);

/// -C^{-1} C^T with C(i, j) = dim e_i A e_j, acting on dimension vectors as
/// rows. On a hereditary algebra it sends dim M to dim tau M for M
/// indecomposable and not projective. Throws Error(NotFiniteDimensional) when
/// C is singular.
Matrix coxeter_matrix(const Algebra& a);

/// M / M * I over the target of `q`, I the ideal of the quotient.
/// Throws Error(QuotientMismatch) if M is not over q.source.
Representation bar(const Representation& m, const AlgebraQuotient& q);
/// A module over q.target viewed over q.source.
Representation inflate(const Representation& m, const AlgebraQuotient& q);

}  // namespace taured
