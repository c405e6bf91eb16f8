#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taured/matrix.hpp"
#include "taured/quiver.hpp"

namespace taured {

/// Coordinates of an algebra element in the residue-path basis.
using Element = std::vector<Scalar>;

/// Finite-dimensional bound quiver algebra KQ/I. Immutable once built; shared
/// by pointer between the representations over it.
class Algebra {
public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const Field& field() const { return field_; }
  std::size_t num_vertices() const { return quiver_.num_vertices(); }

  std::size_t dim() const { return basis_.size(); }
  /// Basis residue paths, ascending in path order.
  const std::vector<Path>& basis() const { return basis_; }
  /// Least L with every path of length L in the ideal.
  std::size_t nilpotency_bound() const { return bound_; }

  /// Basis indices of the paths from vertex i to vertex j (the slice e_i A e_j).
  const std::vector<std::size_t>& slice(std::size_t i, std::size_t j) const;
  std::size_t trivial_index(std::size_t v) const { return trivial_index_.at(v); }
  std::optional<std::size_t> basis_index(const Path& p) const;

  /// Normal form of an arbitrary path; zero when the path is in the ideal.
  Element path_element(const Path& p) const;
  Element basis_element(std::size_t i) const;
  Element zero_element() const { return Element(dim(), field_.zero()); }
  Element multiply(const Element& x, const Element& y) const;
  /// Product of two basis elements.
  const std::vector<std::pair<std::size_t, Scalar>>& basis_product(std::size_t i,
                                                                   std::size_t j) const {
    return table_[i * dim() + j];
  }

  /// True when every relation is a single path (up to scalar).
  bool is_monomial() const;

  std::string element_to_string(const Element& x) const;

private:
  friend std::shared_ptr<const Algebra> build_algebra(const Quiver&, const std::vector<Relation>&,
                                                      std::size_t, Field);

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  std::size_t bound_ = 0;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> basis_lookup_;
  std::vector<std::size_t> trivial_index_;
  std::vector<std::vector<std::size_t>> slices_;
  // normal forms of all paths of length <= bound_ (sparse)
  std::map<Path, std::vector<std::pair<std::size_t, Scalar>>> normal_forms_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline constexpr std::size_t kDefaultMaxLength = 30;

/// Builds KQ/I. The ideal is computed degree by degree in KQ truncated at L
/// for L = 1, 2, ...; the first L whose length-L paths all lie in the ideal
/// fixes the basis. Relation coefficients are coerced into `field`.
/// Throws Error(NotFiniteDimensional) if no L <= max_len works.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations,
                         std::size_t max_len = kDefaultMaxLength, Field field = Field::rational());

/// Result of a two-sided-ideal quotient, with the data needed to move
/// modules between the two algebras.
struct AlgebraQuotient {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<std::optional<std::size_t>> vertex_map;  // source vertex -> target vertex
  std::vector<std::optional<std::size_t>> arrow_map;   // source arrow -> target arrow
  std::vector<std::size_t> surviving_vertices;          // target vertex -> source vertex
  std::vector<std::size_t> surviving_arrows;            // target arrow -> source arrow
  Matrix projection;                                    // dim source x dim target
  Matrix ideal_basis;                                   // rows span the ideal in source coords

  Element project(const Element& x) const { return row_times(x, projection); }
};

/// Quotient by the two-sided ideal generated by `gens`. Vertices whose
/// idempotent and arrows whose residue fall in the ideal are deleted from the
/// quiver; the remaining generator components become relations. Throws
/// Error(UnsupportedQuotient) when the quotient has no admissible
/// presentation of that shape (e.g. an arrow congruent to longer paths).
AlgebraQuotient quotient_by_elements(const AlgebraPtr& a, const std::vector<Element>& gens);

/// A / AeA with e the sum of the idempotents outside `support`.
/// Throws Error(EmptySupport) for an empty support.
AlgebraQuotient vertex_subalgebra_quotient(const AlgebraPtr& a,
                                           const std::vector<std::size_t>& support);

/// Exhaustive (dim <= full_check_dim) or sampled associativity check.
bool check_associativity(const Algebra& a, std::size_t full_check_dim = 12,
                         std::size_t samples = 2000);

}  // namespace taured
