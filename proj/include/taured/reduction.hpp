#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "taured/enumerate.hpp"
#include "taured/series.hpp"

namespace taured {

struct ProjInjective {
  std::size_t vertex = 0;            // Q = P_vertex
  std::size_t injective_vertex = 0;  // Q is isomorphic to I_injective_vertex
};

std::vector<ProjInjective> find_proj_injectives(const AlgebraPtr& a);

/// Everything attached to one projective-injective Q = P_v and the quotient
/// by its socle.
struct ReductionContext {
  AlgebraPtr algebra;
  std::size_t vertex = 0;
  std::size_t socle_vertex = 0;
  Element socle;
  AlgebraQuotient quotient;
  Inventory inv;      // over the algebra
  Inventory bar_inv;  // over the quotient
  std::size_t q_id = 0;
  std::optional<std::size_t> qbar_id;            // in bar_inv; none when Q is simple
  std::vector<std::optional<std::size_t>> alpha_map;  // inv id -> bar_inv id
  std::vector<std::size_t> inflate_map;               // bar_inv id -> inv id
  std::vector<std::size_t> hom_to_q;  // bar_inv id -> dim Hom(inflated module, Q)

  bool q_simple() const { return !qbar_id.has_value(); }
  const AlgebraPtr& bar_algebra() const { return quotient.target; }
};

/// Throws Error(NotProjInjective), Error(NonSimpleSocle).
ReductionContext socle_quotient(const AlgebraPtr& a, std::size_t v, const Backend& backend = Backend::strings());

/// The basic module with the same additive closure as the bar of M.
std::vector<std::size_t> alpha(const ReductionContext& ctx, const std::vector<std::size_t>& module_ids);
/// dim Hom(N, Q) for a module over the quotient, read as a module over the algebra.
std::size_t hom_to_q(const ReductionContext& ctx, const std::vector<std::size_t>& bar_ids);

/// Sets of pairs over the quotient. n1_support is the support-tilting set
/// used by the surgery statement; n1 is the tau-tilting set of the
/// three-way decomposition.
struct NSets {
  std::vector<STPair> n1;
  std::vector<STPair> n2;
  std::vector<STPair> n3;
  std::vector<STPair> n1_support;
};

/// `bar_pairs` must contain every support tau-tilting pair of the quotient
/// with at most one support vertex (n1_support needs all of them).
NSets compute_nsets(const ReductionContext& ctx, const std::vector<STPair>& bar_pairs);

/// H^N: vertices of h followed by copies n+ of the vertices in `n`.
/// Throws Error(UnknownVertex).
PosetQuiver surgery(const PosetQuiver& h, const std::vector<std::size_t>& n);

/// tau-tilt of the algebra rebuilt from the three families, as sorted
/// module id sets over the algebra.
std::vector<std::vector<std::size_t>> reconstruct_tau_tilt(const ReductionContext& ctx, const NSets& nsets);

struct CheckResult {
  std::string name;
  std::string anchor;  // the statement being checked, in words
  bool pass = false;
  std::string witness;  // detail on failure, or a note
};

struct Report {
  std::string algebra;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
};

/// Appends the reduction checks for one projective-injective to `report`.
void run_reduction_checks(const ReductionContext& ctx, Report& report);

/// Runs every reduction check for each projective-injective of `a`.
/// Throws Error(NoProjInjective).
Report verify_reduction(const AlgebraPtr& a, const Backend& backend = Backend::strings(),
                        const std::string& name = "");

struct SeriesRow {
  int n = 0;
  std::size_t count = 0;
  std::optional<bool> recurrence;  // set where the reduction applies
  mpz_class closed;
  std::optional<bool> n2_structure;
};

struct SeriesTable {
  SeriesKind kind = SeriesKind::A;
  std::vector<SeriesRow> rows;

  bool passed() const;
};

/// Direct enumeration of |tau-tilt| for n up to n_max with the recurrence,
/// the closed form and the shape of N2 checked where they apply.
/// Throws Error(BudgetExceeded) beyond n_max = 12 (A) or 11 (D).
SeriesTable series_counts(SeriesKind kind, int n_max);

}  // namespace taured
