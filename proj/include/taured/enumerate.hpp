#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taured/representation.hpp"
#include "taured/strings.hpp"

namespace taured {

/// A module supplied by the user instead of the string backend.
struct UserModule {
  std::string name;  // may be empty
  Representation module;
};

/// Where the indecomposables come from.
struct Backend {
  enum class Kind { Strings, User };
  Kind kind = Kind::Strings;
  std::vector<UserModule> modules;  // Kind::User only
  std::size_t string_cap = 0;       // 0 selects the default

  static Backend strings() { return {}; }
  static Backend user(std::vector<UserModule> modules) { return {Kind::User, std::move(modules), 0}; }
};

struct IndecRecord {
  std::size_t id = 0;
  std::string name;
  Representation module;
  Representation tau;
  std::optional<std::size_t> tau_id;  // tau matched inside the inventory
  bool is_tau_rigid = false;
  bool is_projective = false;
  std::optional<std::size_t> projective_vertex;
  std::optional<StringWord> word;
};

/// The indecomposables of an algebra with tau and the Hom data that the
/// enumeration needs. Records are sorted by top vertex, then by decreasing
/// dimension, so "1/2" precedes "1".
class Inventory {
public:
  Inventory(AlgebraPtr algebra, std::vector<IndecRecord> records, std::vector<std::string> warnings);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<IndecRecord>& records() const { return records_; }
  const IndecRecord& record(std::size_t id) const { return records_.at(id); }
  std::size_t size() const { return records_.size(); }
  std::size_t num_vertices() const { return algebra_->num_vertices(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// dim Hom(X, tau Y).
  std::size_t hom_to_tau(std::size_t x, std::size_t y) const { return hom_tau_[x * size() + y]; }
  /// Id of the record isomorphic to m, if any.
  std::optional<std::size_t> find(const Representation& m) const;
  std::optional<std::size_t> find_name(const std::string& name) const;
  /// Per-vertex trace of X in Y, computed once per pair.
  const std::vector<Matrix>& trace(std::size_t x, std::size_t y) const;

private:
  AlgebraPtr algebra_;
  std::vector<IndecRecord> records_;
  std::vector<std::string> warnings_;
  std::vector<std::size_t> hom_tau_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<Matrix>> traces_;
};

/// Throws Error(NotStringAlgebra), Error(CapExceeded) from the string
/// backend; Error(IncompleteInventory) for duplicate user modules.
Inventory build_inventory(const AlgebraPtr& a, const Backend& backend = Backend::strings());

/// Loewy name "1/2" for uniserial modules, empty otherwise.
std::string loewy_name(const Representation& m);

/// An element of the compatibility graph: a record id or a support vertex.
struct Node {
  enum class Kind { Module, Vertex };
  Kind kind = Kind::Module;
  std::size_t index = 0;

  static Node module(std::size_t id) { return {Kind::Module, id}; }
  static Node vertex(std::size_t v) { return {Kind::Vertex, v}; }
};

bool compatible(const Inventory& inv, Node x, Node y);

struct STPair {
  std::vector<std::size_t> modules;  // record ids, ascending
  std::vector<std::size_t> support;  // support-projective vertices, ascending
  bool is_tau_tilting = false;

  friend bool operator==(const STPair&, const STPair&) = default;
};

/// Canonical order: fewer support vertices first, then module ids, then
/// support vertices, all lexicographic.
bool pair_less(const STPair& x, const STPair& y);

struct EnumerateOptions {
  std::optional<std::size_t> max_support;  // 0 gives the tau-tilting modules only
};

std::vector<STPair> enumerate_stpairs(const Inventory& inv, const EnumerateOptions& opts = {});

/// The literal definition: for every vertex subset S, the tau-tilting
/// modules of A / A e A (e the idempotent of the complement) found by testing
/// Hom(M, tau M) = 0 on direct sums, inflated and matched into `inv`.
std::vector<STPair> oracle_stpairs_via_quotients(const Inventory& inv, const Backend& backend);

/// Fac(module of p1) contains the module of p2.
bool order_ge(const Inventory& inv, const STPair& p1, const STPair& p2);

/// Summand names joined by `sep`; "0" for the zero module.
std::string pair_label(const Inventory& inv, const STPair& p, const std::string& sep = "⊕");

/// Directed graph of a finite poset by its covering relations.
struct PosetQuiver {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // sorted
  std::vector<std::vector<bool>> order;                     // order[i][j]: i >= j

  std::size_t size() const { return labels.size(); }
};

/// Hasse quiver of the Fac-order on `pairs`; vertex i is pairs[i].
PosetQuiver hasse(const Inventory& inv, const std::vector<STPair>& pairs);
/// Covering relations of a (reflexive) order matrix.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& order);
/// Reflexive transitive closure of the arrows.
std::vector<std::vector<bool>> reachability(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows);

/// Full subquiver on `keep` (listed order); arrows are restricted, not
/// recomputed. Throws Error(UnknownVertex).
PosetQuiver full_subquiver(const PosetQuiver& h, const std::vector<std::size_t>& keep);

}  // namespace taured
