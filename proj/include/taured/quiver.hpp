#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "taured/scalar.hpp"

namespace taured {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Finite quiver with labelled vertices and named arrows. Indices are
/// positions in declaration order.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t add_vertex(const std::string& label);
  std::size_t add_arrow(const std::string& name, std::size_t source, std::size_t target);
  /// Convenience overload taking vertex labels.
  std::size_t add_arrow(const std::string& name, const std::string& source,
                        const std::string& target);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_label(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;
  /// Throws Error(UnknownVertex).
  std::size_t vertex_index(const std::string& label) const;

  /// Rank of each arrow under name order; used to order paths.
  const std::vector<std::size_t>& arrow_name_rank() const { return name_rank_; }

private:
  void reindex_names();

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> arrow_lookup_;
  std::vector<std::size_t> name_rank_;
};

/// A path composed left to right: in "a b", target(a) == source(b). A
/// trivial path e_v has no arrows and start == v.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }
  std::size_t end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }

  friend auto operator<=>(const Path&, const Path&) = default;
};

Path trivial_path(std::size_t vertex);
/// Validates composability; throws Error(InvalidRelation) otherwise.
Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows);
std::optional<Path> concatenate(const Quiver& q, const Path& lhs, const Path& rhs);
std::string path_to_string(const Quiver& q, const Path& p);

/// Total order used for basis representatives: by length, then arrow names
/// lexicographically, then start vertex.
bool path_less(const Quiver& q, const Path& lhs, const Path& rhs);

struct Term {
  Scalar coeff;
  Path path;
};

/// A linear combination of parallel paths of length >= 2, read as "= 0".
struct Relation {
  std::vector<Term> terms;
};

/// Checks admissible shape: nonempty, parallel, every path of length >= 2.
void validate_relation(const Quiver& q, const Relation& r);

}  // namespace taured
