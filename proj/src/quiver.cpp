#include "taured/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "taured/error.hpp"

namespace taured {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::InvalidQuiver: return "InvalidQuiver";
    case ErrorKind::InvalidRelation: return "InvalidRelation";
    case ErrorKind::UnsupportedQuotient: return "UnsupportedQuotient";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::QuotientMismatch: return "QuotientMismatch";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotStringAlgebra: return "NotStringAlgebra";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IncompleteInventory: return "IncompleteInventory";
    case ErrorKind::NoProjInjective: return "NoProjInjective";
    case ErrorKind::NotProjInjective: return "NotProjInjective";
    case ErrorKind::NonSimpleSocle: return "NonSimpleSocle";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  for (const auto& v : vertices) add_vertex(v);
  for (const auto& a : arrows) add_arrow(a.name, a.source, a.target);
}

std::size_t Quiver::add_vertex(const std::string& label) {
  if (label.empty()) throw Error(ErrorKind::InvalidQuiver, "empty vertex label");
  if (vertex_lookup_.count(label)) throw Error(ErrorKind::InvalidQuiver, "duplicate vertex " + label);
  vertex_lookup_[label] = vertices_.size();
  vertices_.push_back(label);
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, std::size_t source, std::size_t target) {
  if (name.empty()) throw Error(ErrorKind::InvalidQuiver, "empty arrow name");
  if (arrow_lookup_.count(name)) throw Error(ErrorKind::InvalidQuiver, "duplicate arrow " + name);
  if (source >= vertices_.size() || target >= vertices_.size())
    throw Error(ErrorKind::UnknownVertex, "arrow " + name + " has an undeclared endpoint");
  arrow_lookup_[name] = arrows_.size();
  arrows_.push_back({name, source, target});
  reindex_names();
  return arrows_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, const std::string& source,
                              const std::string& target) {
  return add_arrow(name, vertex_index(source), vertex_index(target));
}

void Quiver::reindex_names() {
  std::vector<std::size_t> order(arrows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return arrows_[a].name < arrows_[b].name; });
  name_rank_.assign(arrows_.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) name_rank_[order[i]] = i;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  auto it = vertex_lookup_.find(label);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_lookup_.find(name);
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex " + label);
  return *v;
}

Path trivial_path(std::size_t vertex) { return Path{vertex, {}}; }

Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows) {
  if (arrows.empty()) throw Error(ErrorKind::InvalidRelation, "make_path needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw Error(ErrorKind::InvalidRelation, "arrows " + q.arrow(arrows[i]).name + " and " +
                                                  q.arrow(arrows[i + 1]).name + " do not compose");
  return Path{q.arrow(arrows.front()).source, arrows};
}

std::optional<Path> concatenate(const Quiver& q, const Path& lhs, const Path& rhs) {
  if (lhs.end(q) != rhs.start) return std::nullopt;
  Path p = lhs;
  p.arrows.insert(p.arrows.end(), rhs.arrows.begin(), rhs.arrows.end());
  return p;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e" + q.vertex_label(p.start);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ' ';
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

bool path_less(const Quiver& q, const Path& lhs, const Path& rhs) {
  if (lhs.length() != rhs.length()) return lhs.length() < rhs.length();
  const auto& rank = q.arrow_name_rank();
  for (std::size_t i = 0; i < lhs.length(); ++i)
    if (lhs.arrows[i] != rhs.arrows[i]) return rank[lhs.arrows[i]] < rank[rhs.arrows[i]];
  return lhs.start < rhs.start;
}

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw Error(ErrorKind::InvalidRelation, "empty relation");
  const Path& first = r.terms.front().path;
  for (const auto& t : r.terms) {
    if (t.path.length() < 2)
      throw Error(ErrorKind::InvalidRelation,
                  "relation path " + path_to_string(q, t.path) + " has length < 2");
    if (t.path.start != first.start || t.path.end(q) != first.end(q))
      throw Error(ErrorKind::InvalidRelation, "relation paths are not parallel");
  }
}

}  // namespace taured
