#include "taured/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "taured/error.hpp"

namespace taured {

namespace {

constexpr std::size_t kMaxPathCount = 200000;

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// In-span test against a reduced echelon form: reduce and check for zero.
bool in_span(const Echelon& e, std::vector<Scalar> v) {
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const Scalar f = v[e.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!e.basis(i, k).is_zero()) v[k] -= f * e.basis(i, k);
  }
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Relation coerce(const Relation& r, Field field) {
  Relation out;
  for (const auto& t : r.terms) out.terms.push_back({field.from_rational(t.coeff.to_rational()), t.path});
  return out;
}

}  // namespace

const std::vector<std::size_t>& Algebra::slice(std::size_t i, std::size_t j) const {
  return slices_.at(i * num_vertices() + j);
}

std::optional<std::size_t> Algebra::basis_index(const Path& p) const {
  auto it = basis_lookup_.find(p);
  if (it == basis_lookup_.end()) return std::nullopt;
  return it->second;
}

Element Algebra::path_element(const Path& p) const {
  Element x = zero_element();
  if (p.length() > bound_) return x;
  auto it = normal_forms_.find(p);
  if (it == normal_forms_.end())
    throw Error(ErrorKind::InvalidRelation, "not a path of the quiver: " + path_to_string(quiver_, p));
  for (const auto& [idx, c] : it->second) x[idx] += c;
  return x;
}

Element Algebra::basis_element(std::size_t i) const {
  Element x = zero_element();
  x.at(i) = field_.one();
  return x;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  Element out = zero_element();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (const auto& [k, v] : basis_product(i, j)) out[k] += c * v;
    }
  }
  return out;
}

bool Algebra::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Relation& r) { return r.terms.size() == 1; });
}

std::string Algebra::element_to_string(const Element& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!x[i].is_one()) os << x[i] << "*";
    os << "(" << path_to_string(quiver_, basis_[i]) << ")";
  }
  if (first) os << "0";
  return os.str();
}

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations,
                         std::size_t max_len, Field field) {
  std::vector<Relation> rels;
  for (const auto& r : relations) {
    validate_relation(q, r);
    rels.push_back(coerce(r, field));
  }

  std::vector<std::vector<Path>> by_len{{}};
  for (std::size_t v = 0; v < q.num_vertices(); ++v) by_len[0].push_back(trivial_path(v));
  std::size_t total = by_len[0].size();

  for (std::size_t bound = 1; bound <= max_len; ++bound) {
    // extend the path inventory to length `bound`
    std::vector<Path> next;
    for (const auto& p : by_len.back())
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(a).source == p.end(q)) {
          Path e = p;
          if (e.trivial()) e.start = q.arrow(a).source;
          e.arrows.push_back(a);
          next.push_back(std::move(e));
        }
    total += next.size();
    if (total > kMaxPathCount)
      throw Error(ErrorKind::NotFiniteDimensional, "path space exceeds " + std::to_string(kMaxPathCount));
    by_len.push_back(std::move(next));

    // columns: all paths of length <= bound, largest first
    std::vector<Path> cols;
    for (const auto& level : by_len) cols.insert(cols.end(), level.begin(), level.end());
    std::sort(cols.begin(), cols.end(),
              [&](const Path& x, const Path& y) { return path_less(q, y, x); });
    std::map<Path, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    std::vector<std::vector<Scalar>> gens;
    for (const auto& r : rels) {
      std::size_t min_len = bound + 1;
      for (const auto& t : r.terms) min_len = std::min(min_len, t.path.length());
      if (min_len > bound) continue;
      const std::size_t rs = r.terms.front().path.start, re = r.terms.front().path.end(q);
      for (std::size_t la = 0; la + min_len <= bound; ++la)
        for (const auto& left : by_len[la]) {
          if (left.end(q) != rs) continue;
          for (std::size_t lb = 0; la + min_len + lb <= bound; ++lb)
            for (const auto& right : by_len[lb]) {
              if (right.start != re) continue;
              std::vector<Scalar> row(cols.size(), field.zero());
              bool nonzero = false;
              for (const auto& t : r.terms) {
                auto mid = concatenate(q, left, t.path);
                auto full = concatenate(q, *mid, right);
                if (full->length() > bound) continue;
                row[col_of.at(*full)] += t.coeff;
                nonzero = true;
              }
              if (nonzero) gens.push_back(std::move(row));
            }
        }
    }
    const Echelon ideal = echelon(Matrix::from_rows(gens, cols.size(), field));

    bool top_killed = true;
    for (const auto& p : by_len[bound]) {
      std::vector<Scalar> unit(cols.size(), field.zero());
      unit[col_of.at(p)] = field.one();
      if (!in_span(ideal, std::move(unit))) {
        top_killed = false;
        break;
      }
    }
    if (!top_killed) continue;

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->quiver_ = q;
    alg->relations_ = rels;
    alg->field_ = field;
    alg->bound_ = bound;

    std::vector<bool> is_pivot(cols.size(), false);
    std::vector<std::size_t> pivot_row(cols.size(), 0);
    for (std::size_t i = 0; i < ideal.rank(); ++i) {
      is_pivot[ideal.pivots[i]] = true;
      pivot_row[ideal.pivots[i]] = i;
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!is_pivot[c]) alg->basis_.push_back(cols[c]);
    std::sort(alg->basis_.begin(), alg->basis_.end(),
              [&](const Path& x, const Path& y) { return path_less(q, x, y); });
    for (std::size_t i = 0; i < alg->basis_.size(); ++i) alg->basis_lookup_[alg->basis_[i]] = i;

    for (std::size_t c = 0; c < cols.size(); ++c) {
      SparseVec nf;
      if (!is_pivot[c]) {
        nf.emplace_back(alg->basis_lookup_.at(cols[c]), field.one());
      } else {
        const std::size_t row = pivot_row[c];
        for (std::size_t k = 0; k < cols.size(); ++k)
          if (k != c && !ideal.basis(row, k).is_zero())
            nf.emplace_back(alg->basis_lookup_.at(cols[k]), -ideal.basis(row, k));
      }
      alg->normal_forms_[cols[c]] = std::move(nf);
    }

    const std::size_t n = q.num_vertices();
    alg->trivial_index_.resize(n);
    for (std::size_t v = 0; v < n; ++v) alg->trivial_index_[v] = alg->basis_lookup_.at(trivial_path(v));
    alg->slices_.assign(n * n, {});
    for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
      const Path& p = alg->basis_[i];
      alg->slices_[p.start * n + p.end(q)].push_back(i);
    }

    const std::size_t d = alg->basis_.size();
    alg->table_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto prod = concatenate(q, alg->basis_[i], alg->basis_[j]);
        if (!prod || prod->length() > bound) continue;
        alg->table_[i * d + j] = alg->normal_forms_.at(*prod);
      }
    return alg;
  }
  throw Error(ErrorKind::NotFiniteDimensional,
              "no power of the arrow ideal up to length " + std::to_string(max_len) +
                  " lies in the relation ideal");
}

AlgebraQuotient quotient_by_elements(const AlgebraPtr& a, const std::vector<Element>& gens) {
  const Field field = a->field();
  const std::size_t d = a->dim();
  const Quiver& q = a->quiver();

  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    if (g.size() != d) throw Error(ErrorKind::AlgebraMismatch, "generator has wrong length");
    for (std::size_t i = 0; i < d; ++i) {
      const Element left = a->multiply(a->basis_element(i), g);
      for (std::size_t j = 0; j < d; ++j) rows.push_back(a->multiply(left, a->basis_element(j)));
    }
  }
  Echelon ideal = echelon(Matrix::from_rows(rows, d, field));

  // rad^2 + ideal, for the admissibility check on arrows
  std::vector<std::vector<Scalar>> rad2_rows;
  for (std::size_t i = 0; i < ideal.rank(); ++i) rad2_rows.push_back(ideal.basis.row(i));
  for (std::size_t i = 0; i < d; ++i)
    if (a->basis()[i].length() >= 2) rad2_rows.push_back(a->basis_element(i));
  const Echelon rad2 = echelon(Matrix::from_rows(rad2_rows, d, field));

  AlgebraQuotient out;
  out.source = a;
  out.vertex_map.assign(q.num_vertices(), std::nullopt);
  out.arrow_map.assign(q.num_arrows(), std::nullopt);

  Quiver target_quiver;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (in_span(ideal, a->basis_element(a->trivial_index(v)))) continue;
    out.vertex_map[v] = target_quiver.add_vertex(q.vertex_label(v));
    out.surviving_vertices.push_back(v);
  }
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    if (!out.vertex_map[arrow.source] || !out.vertex_map[arrow.target]) continue;
    const Element x = a->path_element(make_path(q, {ar}));
    if (in_span(ideal, x)) continue;
    if (in_span(rad2, x))
      throw Error(ErrorKind::UnsupportedQuotient,
                  "arrow " + arrow.name + " becomes a combination of longer paths");
    out.arrow_map[ar] = target_quiver.add_arrow(arrow.name, *out.vertex_map[arrow.source],
                                                *out.vertex_map[arrow.target]);
    out.surviving_arrows.push_back(ar);
  }

  auto translate = [&](const Path& p) -> std::optional<Path> {
    if (!out.vertex_map[p.start]) return std::nullopt;
    Path t{*out.vertex_map[p.start], {}};
    for (auto ar : p.arrows) {
      if (!out.arrow_map[ar]) return std::nullopt;
      t.arrows.push_back(*out.arrow_map[ar]);
    }
    return t;
  };

  std::vector<Relation> target_relations;
  auto add_relation = [&](const std::vector<Term>& terms) {
    Relation r;
    for (const auto& t : terms) {
      if (t.coeff.is_zero()) continue;
      if (auto p = translate(t.path)) r.terms.push_back({t.coeff, *p});
    }
    if (r.terms.empty()) return;
    for (const auto& t : r.terms)
      if (t.path.length() < 2)
        throw Error(ErrorKind::UnsupportedQuotient,
                    "generator component has a term of length < 2 that is not killed");
    target_relations.push_back(std::move(r));
  };
  for (const auto& r : a->relations()) add_relation(r.terms);
  for (const auto& g : gens)
    for (auto i : out.surviving_vertices)
      for (auto j : out.surviving_vertices) {
        std::vector<Term> terms;
        for (auto idx : a->slice(i, j))
          if (!g[idx].is_zero()) terms.push_back({g[idx], a->basis()[idx]});
        add_relation(terms);
      }

  out.target = build_algebra(target_quiver, target_relations, kDefaultMaxLength, field);

  out.projection = Matrix(d, out.target->dim(), field);
  for (std::size_t i = 0; i < d; ++i)
    if (auto p = translate(a->basis()[i])) out.projection.set_row(i, out.target->path_element(*p));
  out.ideal_basis = ideal.basis;

  if (out.target->dim() + ideal.rank() != d || !(ideal.basis * out.projection).is_zero() ||
      rank(out.projection) != out.target->dim())
    throw Error(ErrorKind::UnsupportedQuotient, "quotient presentation does not match the ideal");
  return out;
}

AlgebraQuotient vertex_subalgebra_quotient(const AlgebraPtr& a,
                                           const std::vector<std::size_t>& support) {
  if (support.empty()) throw Error(ErrorKind::EmptySupport, "support must be nonempty");
  std::vector<bool> keep(a->num_vertices(), false);
  for (auto v : support) {
    if (v >= a->num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
    keep[v] = true;
  }
  std::vector<Element> gens;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (!keep[v]) gens.push_back(a->basis_element(a->trivial_index(v)));
  return quotient_by_elements(a, gens);
}

bool check_associativity(const Algebra& a, std::size_t full_check_dim, std::size_t samples) {
  const std::size_t d = a.dim();
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Element x = a.basis_element(i), y = a.basis_element(j), z = a.basis_element(k);
    return a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z));
  };
  if (d <= full_check_dim) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!check(i, j, k)) return false;
    return true;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!check(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

}  // namespace taured
