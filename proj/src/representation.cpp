#include "taured/representation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "taured/error.hpp"

namespace taured {

namespace {

void require_same_algebra(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra())
    throw Error(ErrorKind::AlgebraMismatch, "representations live over different algebras");
}

// Position of each basis index inside its slice e_i A e_j.
std::vector<std::size_t> slice_positions(const Algebra& a) {
  std::vector<std::size_t> pos(a.dim(), 0);
  for (std::size_t i = 0; i < a.num_vertices(); ++i)
    for (std::size_t j = 0; j < a.num_vertices(); ++j) {
      const auto& s = a.slice(i, j);
      for (std::size_t k = 0; k < s.size(); ++k) pos[s[k]] = k;
    }
  return pos;
}

Element arrow_element(const Algebra& a, std::size_t arrow) {
  return a.path_element(make_path(a.quiver(), {arrow}));
}

Matrix stack_all(const std::vector<Matrix>& parts, std::size_t cols, Field field) {
  Matrix out(0, cols, field);
  for (const auto& p : parts) out = out.stacked(p);
  return out;
}

// Reduces v modulo the reduced echelon rows of `e` and returns the
// coordinates at the non-pivot columns `free_cols`.
std::vector<Scalar> project_to_complement(const Echelon& e, std::vector<Scalar> v,
                                          const std::vector<std::size_t>& free_cols) {
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const Scalar f = v[e.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!e.basis(i, k).is_zero()) v[k] -= f * e.basis(i, k);
  }
  std::vector<Scalar> out;
  out.reserve(free_cols.size());
  for (auto c : free_cols) out.push_back(v[c]);
  return out;
}

std::vector<std::size_t> free_columns(const Echelon& e, std::size_t cols) {
  std::vector<bool> pivot(cols, false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols; ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

bool invertible_everywhere(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<long>& coeffs, Field field) {
  Morphism f = basis.front();
  for (auto& b : f.blocks) b = Matrix(b.rows(), b.cols(), field);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const Scalar c = field.from_int(coeffs[k]);
    for (std::size_t w = 0; w < f.blocks.size(); ++w) f.blocks[w] += c * basis[k].blocks[w];
  }
  return f;
}

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const Quiver& q = algebra_->quiver();
  if (dims_.size() != q.num_vertices())
    throw Error(ErrorKind::InvalidRepresentation, "dimension vector has wrong length");
  if (maps_.size() != q.num_arrows())
    throw Error(ErrorKind::InvalidRepresentation, "wrong number of arrow maps");
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.source] || maps_[a].cols() != dims_[ar.target])
      throw Error(ErrorKind::InvalidRepresentation, "map of arrow " + ar.name + " has wrong shape");
    if (!(maps_[a].field() == algebra_->field()))
      throw Error(ErrorKind::InvalidRepresentation, "map of arrow " + ar.name + " has wrong field");
  }
  for (const auto& r : algebra_->relations()) {
    const Path& p0 = r.terms.front().path;
    Matrix sum(dims_[p0.start], dims_[p0.end(q)], algebra_->field());
    for (const auto& t : r.terms) sum += t.coeff * path_action(t.path);
    if (!sum.is_zero())
      throw Error(ErrorKind::InvalidRepresentation,
                  "relation starting with " + path_to_string(q, p0) + " does not vanish");
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<Matrix> maps(q.num_arrows(), Matrix(0, 0, algebra->field()));
  return Representation(algebra, std::vector<std::size_t>(q.num_vertices(), 0), std::move(maps));
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Representation::path_action(const Path& p) const {
  Matrix m = Matrix::identity(dims_.at(p.start), algebra_->field());
  for (auto a : p.arrows) m = m * maps_.at(a);
  return m;
}

Matrix Representation::act(const Element& x, std::size_t from, std::size_t to) const {
  Matrix out(dims_.at(from), dims_.at(to), algebra_->field());
  for (auto idx : algebra_->slice(from, to))
    if (!x[idx].is_zero()) out += x[idx] * path_action(algebra_->basis()[idx]);
  return out;
}

bool operator==(const Representation& lhs, const Representation& rhs) {
  return lhs.algebra_ == rhs.algebra_ && lhs.dims_ == rhs.dims_ && lhs.maps_ == rhs.maps_;
}

bool is_morphism(const Representation& m, const Representation& n, const Morphism& f) {
  const Quiver& q = m.algebra()->quiver();
  if (f.blocks.size() != q.num_vertices()) return false;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (f.blocks[v].rows() != m.dim(v) || f.blocks[v].cols() != n.dim(v)) return false;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(m.map(a) * f.blocks[ar.target] == f.blocks[ar.source] * n.map(a))) return false;
  }
  return true;
}

Representation simple(const AlgebraPtr& a, std::size_t v) {
  const Quiver& q = a->quiver();
  if (v >= q.num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v));
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.source], dims[ar.target], a->field());
  return Representation(a, dims, std::move(maps));
}

Representation projective(const AlgebraPtr& a, std::size_t v) {
  const Quiver& q = a->quiver();
  if (v >= q.num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v));
  const auto pos = slice_positions(*a);
  std::vector<std::size_t> dims(q.num_vertices());
  for (std::size_t w = 0; w < q.num_vertices(); ++w) dims[w] = a->slice(v, w).size();
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    Matrix m(dims[arrow.source], dims[arrow.target], a->field());
    const Element x = arrow_element(*a, ar);
    const auto& src = a->slice(v, arrow.source);
    for (std::size_t r = 0; r < src.size(); ++r) {
      const Element prod = a->multiply(a->basis_element(src[r]), x);
      for (auto idx : a->slice(v, arrow.target)) m(r, pos[idx]) = prod[idx];
    }
    maps.push_back(std::move(m));
  }
  return Representation(a, dims, std::move(maps));
}

Representation injective(const AlgebraPtr& a, std::size_t v) {
  const Quiver& q = a->quiver();
  if (v >= q.num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v));
  const auto pos = slice_positions(*a);
  std::vector<std::size_t> dims(q.num_vertices());
  for (std::size_t w = 0; w < q.num_vertices(); ++w) dims[w] = a->slice(w, v).size();
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    Matrix m(dims[arrow.source], dims[arrow.target], a->field());
    const Element x = arrow_element(*a, ar);
    // (p* . a)(q) = p*(a q)
    const auto& tgt = a->slice(arrow.target, v);
    for (std::size_t c = 0; c < tgt.size(); ++c) {
      const Element prod = a->multiply(x, a->basis_element(tgt[c]));
      for (auto idx : a->slice(arrow.source, v)) m(pos[idx], c) = prod[idx];
    }
    maps.push_back(std::move(m));
  }
  return Representation(a, dims, std::move(maps));
}

Representation regular_module(const AlgebraPtr& a) {
  std::vector<Representation> parts;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) parts.push_back(projective(a, v));
  return direct_sum(a, parts);
}

Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  for (const auto& p : parts) {
    if (p.algebra() != a) throw Error(ErrorKind::AlgebraMismatch, "direct_sum over mixed algebras");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    Matrix m(dims[arrow.source], dims[arrow.target], a->field());
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      const Matrix& b = p.map(ar);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
      r0 += b.rows();
      c0 += b.cols();
    }
    maps.push_back(std::move(m));
  }
  return Representation(a, dims, std::move(maps));
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  const Field field = a->field();
  const std::size_t nv = q.num_vertices();

  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dim(v) * n.dim(v);
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return offset[v] + i * n.dim(v) + j; };

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    const std::size_t s = arrow.source, t = arrow.target;
    const Matrix& ma = m.map(ar);
    const Matrix& na = n.map(ar);
    // (M_a f_t - f_s N_a)(i, j) == 0
    for (std::size_t i = 0; i < m.dim(s); ++i)
      for (std::size_t j = 0; j < n.dim(t); ++j) {
        std::vector<Scalar> row(unknowns, field.zero());
        bool any = false;
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (!ma(i, k).is_zero()) {
            row[var(t, k, j)] += ma(i, k);
            any = true;
          }
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (!na(k, j).is_zero()) {
            row[var(s, i, k)] -= na(k, j);
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
  }
  const Matrix kernel = nullspace(Matrix::from_rows(rows, unknowns, field));
  std::vector<Morphism> out;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Morphism f;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix b(m.dim(v), n.dim(v), field);
      for (std::size_t i = 0; i < m.dim(v); ++i)
        for (std::size_t j = 0; j < n.dim(v); ++j) b(i, j) = kernel(r, var(v, i, j));
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  return hom_basis(m, n).size();
}

std::optional<Morphism> find_isomorphism(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return std::nullopt;
  const Field field = m.algebra()->field();
  if (m.is_zero()) {
    Morphism f;
    for (std::size_t v = 0; v < m.dims().size(); ++v) f.blocks.emplace_back(0, 0, field);
    return f;
  }
  const auto basis = hom_basis(m, n);
  if (basis.empty()) return std::nullopt;
  const std::size_t h = basis.size();

  auto accept = [&](const Morphism& f) { return invertible_everywhere(f) && is_morphism(m, n, f); };

  for (const auto& f : basis)
    if (accept(f)) return f;

  std::mt19937 rng(0x7a75u);
  for (int s = 0; s < 16; ++s) {
    const long range = 1 + 2L * s;
    std::uniform_int_distribution<long> coeff(-range, range);
    std::vector<long> c(h);
    for (auto& x : c) x = coeff(rng);
    if (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; })) continue;
    Morphism f = combine(basis, c, field);
    if (accept(f)) return f;
  }

  // exhaustive grid over {-1, 0, 1, 2}^h at desk scale
  const std::vector<long> values{-1, 0, 1, 2};
  if (h <= 6) {
    std::vector<std::size_t> digit(h, 0);
    while (true) {
      std::vector<long> c(h);
      for (std::size_t k = 0; k < h; ++k) c[k] = values[digit[k]];
      if (!std::all_of(c.begin(), c.end(), [](long x) { return x == 0; })) {
        Morphism f = combine(basis, c, field);
        if (accept(f)) return f;
      }
      std::size_t k = 0;
      while (k < h && ++digit[k] == values.size()) digit[k++] = 0;
      if (k == h) break;
    }
  }
  return std::nullopt;
}

bool is_iso(const Representation& m, const Representation& n) {
  return find_isomorphism(m, n).has_value();
}

Representation submodule(const Representation& m, const std::vector<Matrix>& bases) {
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  std::vector<Echelon> ech;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (bases.at(v).cols() != m.dim(v) && bases.at(v).rows() != 0)
      throw Error(ErrorKind::InvalidRepresentation, "submodule basis has wrong width");
    Matrix b = bases[v].rows() == 0 ? Matrix(0, m.dim(v), a->field()) : bases[v];
    ech.push_back(echelon(b));
    dims.push_back(ech.back().rank());
  }
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    const Echelon& src = ech[arrow.source];
    const Echelon& tgt = ech[arrow.target];
    Matrix out(dims[arrow.source], dims[arrow.target], a->field());
    for (std::size_t r = 0; r < src.rank(); ++r) {
      const auto img = row_times(src.basis.row(r), m.map(ar));
      std::vector<Scalar> check(img.size(), a->field().zero());
      for (std::size_t k = 0; k < tgt.rank(); ++k) {
        out(r, k) = img[tgt.pivots[k]];
        if (out(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < img.size(); ++c) check[c] += out(r, k) * tgt.basis(k, c);
      }
      if (check != img)
        throw Error(ErrorKind::InvalidRepresentation, "subspace is not closed under " + arrow.name);
    }
    maps.push_back(std::move(out));
  }
  return Representation(a, dims, std::move(maps));
}

Representation quotient_module(const Representation& m, const std::vector<Matrix>& bases) {
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  std::vector<Echelon> ech;
  std::vector<std::vector<std::size_t>> free;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Matrix b = bases.at(v).rows() == 0 ? Matrix(0, m.dim(v), a->field()) : bases[v];
    ech.push_back(echelon(b));
    free.push_back(free_columns(ech.back(), m.dim(v)));
    dims.push_back(free.back().size());
  }
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arrow = q.arrow(ar);
    Matrix out(dims[arrow.source], dims[arrow.target], a->field());
    for (std::size_t r = 0; r < free[arrow.source].size(); ++r) {
      const auto img = project_to_complement(
          ech[arrow.target], m.map(ar).row(free[arrow.source][r]), free[arrow.target]);
      out.set_row(r, img);
    }
    maps.push_back(std::move(out));
  }
  return Representation(a, dims, std::move(maps));
}

std::vector<Matrix> radical_subspaces(const Representation& m) {
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  std::vector<std::vector<Matrix>> parts(q.num_vertices());
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) parts[q.arrow(ar).target].push_back(m.map(ar));
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    out.push_back(echelon(stack_all(parts[v], m.dim(v), a->field())).basis);
  return out;
}

std::vector<std::vector<std::size_t>> radical_layers(const Representation& m) {
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<Matrix> current;
  for (std::size_t v = 0; v < nv; ++v) current.push_back(Matrix::identity(m.dim(v), a->field()));
  std::vector<std::vector<std::size_t>> layers;
  while (true) {
    std::size_t remaining = 0;
    for (const auto& c : current) remaining += c.rows();
    if (remaining == 0) break;
    std::vector<std::vector<Matrix>> parts(nv);
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
      const Arrow& arrow = q.arrow(ar);
      if (current[arrow.source].rows() > 0)
        parts[arrow.target].push_back(current[arrow.source] * m.map(ar));
    }
    std::vector<Matrix> next;
    std::vector<std::size_t> layer(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      next.push_back(echelon(stack_all(parts[v], m.dim(v), a->field())).basis);
      layer[v] = current[v].rows() - next[v].rows();
    }
    layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return layers;
}

PresentationMap minimal_presentation(const Representation& m) {
  if (m.is_zero()) throw Error(ErrorKind::ZeroModule, "zero module has no presentation");
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  const Field field = a->field();
  const std::size_t nv = q.num_vertices();

  // top lifts: unit vectors at the non-pivot columns of rad M
  struct Lift {
    std::size_t vertex;
    std::vector<Scalar> vec;
  };
  std::vector<Lift> lifts;
  const auto rad = radical_subspaces(m);
  for (std::size_t v = 0; v < nv; ++v) {
    const Echelon e{rad[v], echelon(rad[v]).pivots};
    for (auto c : free_columns(e, m.dim(v))) {
      std::vector<Scalar> unit(m.dim(v), field.zero());
      unit[c] = field.one();
      lifts.push_back({v, std::move(unit)});
    }
  }

  PresentationMap pres;
  std::vector<Representation> cover_parts;
  for (const auto& l : lifts) {
    pres.p0.push_back(l.vertex);
    cover_parts.push_back(projective(a, l.vertex));
  }
  const Representation cover = direct_sum(a, cover_parts);

  std::vector<Matrix> kernel(nv);
  for (std::size_t t = 0; t < nv; ++t) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& l : lifts)
      for (auto idx : a->slice(l.vertex, t))
        rows.push_back(row_times(l.vec, m.path_action(a->basis()[idx])));
    kernel[t] = echelon(left_nullspace(Matrix::from_rows(rows, m.dim(t), field))).basis;
    if (kernel[t].rows() == 0) kernel[t] = Matrix(0, cover.dim(t), field);
  }
  const Representation k = submodule(cover, kernel);
  const auto krad = radical_subspaces(k);

  for (std::size_t t = 0; t < nv; ++t) {
    const Echelon e{krad[t], echelon(krad[t]).pivots};
    for (auto c : free_columns(e, k.dim(t))) {
      // the c-th basis vector of K_t, in cover coordinates
      const auto vec = kernel[t].row(c);
      std::vector<Element> column;
      std::size_t off = 0;
      for (const auto& l : lifts) {
        Element u = a->zero_element();
        for (auto idx : a->slice(l.vertex, t)) u[idx] = vec[off++];
        column.push_back(std::move(u));
      }
      pres.p1.push_back(t);
      pres.entries.push_back(std::move(column));
    }
  }
  if (!entries_in_radical(*a, pres))
    throw Error(ErrorKind::InvalidRepresentation, "presentation is not minimal");
  return pres;
}

bool entries_in_radical(const Algebra& a, const PresentationMap& p) {
  for (const auto& column : p.entries)
    for (const auto& u : column)
      for (std::size_t v = 0; v < a.num_vertices(); ++v)
        if (!u[a.trivial_index(v)].is_zero()) return false;
  return true;
}

std::vector<Matrix> nakayama_map(const AlgebraPtr& a, const PresentationMap& p) {
  const std::size_t nv = a->num_vertices();
  const auto pos = slice_positions(*a);
  std::vector<Matrix> out;
  for (std::size_t w = 0; w < nv; ++w) {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> row_off, col_off;
    for (auto t : p.p1) {
      row_off.push_back(rows);
      rows += a->slice(w, t).size();
    }
    for (auto s : p.p0) {
      col_off.push_back(cols);
      cols += a->slice(w, s).size();
    }
    Matrix phi(rows, cols, a->field());
    for (std::size_t j = 0; j < p.p1.size(); ++j)
      for (std::size_t i = 0; i < p.p0.size(); ++i) {
        const Element& u = p.entries[j][i];
        // (nu f)(p*)(q) = p*(q u)
        for (auto qi : a->slice(w, p.p0[i])) {
          const Element prod = a->multiply(a->basis_element(qi), u);
          for (auto pi : a->slice(w, p.p1[j]))
            phi(row_off[j] + pos[pi], col_off[i] + pos[qi]) = prod[pi];
        }
      }
    out.push_back(std::move(phi));
  }
  return out;
}

Representation tau(const Representation& m) {
  const AlgebraPtr& a = m.algebra();
  if (m.is_zero()) return Representation::zero(a);
  const PresentationMap pres = minimal_presentation(m);
  if (pres.p1.empty()) return Representation::zero(a);
  std::vector<Representation> parts;
  for (auto t : pres.p1) parts.push_back(injective(a, t));
  const Representation nu1 = direct_sum(a, parts);
  const auto phi = nakayama_map(a, pres);
  std::vector<Matrix> kernel;
  for (std::size_t w = 0; w < a->num_vertices(); ++w) {
    Matrix k = left_nullspace(phi[w]);
    kernel.push_back(k.rows() == 0 ? Matrix(0, nu1.dim(w), a->field()) : k);
  }
  return submodule(nu1, kernel);
}

std::vector<Matrix> trace_subspaces(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const Field field = m.algebra()->field();
  const auto homs = hom_basis(m, n);
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < n.dims().size(); ++v) {
    Matrix images(0, n.dim(v), field);
    for (const auto& f : homs) images = images.stacked(f.blocks[v]);
    out.push_back(images.rows() == 0 ? images : echelon(images).basis);
  }
  return out;
}

bool in_fac(const Representation& n, const Representation& m) {
  require_same_algebra(m, n);
  if (n.is_zero()) return true;
  const auto traces = trace_subspaces(m, n);
  for (std::size_t v = 0; v < n.dims().size(); ++v)
    if (traces[v].rows() != n.dim(v)) return false;
  return true;
}

bool is_sincere(const Representation& m) {
  return std::all_of(m.dims().begin(), m.dims().end(), [](std::size_t d) { return d > 0; });
}

bool looks_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  const Field field = m.algebra()->field();
  const std::size_t n = m.total_dim();
  for (const auto& f : hom_basis(m, m)) {
    Scalar trace = field.zero();
    for (const auto& b : f.blocks)
      for (std::size_t i = 0; i < b.rows(); ++i) trace += b(i, i);
    const Scalar lambda = trace / field.from_int(static_cast<long>(n));
    for (const auto& b : f.blocks) {
      if (b.rows() == 0) continue;
      Matrix shifted = b - lambda * Matrix::identity(b.rows(), field);
      Matrix power = shifted;
      for (std::size_t k = 1; k < b.rows(); ++k) power = power * shifted;
      if (!power.is_zero()) return false;
    }
  }
  return true;
}

Representation bar(const Representation& m, const AlgebraQuotient& q) {
  if (m.algebra() != q.source)
    throw Error(ErrorKind::QuotientMismatch, "module is not over the quotient's source algebra");
  const AlgebraPtr& a = q.source;
  const Quiver& quiver = a->quiver();
  const std::size_t nv = quiver.num_vertices();
  std::vector<std::vector<Matrix>> parts(nv);
  for (std::size_t r = 0; r < q.ideal_basis.rows(); ++r) {
    const Element x = q.ideal_basis.row(r);
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t w = 0; w < nv; ++w)
        if (m.dim(i) > 0 && m.dim(w) > 0 && !a->slice(i, w).empty()) parts[w].push_back(m.act(x, i, w));
  }
  std::vector<Matrix> sub;
  for (std::size_t w = 0; w < nv; ++w) sub.push_back(stack_all(parts[w], m.dim(w), a->field()));
  const Representation quotient = quotient_module(m, sub);

  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!q.vertex_map[v] && quotient.dim(v) != 0)
      throw Error(ErrorKind::QuotientMismatch, "quotient module is nonzero at a deleted vertex");
    if (q.vertex_map[v]) dims.push_back(quotient.dim(v));
  }
  std::vector<Matrix> maps;
  for (auto ar : q.surviving_arrows) maps.push_back(quotient.map(ar));
  return Representation(q.target, dims, std::move(maps));
}

Representation inflate(const Representation& m, const AlgebraQuotient& q) {
  if (m.algebra() != q.target)
    throw Error(ErrorKind::QuotientMismatch, "module is not over the quotient algebra");
  const Quiver& quiver = q.source->quiver();
  std::vector<std::size_t> dims(quiver.num_vertices(), 0);
  for (std::size_t v = 0; v < dims.size(); ++v)
    if (q.vertex_map[v]) dims[v] = m.dim(*q.vertex_map[v]);
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < quiver.num_arrows(); ++ar) {
    const Arrow& arrow = quiver.arrow(ar);
    if (q.arrow_map[ar])
      maps.push_back(m.map(*q.arrow_map[ar]));
    else
      maps.emplace_back(dims[arrow.source], dims[arrow.target], q.source->field());
  }
  return Representation(q.source, dims, std::move(maps));
}

Matrix coxeter_matrix(const Algebra& a) {
  const std::size_t n = a.num_vertices();
  const Field f = a.field();
  Matrix c(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = f.from_int(static_cast<long>(a.slice(i, j).size()));
  Matrix c_inv(n, n, f);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> unit(n, f.zero());
    unit[k] = f.one();
    auto col = solve(c, unit);
    if (!col) throw Error(ErrorKind::NotFiniteDimensional, "Cartan matrix is singular");
    for (std::size_t i = 0; i < n; ++i) c_inv(i, k) = (*col)[i];
  }
  return f.from_int(-1) * (c_inv * c.transpose());
}

}  // namespace taured
