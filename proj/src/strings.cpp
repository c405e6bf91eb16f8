#include "taured/strings.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "taured/error.hpp"

namespace taured {

namespace {

bool path_nonzero(const Algebra& a, const std::vector<std::size_t>& arrows) {
  return a.basis_index(make_path(a.quiver(), arrows)).has_value();
}

// Lexicographic on (name rank, direction) letters, then the start vertex.
bool word_less(const Quiver& q, const StringWord& x, const StringWord& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  const auto& rank = q.arrow_name_rank();
  for (std::size_t i = 0; i < x.length(); ++i) {
    const Letter& l = x.letters[i];
    const Letter& r = y.letters[i];
    if (l.arrow != r.arrow) return rank[l.arrow] < rank[r.arrow];
    if (l.inverse != r.inverse) return !l.inverse;
  }
  return x.start < y.start;
}

std::size_t letter_from(const Quiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}

std::size_t letter_to(const Quiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

}  // namespace

StringAlgebraCheck is_string_algebra(const Algebra& a) {
  const Quiver& q = a.quiver();
  if (!a.is_monomial()) return {false, "relations are not monomial"};
  std::vector<std::size_t> in(q.num_vertices(), 0), out(q.num_vertices(), 0);
  for (const auto& ar : q.arrows()) {
    ++out[ar.source];
    ++in[ar.target];
  }
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (in[v] > 2) return {false, "vertex " + q.vertex_label(v) + " has more than two incoming arrows"};
    if (out[v] > 2) return {false, "vertex " + q.vertex_label(v) + " has more than two outgoing arrows"};
  }
  for (std::size_t b = 0; b < q.num_arrows(); ++b) {
    std::size_t after = 0, before = 0;
    for (std::size_t c = 0; c < q.num_arrows(); ++c) {
      if (q.arrow(b).target == q.arrow(c).source && path_nonzero(a, {b, c})) ++after;
      if (q.arrow(c).target == q.arrow(b).source && path_nonzero(a, {c, b})) ++before;
    }
    if (after > 1) return {false, "arrow " + q.arrow(b).name + " has two nonzero continuations"};
    if (before > 1) return {false, "arrow " + q.arrow(b).name + " has two nonzero predecessors"};
  }
  return {};
}

std::vector<std::size_t> string_vertices(const Quiver& q, const StringWord& w) {
  std::vector<std::size_t> out{w.start};
  for (const auto& l : w.letters) {
    if (letter_from(q, l) != out.back())
      throw Error(ErrorKind::InvalidRelation, "string letters do not compose");
    out.push_back(letter_to(q, l));
  }
  return out;
}

StringWord inverse_word(const Quiver& q, const StringWord& w) {
  StringWord inv;
  inv.start = string_vertices(q, w).back();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) inv.letters.push_back({it->arrow, !it->inverse});
  return inv;
}

StringWord canonical_word(const Quiver& q, const StringWord& w) {
  StringWord inv = inverse_word(q, w);
  return word_less(q, inv, w) ? inv : w;
}

bool is_valid_string(const Algebra& a, const StringWord& w) {
  const Quiver& q = a.quiver();
  if (w.start >= q.num_vertices()) return false;
  std::size_t at = w.start;
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Letter& l = w.letters[i];
    if (l.arrow >= q.num_arrows() || letter_from(q, l) != at) return false;
    if (i > 0 && w.letters[i - 1].arrow == l.arrow && w.letters[i - 1].inverse != l.inverse) return false;
    at = letter_to(q, l);
  }
  // every maximal run of equally oriented letters must be a nonzero path
  for (std::size_t i = 0; i < w.length();) {
    std::size_t j = i;
    while (j < w.length() && w.letters[j].inverse == w.letters[i].inverse) ++j;
    std::vector<std::size_t> run;
    for (std::size_t k = i; k < j; ++k) run.push_back(w.letters[k].arrow);
    if (w.letters[i].inverse) std::reverse(run.begin(), run.end());
    if (!path_nonzero(a, run)) return false;
    i = j;
  }
  return true;
}

std::string word_to_string(const Quiver& q, const StringWord& w) {
  if (w.letters.empty()) return "e" + q.vertex_label(w.start);
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += q.arrow(l.arrow).name;
    if (l.inverse) out += "^-1";
  }
  return out;
}

std::vector<StringWord> enumerate_strings(const Algebra& a, std::size_t cap) {
  const auto check = is_string_algebra(a);
  if (!check.ok) throw Error(ErrorKind::NotStringAlgebra, check.reason);
  if (cap == 0) cap = 2 * a.dim();
  const Quiver& q = a.quiver();

  auto less = [&q](const StringWord& x, const StringWord& y) { return word_less(q, x, y); };
  std::set<StringWord, decltype(less)> found(less);

  std::function<void(StringWord&)> grow = [&](StringWord& w) {
    if (w.length() > cap)
      throw Error(ErrorKind::CapExceeded,
                  "a string of length " + std::to_string(cap + 1) + " exists; the algebra is probably "
                  "representation-infinite");
    found.insert(canonical_word(q, w));
    const std::size_t end = string_vertices(q, w).back();
    for (std::size_t b = 0; b < q.num_arrows(); ++b) {
      for (bool inv : {false, true}) {
        const Letter l{b, inv};
        if (letter_from(q, l) != end) continue;
        w.letters.push_back(l);
        if (is_valid_string(a, w)) grow(w);
        w.letters.pop_back();
      }
    }
  };
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    StringWord w{v, {}};
    grow(w);
  }
  return {found.begin(), found.end()};
}

Representation string_to_rep(const AlgebraPtr& a, const StringWord& w) {
  const Quiver& q = a->quiver();
  if (!is_valid_string(*a, w)) throw Error(ErrorKind::InvalidRepresentation, "not a valid string");
  const auto visits = string_vertices(q, w);
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  std::vector<std::size_t> local;
  for (auto v : visits) local.push_back(dims[v]++);
  const Field field = a->field();
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.source], dims[ar.target], field);
  for (std::size_t k = 0; k < w.length(); ++k) {
    const Letter& l = w.letters[k];
    if (l.inverse)
      maps[l.arrow](local[k + 1], local[k]) = field.one();
    else
      maps[l.arrow](local[k], local[k + 1]) = field.one();
  }
  return Representation(a, dims, std::move(maps));
}

}  // namespace taured
