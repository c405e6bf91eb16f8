#include "taured/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "taured/error.hpp"

namespace taured {

namespace {

std::size_t top_vertex(const Representation& m) {
  const auto layers = radical_layers(m);
  if (layers.empty()) return m.dims().size();
  for (std::size_t v = 0; v < layers.front().size(); ++v)
    if (layers.front()[v] > 0) return v;
  return m.dims().size();
}

std::string dim_vector_name(const std::vector<std::size_t>& d) {
  std::string s = "dv(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

struct Candidate {
  std::string name;
  Representation module;
  std::optional<StringWord> word;
};

std::vector<Candidate> candidates_from(const AlgebraPtr& a, const Backend& backend,
                                       std::vector<std::string>& warnings) {
  std::vector<Candidate> out;
  if (backend.kind == Backend::Kind::Strings) {
    for (const auto& w : enumerate_strings(*a, backend.string_cap)) {
      Representation m = string_to_rep(a, w);
      std::string name = loewy_name(m);
      if (name.empty()) name = "str(" + word_to_string(a->quiver(), w) + ")";
      out.push_back({std::move(name), std::move(m), w});
    }
    return out;
  }
  for (const auto& um : backend.modules) {
    if (um.module.algebra() != a)
      throw Error(ErrorKind::AlgebraMismatch, "user module '" + um.name + "' is over another algebra");
    if (um.module.is_zero()) throw Error(ErrorKind::ZeroModule, "user module '" + um.name + "' is zero");
    if (!looks_indecomposable(um.module))
      warnings.push_back("user module '" + um.name + "' fails the local endomorphism ring audit");
    std::string name = um.name.empty() ? loewy_name(um.module) : um.name;
    out.push_back({std::move(name), um.module, std::nullopt});
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].module.dims() == out[j].module.dims() && is_iso(out[i].module, out[j].module))
        throw Error(ErrorKind::IncompleteInventory,
                    "user modules '" + out[i].name + "' and '" + out[j].name + "' are isomorphic");
  return out;
}

}  // namespace

std::string loewy_name(const Representation& m) {
  const auto layers = radical_layers(m);
  if (layers.empty()) return "";
  const Quiver& q = m.algebra()->quiver();
  std::string out;
  for (const auto& layer : layers) {
    std::size_t total = 0, at = 0;
    for (std::size_t v = 0; v < layer.size(); ++v)
      if (layer[v] > 0) {
        total += layer[v];
        at = v;
      }
    if (total != 1) return "";
    out += (out.empty() ? "" : "/") + q.vertex_label(at);
  }
  return out;
}

Inventory::Inventory(AlgebraPtr algebra, std::vector<IndecRecord> records, std::vector<std::string> warnings)
    : algebra_(std::move(algebra)), records_(std::move(records)), warnings_(std::move(warnings)) {
  const std::size_t n = records_.size();
  hom_tau_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!records_[y].tau.is_zero()) hom_tau_[x * n + y] = hom_dim(records_[x].module, records_[y].tau);
}

std::optional<std::size_t> Inventory::find(const Representation& m) const {
  for (const auto& r : records_)
    if (r.module.dims() == m.dims() && is_iso(r.module, m)) return r.id;
  return std::nullopt;
}

std::optional<std::size_t> Inventory::find_name(const std::string& name) const {
  for (const auto& r : records_)
    if (r.name == name) return r.id;
  return std::nullopt;
}

const std::vector<Matrix>& Inventory::trace(std::size_t x, std::size_t y) const {
  auto key = std::make_pair(x, y);
  auto it = traces_.find(key);
  if (it == traces_.end()) it = traces_.emplace(key, trace_subspaces(record(x).module, record(y).module)).first;
  return it->second;
}

Inventory build_inventory(const AlgebraPtr& a, const Backend& backend) {
  std::vector<std::string> warnings;
  auto cands = candidates_from(a, backend, warnings);

  using Key = std::tuple<std::size_t, long, std::string, std::vector<std::size_t>>;
  std::vector<std::pair<Key, std::size_t>> keyed;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& m = cands[i].module;
    keyed.push_back({{top_vertex(m), -static_cast<long>(m.total_dim()), cands[i].name, m.dims()}, i});
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<IndecRecord> records;
  std::map<std::string, std::size_t> seen;
  for (const auto& [key, i] : keyed) {
    IndecRecord r{records.size(), cands[i].name, cands[i].module, cands[i].module, std::nullopt,
                  false, false, std::nullopt, cands[i].word};
    if (r.name.empty()) r.name = dim_vector_name(r.module.dims());
    if (std::size_t k = seen[r.name]++; k > 0) r.name += "#" + std::to_string(k + 1);
    r.tau = tau(r.module);
    r.is_projective = r.tau.is_zero();
    r.is_tau_rigid = r.is_projective || hom_dim(r.module, r.tau) == 0;
    records.push_back(std::move(r));
  }

  for (auto& r : records) {
    if (r.is_projective) {
      const std::size_t v = top_vertex(r.module);
      if (v < a->num_vertices() && is_iso(r.module, projective(a, v))) r.projective_vertex = v;
      continue;
    }
    for (const auto& s : records)
      if (s.module.dims() == r.tau.dims() && is_iso(s.module, r.tau)) r.tau_id = s.id;
    if (!r.tau_id) warnings.push_back("tau of " + r.name + " is not in the inventory");
  }
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    const bool has = std::any_of(records.begin(), records.end(),
                                 [&](const IndecRecord& r) { return r.projective_vertex == v; });
    if (!has) warnings.push_back("projective at vertex " + a->quiver().vertex_label(v) + " is not in the inventory");
  }
  return Inventory(a, std::move(records), std::move(warnings));
}

bool compatible(const Inventory& inv, Node x, Node y) {
  using K = Node::Kind;
  if (x.kind == K::Vertex && y.kind == K::Vertex) return true;
  if (x.kind == K::Vertex) std::swap(x, y);
  if (y.kind == K::Vertex) return inv.record(x.index).module.dim(y.index) == 0;
  return inv.hom_to_tau(x.index, y.index) == 0 && inv.hom_to_tau(y.index, x.index) == 0;
}

bool pair_less(const STPair& x, const STPair& y) {
  return std::forward_as_tuple(x.support.size(), x.modules, x.support) <
         std::forward_as_tuple(y.support.size(), y.modules, y.support);
}

std::vector<STPair> enumerate_stpairs(const Inventory& inv, const EnumerateOptions& opts) {
  const std::size_t n = inv.num_vertices();
  std::vector<Node> nodes;
  for (const auto& r : inv.records())
    if (r.is_tau_rigid) nodes.push_back(Node::module(r.id));
  const std::size_t max_support = opts.max_support.value_or(n);
  if (max_support > 0)
    for (std::size_t v = 0; v < n; ++v) nodes.push_back(Node::vertex(v));

  const std::size_t m = nodes.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) adj[i][j] = adj[j][i] = compatible(inv, nodes[i], nodes[j]);

  std::vector<STPair> out;
  std::vector<std::size_t> chosen;
  std::function<void(const std::vector<std::size_t>&, std::size_t)> extend =
      [&](const std::vector<std::size_t>& cand, std::size_t support) {
        if (chosen.size() == n) {
          STPair p;
          for (auto i : chosen) {
            if (nodes[i].kind == Node::Kind::Module)
              p.modules.push_back(nodes[i].index);
            else
              p.support.push_back(nodes[i].index);
          }
          p.is_tau_tilting = p.support.empty();
          out.push_back(std::move(p));
          return;
        }
        if (chosen.size() + cand.size() < n) return;
        for (std::size_t k = 0; k < cand.size(); ++k) {
          const std::size_t i = cand[k];
          const bool vertex = nodes[i].kind == Node::Kind::Vertex;
          if (vertex && support + 1 > max_support) continue;
          std::vector<std::size_t> next;
          for (std::size_t l = k + 1; l < cand.size(); ++l)
            if (adj[i][cand[l]]) next.push_back(cand[l]);
          chosen.push_back(i);
          extend(next, support + (vertex ? 1 : 0));
          chosen.pop_back();
        }
      };
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  extend(all, 0);
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

std::vector<STPair> oracle_stpairs_via_quotients(const Inventory& inv, const Backend& backend) {
  const AlgebraPtr& a = inv.algebra();
  const std::size_t n = a->num_vertices();
  if (n >= 8 * sizeof(unsigned long))
    throw Error(ErrorKind::BudgetExceeded, "too many vertices for the subset oracle");
  std::vector<STPair> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<std::size_t> keep, dropped;
    for (std::size_t v = 0; v < n; ++v) ((mask >> v) & 1ul ? keep : dropped).push_back(v);
    if (keep.empty()) {
      out.push_back({{}, dropped, false});
      continue;
    }
    const AlgebraQuotient quo = vertex_subalgebra_quotient(a, keep);
    Backend sub = backend;
    if (backend.kind == Backend::Kind::User) {
      sub.modules.clear();
      for (const auto& r : inv.records()) {
        bool inside = true;
        for (auto v : dropped) inside = inside && r.module.dim(v) == 0;
        if (inside) sub.modules.push_back({r.name, bar(r.module, quo)});
      }
    }
    const Inventory qinv = build_inventory(quo.target, sub);
    const std::size_t k = keep.size();

    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
      if (chosen.size() == k) {
        std::vector<Representation> parts;
        for (auto id : chosen) parts.push_back(qinv.record(id).module);
        const Representation sum = direct_sum(quo.target, parts);
        if (hom_dim(sum, tau(sum)) != 0) return;
        STPair p;
        for (auto id : chosen) {
          auto match = inv.find(inflate(qinv.record(id).module, quo));
          if (!match)
            throw Error(ErrorKind::IncompleteInventory,
                        "inflated module " + qinv.record(id).name + " is missing from the inventory");
          p.modules.push_back(*match);
        }
        std::sort(p.modules.begin(), p.modules.end());
        p.support = dropped;
        p.is_tau_tilting = dropped.empty();
        out.push_back(std::move(p));
        return;
      }
      for (std::size_t id = from; id < qinv.size(); ++id) {
        // additivity of Hom and tau: a summand clash kills the whole sum
        bool ok = qinv.hom_to_tau(id, id) == 0;
        for (auto c : chosen) ok = ok && qinv.hom_to_tau(id, c) == 0 && qinv.hom_to_tau(c, id) == 0;
        if (!ok) continue;
        chosen.push_back(id);
        dfs(id + 1);
        chosen.pop_back();
      }
    };
    dfs(0);
  }
  std::sort(out.begin(), out.end(), pair_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool record_in_fac(const Inventory& inv, std::size_t y, const std::vector<std::size_t>& gens) {
  const Representation& target = inv.record(y).module;
  const Field field = inv.algebra()->field();
  for (std::size_t v = 0; v < target.dims().size(); ++v) {
    if (target.dim(v) == 0) continue;
    Matrix span(0, target.dim(v), field);
    for (auto x : gens) span = span.stacked(inv.trace(x, y)[v]);
    if (rank(span) != target.dim(v)) return false;
  }
  return true;
}

}  // namespace

bool order_ge(const Inventory& inv, const STPair& p1, const STPair& p2) {
  for (auto y : p2.modules)
    if (!record_in_fac(inv, y, p1.modules)) return false;
  return true;
}

std::string pair_label(const Inventory& inv, const STPair& p, const std::string& sep) {
  if (p.modules.empty()) return "0";
  std::string out;
  for (auto id : p.modules) out += (out.empty() ? "" : sep) + inv.record(id).name;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& order) {
  const std::size_t n = order.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !order[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && order[i][k] && order[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::vector<bool>> reachability(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [s, t] : arrows) r[s][t] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

PosetQuiver hasse(const Inventory& inv, const std::vector<STPair>& pairs) {
  const std::size_t n = pairs.size();
  // fac[i][y]: record y lies in Fac of pairs[i]
  std::vector<std::vector<bool>> fac(n, std::vector<bool>(inv.size(), false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t y = 0; y < inv.size(); ++y) fac[i][y] = record_in_fac(inv, y, pairs[i].modules);

  PosetQuiver h;
  h.order.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    h.labels.push_back(pair_label(inv, pairs[i]));
    for (std::size_t j = 0; j < n; ++j)
      h.order[i][j] = std::all_of(pairs[j].modules.begin(), pairs[j].modules.end(),
                                  [&](std::size_t y) { return fac[i][y]; });
  }
  h.arrows = transitive_reduction(h.order);
  return h;
}

PosetQuiver full_subquiver(const PosetQuiver& h, const std::vector<std::size_t>& keep) {
  std::vector<std::optional<std::size_t>> pos(h.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= h.size()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(keep[i]) + " is not in the quiver");
    pos[keep[i]] = i;
  }
  PosetQuiver out;
  for (auto v : keep) out.labels.push_back(h.labels[v]);
  out.order.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out.order[i][j] = h.order[keep[i]][keep[j]];
  for (const auto& [s, t] : h.arrows)
    if (pos[s] && pos[t]) out.arrows.emplace_back(*pos[s], *pos[t]);
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

}  // namespace taured
