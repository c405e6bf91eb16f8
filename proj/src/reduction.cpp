#include "taured/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "taured/error.hpp"

namespace taured {

namespace {

using IdSet = std::vector<std::size_t>;

bool contains(const IdSet& s, std::size_t x) { return std::find(s.begin(), s.end(), x) != s.end(); }

IdSet without(IdSet s, std::size_t x) {
  s.erase(std::remove(s.begin(), s.end(), x), s.end());
  return s;
}

IdSet with(IdSet s, std::size_t x) {
  if (!contains(s, x)) s.push_back(x);
  std::sort(s.begin(), s.end());
  return s;
}

IdSet inflate_ids(const ReductionContext& ctx, const IdSet& bar_ids) {
  IdSet out;
  for (auto id : bar_ids) out.push_back(ctx.inflate_map.at(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ids_label(const Inventory& inv, const IdSet& ids) {
  return pair_label(inv, STPair{ids, {}, false});
}

std::string set_diff_witness(const Inventory& inv, const std::set<IdSet>& lhs, const std::set<IdSet>& rhs) {
  std::string out;
  for (const auto& x : lhs)
    if (!rhs.count(x)) out += (out.empty() ? "only left: " : ", ") + ids_label(inv, x);
  std::string right;
  for (const auto& x : rhs)
    if (!lhs.count(x)) right += (right.empty() ? "only right: " : ", ") + ids_label(inv, x);
  if (!right.empty()) out += (out.empty() ? "" : "; ") + right;
  return out;
}

Representation socle_owner_check(const AlgebraPtr& a, std::size_t v) {
  const Representation p = projective(a, v);
  for (std::size_t w = 0; w < a->num_vertices(); ++w)
    if (p.dims() == injective(a, w).dims() && is_iso(p, injective(a, w))) return p;
  throw Error(ErrorKind::NotProjInjective,
              "P" + a->quiver().vertex_label(v) + " is not injective");
}

}  // namespace

std::vector<ProjInjective> find_proj_injectives(const AlgebraPtr& a) {
  std::vector<ProjInjective> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    const Representation p = projective(a, v);
    for (std::size_t w = 0; w < a->num_vertices(); ++w) {
      const Representation i = injective(a, w);
      if (p.dims() == i.dims() && is_iso(p, i)) {
        out.push_back({v, w});
        break;
      }
    }
  }
  return out;
}

ReductionContext socle_quotient(const AlgebraPtr& a, std::size_t v, const Backend& backend) {
  if (v >= a->num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v));
  const Representation q = socle_owner_check(a, v);
  const Quiver& quiver = a->quiver();
  const Field field = a->field();

  // Soc(Q): vectors killed by every arrow
  Element socle = a->zero_element();
  std::size_t socle_dim = 0, socle_vertex = 0;
  for (std::size_t w = 0; w < quiver.num_vertices(); ++w) {
    if (q.dim(w) == 0) continue;
    Matrix outgoing(q.dim(w), 0, field);
    for (std::size_t ar = 0; ar < quiver.num_arrows(); ++ar)
      if (quiver.arrow(ar).source == w) outgoing = outgoing.beside(q.map(ar));
    const Matrix kernel = outgoing.cols() == 0 ? Matrix::identity(q.dim(w), field) : left_nullspace(outgoing);
    socle_dim += kernel.rows();
    if (kernel.rows() == 1) {
      socle_vertex = w;
      const auto& slice = a->slice(v, w);
      for (std::size_t k = 0; k < slice.size(); ++k) socle[slice[k]] = kernel(0, k);
    }
  }
  if (socle_dim != 1)
    throw Error(ErrorKind::NonSimpleSocle, "socle of P" + quiver.vertex_label(v) + " has dimension " +
                                               std::to_string(socle_dim));
  // two-sidedness witness: rad . Soc = Soc . rad = 0
  for (std::size_t ar = 0; ar < quiver.num_arrows(); ++ar) {
    const Element x = a->path_element(make_path(quiver, {ar}));
    if (a->multiply(x, socle) != a->zero_element() || a->multiply(socle, x) != a->zero_element())
      throw Error(ErrorKind::NonSimpleSocle, "socle of P" + quiver.vertex_label(v) + " is not a two-sided ideal");
  }

  AlgebraQuotient quo = quotient_by_elements(a, {socle});
  Inventory inv = build_inventory(a, backend);
  const auto found = inv.find(q);
  if (!found) throw Error(ErrorKind::IncompleteInventory, "P" + quiver.vertex_label(v) + " is missing from the inventory");
  const std::size_t q_id = *found;

  Backend bar_backend = backend;
  if (backend.kind == Backend::Kind::User) {
    bar_backend.modules.clear();
    for (const auto& r : inv.records())
      if (r.id != q_id) bar_backend.modules.push_back({r.name, bar(r.module, quo)});
  }
  Inventory bar_inv = build_inventory(quo.target, bar_backend);

  std::vector<std::optional<std::size_t>> alpha_map;
  for (const auto& r : inv.records()) {
    const Representation b = bar(r.module, quo);
    if (b.is_zero()) {
      alpha_map.push_back(std::nullopt);
      continue;
    }
    auto id = bar_inv.find(b);
    if (!id) throw Error(ErrorKind::IncompleteInventory, "bar of " + r.name + " is missing from the quotient inventory");
    alpha_map.push_back(id);
  }
  std::vector<std::size_t> inflate_map, hom_q;
  for (const auto& r : bar_inv.records()) {
    const Representation up = inflate(r.module, quo);
    auto id = inv.find(up);
    if (!id) throw Error(ErrorKind::IncompleteInventory, "inflation of " + r.name + " is missing from the inventory");
    inflate_map.push_back(*id);
    hom_q.push_back(hom_dim(up, q));
  }
  const std::optional<std::size_t> qbar = alpha_map[q_id];

  return ReductionContext{a,           v,       socle_vertex,      std::move(socle),     std::move(quo),
                          std::move(inv), std::move(bar_inv), q_id, qbar, std::move(alpha_map),
                          std::move(inflate_map), std::move(hom_q)};
}

std::vector<std::size_t> alpha(const ReductionContext& ctx, const std::vector<std::size_t>& module_ids) {
  IdSet out;
  for (auto id : module_ids)
    if (auto b = ctx.alpha_map.at(id)) out.push_back(*b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t hom_to_q(const ReductionContext& ctx, const std::vector<std::size_t>& bar_ids) {
  std::size_t total = 0;
  for (auto id : bar_ids) total += ctx.hom_to_q.at(id);
  return total;
}

NSets compute_nsets(const ReductionContext& ctx, const std::vector<STPair>& bar_pairs) {
  NSets out;
  const std::size_t nbar = ctx.bar_inv.num_vertices();
  for (const auto& p : bar_pairs) {
    const bool has_qbar = ctx.qbar_id && contains(p.modules, *ctx.qbar_id);
    const bool hom_zero = hom_to_q(ctx, p.modules) == 0;
    if (p.is_tau_tilting) {
      if (!has_qbar)
        out.n1.push_back(p);
      else if (!hom_zero)
        out.n3.push_back(p);
    } else if (has_qbar && hom_zero && p.modules.size() + 1 == nbar) {
      out.n2.push_back(p);
    }
    if ((ctx.q_simple() || has_qbar) && hom_zero) out.n1_support.push_back(p);
  }
  return out;
}

PosetQuiver surgery(const PosetQuiver& h, const std::vector<std::size_t>& n) {
  const std::size_t base = h.size();
  std::vector<std::optional<std::size_t>> copy(base);
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] >= base) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(n[k]) + " is not in the quiver");
    copy[n[k]] = base + k;
  }
  PosetQuiver out;
  out.labels = h.labels;
  for (auto v : n) out.labels.push_back(h.labels[v] + "⁺");
  for (const auto& [s, t] : h.arrows) {
    if (copy[s] && copy[t]) {
      out.arrows.emplace_back(s, t);
      out.arrows.emplace_back(*copy[s], *copy[t]);
    } else if (copy[t]) {
      out.arrows.emplace_back(s, *copy[t]);
    } else {
      out.arrows.emplace_back(s, t);
    }
  }
  for (auto v : n) out.arrows.emplace_back(*copy[v], v);
  std::sort(out.arrows.begin(), out.arrows.end());
  out.order = reachability(out.size(), out.arrows);
  return out;
}

std::vector<std::vector<std::size_t>> reconstruct_tau_tilt(const ReductionContext& ctx, const NSets& nsets) {
  std::set<IdSet> out;
  if (ctx.q_simple()) {
    for (const auto& p : nsets.n1) out.insert(with(inflate_ids(ctx, p.modules), ctx.q_id));
    return {out.begin(), out.end()};
  }
  const std::size_t qbar = *ctx.qbar_id;
  for (const auto& p : nsets.n1) out.insert(inflate_ids(ctx, p.modules));
  for (const auto& p : nsets.n2) out.insert(with(inflate_ids(ctx, p.modules), ctx.q_id));
  for (const auto& p : nsets.n3) out.insert(with(inflate_ids(ctx, without(p.modules, qbar)), ctx.q_id));
  return {out.begin(), out.end()};
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

// Runs the checks for one projective-injective.
class Verifier {
public:
  Verifier(const ReductionContext& ctx, Report& report) : ctx_(ctx), report_(report) {
    prefix_ = "Q=P" + ctx.algebra->quiver().vertex_label(ctx.vertex) + ": ";
    pairs_ = enumerate_stpairs(ctx.inv);
    bar_pairs_ = enumerate_stpairs(ctx.bar_inv);
    h_ = hasse(ctx.inv, pairs_);
    hb_ = hasse(ctx.bar_inv, bar_pairs_);
    nsets_ = compute_nsets(ctx, bar_pairs_);
    for (std::size_t i = 0; i < bar_pairs_.size(); ++i) bar_index_[bar_pairs_[i].modules] = i;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (pairs_[i].is_tau_tilting) tilt_.push_back(i);
    if (!ctx.q_simple()) qbar_lambda_ = ctx.inflate_map[*ctx.qbar_id];
  }

  void run() {
    check_quotient();
    check_bar_fixes();
    check_tau_tilt_map();
    if (!ctx_.q_simple()) {
      check_socle_in_qbar();
      check_no_qbar_without_q();
      check_sincere_exclusion();
      check_decomposition();
      check_tilt_subsets();
    }
    check_reconstruction();
    check_surgery();
  }

private:
  void add(const std::string& name, const std::string& anchor, bool pass, std::string witness = "") {
    report_.checks.push_back({prefix_ + name, anchor, pass, std::move(witness)});
  }

  std::set<IdSet> module_sets(const std::vector<STPair>& ps) const {
    std::set<IdSet> out;
    for (const auto& p : ps) out.insert(p.modules);
    return out;
  }

  void check_quotient() {
    const bool dims = ctx_.bar_algebra()->dim() + 1 == ctx_.algebra->dim();
    add("socle_quotient", "the socle of Q is a one-dimensional two-sided ideal and the quotient drops it", dims,
        dims ? "" : "dimension " + std::to_string(ctx_.bar_algebra()->dim()));
  }

  void check_bar_fixes() {
    std::string bad;
    for (const auto& r : ctx_.inv.records()) {
      if (r.id == ctx_.q_id) continue;
      const Representation back = inflate(bar(r.module, ctx_.quotient), ctx_.quotient);
      if (!is_iso(back, r.module)) bad += (bad.empty() ? "" : ", ") + r.name;
    }
    add("bar_fixes_non_q", "bar fixes every indecomposable other than Q up to isomorphism", bad.empty(), bad);
  }

  // tau-tilt of the algebra against tau-tilt of the quotient plus N, along alpha
  void check_tau_tilt_map() {
    std::vector<std::size_t> image;
    std::string missing;
    for (auto i : tilt_) {
      auto it = bar_index_.find(alpha(ctx_, pairs_[i].modules));
      if (it == bar_index_.end()) {
        missing += (missing.empty() ? "" : ", ") + h_.labels[i];
        image.push_back(bar_pairs_.size());
      } else {
        image.push_back(it->second);
      }
    }
    std::set<std::size_t> target;
    for (std::size_t j = 0; j < bar_pairs_.size(); ++j) {
      const bool in_n = std::find(nsets_.n2.begin(), nsets_.n2.end(), bar_pairs_[j]) != nsets_.n2.end();
      if (bar_pairs_[j].is_tau_tilting || in_n) target.insert(j);
    }
    const std::set<std::size_t> hit(image.begin(), image.end());
    const bool bijective = missing.empty() && hit.size() == image.size() && hit == target;
    const std::string sizes = std::to_string(tilt_.size()) + " -> " + std::to_string(target.size());
    add("tau_tilt_bijection",
        ctx_.q_simple() ? "alpha is a bijection from tau-tilt of the algebra to tau-tilt of the quotient"
                        : "alpha is a bijection from tau-tilt of the algebra to tau-tilt of the quotient plus N",
        bijective, bijective ? sizes : sizes + (missing.empty() ? "" : "; unmatched: " + missing));
    if (!bijective) return;

    bool order_ok = true;
    for (std::size_t x = 0; x < tilt_.size(); ++x)
      for (std::size_t y = 0; y < tilt_.size(); ++y)
        order_ok = order_ok && h_.order[tilt_[x]][tilt_[y]] == hb_.order[image[x]][image[y]];
    add("tau_tilt_order_iso", "alpha preserves and reflects the order", order_ok);

    const PosetQuiver lhs = full_subquiver(h_, tilt_);
    std::vector<std::size_t> keep(image.begin(), image.end());
    const PosetQuiver rhs = full_subquiver(hb_, keep);
    // both subquivers list vertices in the order of tilt_, so arrows compare directly
    const bool arrows_ok = lhs.arrows == rhs.arrows;
    std::string witness = std::to_string(lhs.arrows.size()) + " arrows";
    if (!arrows_ok) witness += " vs " + std::to_string(rhs.arrows.size());
    add("tau_tilt_quiver_iso", "alpha is an isomorphism of the full subquivers, arrows matched both ways",
        arrows_ok, witness);
  }

  void check_socle_in_qbar() {
    const std::size_t bar_vertex = *ctx_.quotient.vertex_map[ctx_.socle_vertex];
    const bool premise = ctx_.bar_inv.record(*ctx_.qbar_id).module.dim(bar_vertex) > 0;
    if (!premise) {
      add("socle_in_qbar_gives_empty_n", "if Q/Soc(Q) has Soc(Q) as a composition factor then N is empty", true,
          "premise does not hold");
      return;
    }
    add("socle_in_qbar_gives_empty_n", "if Q/Soc(Q) has Soc(Q) as a composition factor then N is empty", nsets_.n2.empty(),
        nsets_.n2.empty() ? "premise holds, N is empty" : "N has " + std::to_string(nsets_.n2.size()) + " elements");
  }

  void check_no_qbar_without_q() {
    std::string bad;
    for (auto i : tilt_) {
      const auto& m = pairs_[i].modules;
      if (!contains(m, ctx_.q_id) && contains(m, qbar_lambda_)) bad += (bad.empty() ? "" : ", ") + h_.labels[i];
    }
    add("no_qbar_without_q", "no tau-tilting module contains Q/Soc(Q) without Q", bad.empty(), bad);
  }

  void check_sincere_exclusion() {
    std::string bad;
    for (std::size_t j = 0; j < bar_pairs_.size(); ++j) {
      const auto& p = bar_pairs_[j];
      if (p.is_tau_tilting && contains(p.modules, *ctx_.qbar_id) && hom_to_q(ctx_, p.modules) == 0)
        bad += (bad.empty() ? "" : ", ") + hb_.labels[j];
    }
    add("sincere_exclusion", "tau-tilting modules of the quotient containing Q/Soc(Q) map nonzero to Q",
        bad.empty(), bad);
  }

  void check_decomposition() {
    std::vector<std::set<IdSet>> m(3), images(3);
    std::vector<std::size_t> counts(3, 0);
    for (auto i : tilt_) {
      const auto& mods = pairs_[i].modules;
      const bool q = contains(mods, ctx_.q_id), qb = contains(mods, qbar_lambda_);
      if (!q && qb) continue;
      const int part = !q ? 0 : (qb ? 1 : 2);
      ++counts[part];
      images[part].insert(alpha(ctx_, mods));
    }
    const std::vector<std::set<IdSet>> ns{module_sets(nsets_.n1), module_sets(nsets_.n2), module_sets(nsets_.n3)};
    for (int k = 0; k < 3; ++k) {
      const bool ok = images[k].size() == counts[k] && images[k] == ns[k];
      const std::string idx = std::to_string(k + 1);
      add("decomposition_bijection_" + idx, "alpha restricts to a bijection M" + idx + " -> N" + idx, ok,
          std::to_string(counts[k]) + " -> " + std::to_string(ns[k].size()) +
              (ok ? "" : "; " + set_diff_witness(ctx_.bar_inv, images[k], ns[k])));
    }
  }

  void check_tilt_subsets() {
    const std::size_t q = ctx_.q_id, qb = qbar_lambda_;
    const std::size_t n = ctx_.inv.num_vertices();
    std::set<IdSet> a1, b1, a2, b2, c2, a3, b3;
    for (auto i : tilt_) {
      const auto& mods = pairs_[i].modules;
      const bool hq = contains(mods, q), hqb = contains(mods, qb);
      if (!hq && !hqb) a1.insert(mods);
      if (hq && hqb) a2.insert(without(without(mods, q), qb));
      if (hq && !hqb) a3.insert(without(mods, q));
    }
    for (const auto& p : pairs_)
      if (!contains(p.modules, q) && contains(p.modules, qb) && p.modules.size() + 1 == n)
        b2.insert(without(p.modules, qb));
    for (const auto& p : bar_pairs_) {
      if (!p.is_tau_tilting) continue;
      const bool hqb = contains(p.modules, *ctx_.qbar_id);
      if (!hqb) b1.insert(inflate_ids(ctx_, p.modules));
      if (hqb && hom_to_q(ctx_, p.modules) != 0) b3.insert(inflate_ids(ctx_, without(p.modules, *ctx_.qbar_id)));
    }
    for (const auto& p : nsets_.n2) c2.insert(inflate_ids(ctx_, without(p.modules, *ctx_.qbar_id)));

    add("tilt_without_qbar", "for U without Q/Soc(Q): U is tau-tilting over the algebra iff over the quotient",
        a1 == b1, a1 == b1 ? std::to_string(a1.size()) + " modules" : set_diff_witness(ctx_.inv, a1, b1));
    const bool two = a2 == b2 && b2 == c2;
    add("tilt_with_q_and_qbar",
        "Q + Q/Soc(Q) + U is tau-tilting iff Q/Soc(Q) + U is support tau-tilting with one summand missing, "
        "over the algebra and over the quotient with Hom(-, Q) = 0",
        two, two ? std::to_string(a2.size()) + " modules" : set_diff_witness(ctx_.inv, a2, c2));
    add("tilt_with_q",
        "Q + U is tau-tilting over the algebra iff Q/Soc(Q) + U is tau-tilting over the quotient with Hom(-, Q) != 0",
        a3 == b3, a3 == b3 ? std::to_string(a3.size()) + " modules" : set_diff_witness(ctx_.inv, a3, b3));
  }

  void check_reconstruction() {
    std::set<IdSet> direct, rebuilt;
    for (auto i : tilt_) direct.insert(pairs_[i].modules);
    for (const auto& m : reconstruct_tau_tilt(ctx_, nsets_)) rebuilt.insert(m);
    add("reconstruction", "tau-tilt of the algebra is rebuilt from N1, N2 and N3", direct == rebuilt,
        direct == rebuilt ? std::to_string(direct.size()) + " modules" : set_diff_witness(ctx_.inv, direct, rebuilt));
  }

  void check_surgery() {
    std::vector<std::size_t> n1s;
    std::map<std::size_t, std::size_t> copy_of;
    for (const auto& p : nsets_.n1_support) {
      const std::size_t j = bar_index_.at(p.modules);
      copy_of[j] = hb_.size() + n1s.size();
      n1s.push_back(j);
    }
    const PosetQuiver s = surgery(hb_, n1s);
    std::vector<std::size_t> phi;
    std::string missing;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      auto it = bar_index_.find(alpha(ctx_, pairs_[i].modules));
      if (it == bar_index_.end()) {
        missing += (missing.empty() ? "" : ", ") + h_.labels[i];
        phi.push_back(s.size());
        continue;
      }
      const bool up = contains(pairs_[i].modules, ctx_.q_id) && copy_of.count(it->second);
      phi.push_back(up ? copy_of[it->second] : it->second);
    }
    const std::set<std::size_t> hit(phi.begin(), phi.end());
    bool ok = missing.empty() && hit.size() == pairs_.size() && pairs_.size() == s.size();
    std::string witness = std::to_string(pairs_.size()) + " vertices, " + std::to_string(h_.arrows.size()) +
                          " arrows; N1 support has " + std::to_string(n1s.size());
    if (ok) {
      std::set<std::pair<std::size_t, std::size_t>> mapped, target(s.arrows.begin(), s.arrows.end());
      for (const auto& [x, y] : h_.arrows) mapped.emplace(phi[x], phi[y]);
      ok = mapped == target;
      if (!ok) witness += "; arrow sets differ";
    } else if (!missing.empty()) {
      witness += "; unmatched: " + missing;
    }
    add("surgery_iso", "H of the algebra is isomorphic to the surgery of H of the quotient at N1 support", ok,
        witness);
  }

  const ReductionContext& ctx_;
  Report& report_;
  std::string prefix_;
  std::vector<STPair> pairs_, bar_pairs_;
  PosetQuiver h_, hb_;
  NSets nsets_;
  std::map<IdSet, std::size_t> bar_index_;
  std::vector<std::size_t> tilt_;
  std::size_t qbar_lambda_ = 0;
};

}  // namespace

void run_reduction_checks(const ReductionContext& ctx, Report& report) { Verifier(ctx, report).run(); }

Report verify_reduction(const AlgebraPtr& a, const Backend& backend, const std::string& name) {
  const auto pis = find_proj_injectives(a);
  if (pis.empty()) throw Error(ErrorKind::NoProjInjective, "the algebra has no projective-injective module");
  Report report;
  report.algebra = name;
  for (const auto& pi : pis) {
    run_reduction_checks(socle_quotient(a, pi.vertex, backend), report);
  }
  return report;
}

bool SeriesTable::passed() const {
  for (const auto& r : rows) {
    if (r.recurrence && !*r.recurrence) return false;
    if (r.n2_structure && !*r.n2_structure) return false;
    if (r.closed != r.count) return false;
  }
  return true;
}

namespace {

// N2 = {S_n + L | L in tau-tilt of the (n-2) algebra}, L read on vertices 1..n-2.
bool n2_has_expected_shape(SeriesKind kind, int n, const AlgebraPtr& a) {
  const ReductionContext ctx = socle_quotient(a, static_cast<std::size_t>(n - 1));
  const auto nsets = compute_nsets(ctx, enumerate_stpairs(ctx.bar_inv, {1}));
  const AlgebraPtr small = series_algebra(kind, n - 2, a->field());
  const Inventory small_inv = build_inventory(small);
  std::set<IdSet> expected;
  for (const auto& p : enumerate_stpairs(small_inv, {0})) expected.insert(p.modules);

  const Quiver& bq = ctx.bar_algebra()->quiver();
  const std::size_t top = bq.vertex_index(std::to_string(n));
  const std::size_t next = bq.vertex_index(std::to_string(n - 1));
  std::set<IdSet> found;
  for (const auto& p : nsets.n2) {
    if (p.support != IdSet{next}) return false;
    if (!is_iso(ctx.bar_inv.record(*ctx.qbar_id).module, simple(ctx.bar_algebra(), top))) return false;
    IdSet l;
    for (auto id : without(p.modules, *ctx.qbar_id)) {
      const Representation& m = ctx.bar_inv.record(id).module;
      if (m.dim(top) != 0 || m.dim(next) != 0) return false;
      std::vector<std::size_t> dims;
      for (const auto& label : small->quiver().vertices()) dims.push_back(m.dim(bq.vertex_index(label)));
      std::vector<Matrix> maps;
      for (const auto& ar : small->quiver().arrows()) maps.push_back(m.map(*bq.find_arrow(ar.name)));
      auto match = small_inv.find(Representation(small, dims, std::move(maps)));
      if (!match) return false;
      l.push_back(*match);
    }
    std::sort(l.begin(), l.end());
    found.insert(l);
  }
  return found.size() == nsets.n2.size() && found == expected;
}

}  // namespace

SeriesTable series_counts(SeriesKind kind, int n_max) {
  const int limit = kind == SeriesKind::A ? 12 : 11;
  if (n_max > limit)
    throw Error(ErrorKind::BudgetExceeded, "series " + std::string(1, series_letter(kind)) + " is capped at n = " +
                                               std::to_string(limit));
  SeriesTable table;
  table.kind = kind;
  const int first = kind == SeriesKind::A ? 1 : 3;
  const int reduce_from = kind == SeriesKind::A ? 3 : 5;
  for (int n = first; n <= n_max; ++n) {
    const AlgebraPtr a = series_algebra(kind, n);
    SeriesRow row;
    row.n = n;
    row.count = enumerate_stpairs(build_inventory(a), {0}).size();
    row.closed = closed_form(kind, n);
    if (n >= reduce_from) {
      const auto& rows = table.rows;
      row.recurrence = row.count == rows[rows.size() - 1].count + rows[rows.size() - 2].count;
      row.n2_structure = n2_has_expected_shape(kind, n, a);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace taured
