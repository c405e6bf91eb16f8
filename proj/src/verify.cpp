#include "taured/verify.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "taured/error.hpp"

namespace taured {

namespace {

std::string append(std::string list, const std::string& item) { return list.empty() ? item : list + ", " + item; }

}  // namespace

Report verify_algebra(const AlgebraPtr& a, const Backend& backend, const std::string& name) {
  Report report;
  report.algebra = name;
  auto add = [&](const std::string& check, const std::string& anchor, const std::string& bad) {
    report.checks.push_back({check, anchor, bad.empty(), bad});
  };

  const Inventory inv = build_inventory(a, backend);
  std::string warn;
  for (const auto& w : inv.warnings()) warn = append(warn, w);
  add("inventory_complete", "the inventory holds every projective and is closed under tau", warn);

  const auto pairs = enumerate_stpairs(inv);
  const auto oracle = oracle_stpairs_via_quotients(inv, backend);
  add("oracle_equivalence", "clique enumeration equals the literal definition over vertex quotients",
      pairs == oracle ? "" : std::to_string(pairs.size()) + " pairs against " + std::to_string(oracle.size()));

  std::string bad_tau, bad_yoneda;
  for (const auto& r : inv.records()) {
    if (r.is_projective && !r.tau.is_zero()) bad_tau = append(bad_tau, r.name);
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
      if (hom_dim(projective(a, v), r.module) != r.module.dim(v)) bad_yoneda = append(bad_yoneda, r.name);
  }
  add("tau_of_projectives", "tau vanishes on projectives", bad_tau);
  add("yoneda", "dim Hom(P_v, M) equals the dimension of M at v", bad_yoneda);

  const PosetQuiver h = hasse(inv, pairs);
  std::string bad_order;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (i != j && h.order[i][j] && h.order[j][i]) bad_order = append(bad_order, h.labels[i] + " ~ " + h.labels[j]);
  if (reachability(h.size(), h.arrows) != h.order) bad_order = append(bad_order, "closure of the arrows differs");
  add("hasse_partial_order", "the Hasse arrows generate the Fac order", bad_order);

  std::string bad_exchange;
  for (const auto& [s, t] : h.arrows) {
    std::set<std::pair<int, std::size_t>> x, y;
    for (auto id : pairs[s].modules) x.insert({0, id});
    for (auto v : pairs[s].support) x.insert({1, v});
    for (auto id : pairs[t].modules) y.insert({0, id});
    for (auto v : pairs[t].support) y.insert({1, v});
    std::vector<std::pair<int, std::size_t>> diff;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
    if (diff.size() != 2) bad_exchange = append(bad_exchange, h.labels[s] + " -> " + h.labels[t]);
  }
  add("hasse_single_exchange", "every Hasse arrow is a mutation", bad_exchange);

  std::string bad_sincere;
  std::set<std::vector<std::size_t>> parts;
  for (const auto& p : pairs) {
    parts.insert(p.modules);
    if (!p.is_tau_tilting) continue;
    std::vector<Representation> summands;
    for (auto id : p.modules) summands.push_back(inv.record(id).module);
    if (!is_sincere(direct_sum(a, summands))) bad_sincere = append(bad_sincere, pair_label(inv, p));
  }
  add("tau_tilting_sincere", "tau-tilting modules are sincere", bad_sincere);
  add("module_part_determines_pair", "a pair is determined by its module",
      parts.size() == pairs.size() ? "" : std::to_string(pairs.size() - parts.size()) + " repeated");

  for (const auto& pi : find_proj_injectives(a)) {
    try {
      run_reduction_checks(socle_quotient(a, pi.vertex, backend), report);
    } catch (const Error& e) {
      add("Q=P" + a->quiver().vertex_label(pi.vertex) + ": reduction", "the reduction can be set up", e.what());
    }
  }
  return report;
}

}  // namespace taured
