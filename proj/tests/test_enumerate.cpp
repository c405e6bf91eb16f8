#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "golden.hpp"
#include "taured/enumerate.hpp"
#include "taured/error.hpp"

using namespace taured;

namespace {

std::vector<std::string> record_names(const Inventory& inv) {
  std::vector<std::string> out;
  for (const auto& r : inv.records()) out.push_back(r.name);
  return out;
}

std::set<std::string> labels_of(const Inventory& inv, const std::vector<STPair>& pairs) {
  std::set<std::string> out;
  for (const auto& p : pairs) out.insert(pair_label(inv, p));
  return out;
}

std::vector<STPair> tau_tilting(const std::vector<STPair>& pairs) {
  std::vector<STPair> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), [](const STPair& p) { return p.is_tau_tilting; });
  return out;
}

AlgebraPtr a3sq_quotient() {
  auto a = corpus::a3sq();
  const Quiver& q = a->quiver();
  return quotient_by_elements(a, {a->path_element(make_path(q, {*q.find_arrow("a")}))}).target;
}

std::vector<AlgebraPtr> small_corpus() {
  return {corpus::a3sq(),  corpus::ka2_down(),    corpus::kd3(),          corpus::nakayama2(),
          corpus::ka2_times_k(), corpus::field_k(), corpus::series_sq('A', 4), corpus::path_an(3)};
}

}  // namespace

TEST_CASE("build_inventory examples") {
  const auto inv = build_inventory(corpus::a3sq());
  CHECK(record_names(inv) == std::vector<std::string>{"1/2", "1", "2/3", "2", "3"});
  CHECK(inv.warnings().empty());
  CHECK(build_inventory(corpus::ka2_down()).size() == 3);
  CHECK(build_inventory(corpus::series_sq('A', 4)).size() == 7);
  CHECK(record_names(build_inventory(corpus::kd3())) ==
        std::vector<std::string>{"1", "2", "str(b1^-1 b2)", "3/1", "3/2", "3"});
}

TEST_CASE("inventory records carry consistent tau data") {
  for (const auto& a : small_corpus()) {
    const auto inv = build_inventory(a);
    for (const auto& r : inv.records()) {
      CHECK(r.is_projective == r.tau.is_zero());
      CHECK(r.is_tau_rigid == (hom_dim(r.module, r.tau) == 0));
      if (r.is_projective) {
        REQUIRE(r.projective_vertex);
        CHECK(is_iso(r.module, projective(a, *r.projective_vertex)));
      } else {
        REQUIRE(r.tau_id);
        CHECK(is_iso(inv.record(*r.tau_id).module, r.tau));
      }
    }
  }
}

TEST_CASE("compatible examples") {
  const auto inv = build_inventory(corpus::a3sq());
  const auto s2 = *inv.find_name("2");
  CHECK_FALSE(compatible(inv, Node::module(s2), Node::vertex(1)));
  CHECK(compatible(inv, Node::module(s2), Node::vertex(2)));
  CHECK(compatible(inv, Node::module(*inv.find_name("1/2")), Node::module(*inv.find_name("2/3"))));
  CHECK(compatible(inv, Node::module(s2), Node::module(s2)));
  CHECK(compatible(inv, Node::vertex(0), Node::vertex(2)));
  // tau S1 = S2 and Hom(S2, S2) != 0
  CHECK_FALSE(compatible(inv, Node::module(*inv.find_name("1")), Node::module(s2)));
}

TEST_CASE("enumerate_stpairs examples") {
  const auto inv = build_inventory(corpus::a3sq());
  const auto pairs = enumerate_stpairs(inv);
  CHECK(pairs.size() == 12);
  const auto tilt = tau_tilting(pairs);
  CHECK(labels_of(inv, tilt) == std::set<std::string>{"1/2⊕2/3⊕3", "1/2⊕2/3⊕2", "1/2⊕1⊕3"});
  CHECK(enumerate_stpairs(inv, {0}).size() == 3);

  const auto k = build_inventory(corpus::field_k());
  const auto kp = enumerate_stpairs(k);
  REQUIRE(kp.size() == 2);
  CHECK(kp[0] == STPair{{0}, {}, true});
  CHECK(kp[1] == STPair{{}, {0}, false});
}

TEST_CASE("oracle_stpairs_via_quotients examples") {
  const auto inv = build_inventory(corpus::a3sq());
  const auto oracle = oracle_stpairs_via_quotients(inv, Backend::strings());
  CHECK(oracle.size() == 12);
  CHECK(oracle == enumerate_stpairs(inv));
  CHECK(std::count_if(oracle.begin(), oracle.end(), [](const STPair& p) { return p.support.size() == 3; }) == 1);
}

TEST_CASE("property: clique enumeration matches the quotient oracle") {
  for (const auto& a : small_corpus()) {
    const auto inv = build_inventory(a);
    CHECK(enumerate_stpairs(inv) == oracle_stpairs_via_quotients(inv, Backend::strings()));
  }
}

TEST_CASE("order_ge examples") {
  const auto inv = build_inventory(corpus::a3sq());
  const auto pairs = enumerate_stpairs(inv);
  auto by_label = [&](const std::string& s) {
    return *std::find_if(pairs.begin(), pairs.end(), [&](const STPair& p) { return pair_label(inv, p) == s; });
  };
  const STPair top = by_label("1/2⊕2/3⊕3"), zero = by_label("0");
  for (const auto& p : pairs) {
    CHECK(order_ge(inv, top, p));
    CHECK(order_ge(inv, zero, p) == (p == zero));
  }
  CHECK(order_ge(inv, top, by_label("1/2⊕1⊕3")));
  CHECK_FALSE(order_ge(inv, by_label("1/2⊕1⊕3"), top));
}

TEST_CASE("hasse matches the reference edge sets") {
  const auto inv = build_inventory(corpus::a3sq());
  const auto h = hasse(inv, enumerate_stpairs(inv));
  CHECK(h.size() == 12);
  CHECK(h.arrows.size() == 18);
  CHECK(golden::edges_of(h) == golden::read_edges("example_hasse_lambda.txt"));

  const auto qinv = build_inventory(a3sq_quotient());
  const auto hq = hasse(qinv, enumerate_stpairs(qinv));
  CHECK(hq.size() == 10);
  CHECK(hq.arrows.size() == 15);
  CHECK(golden::edges_of(hq) == golden::read_edges("example_hasse_quotient.txt"));
}

TEST_CASE("hasse of a single vertex is a chain") {
  const auto inv = build_inventory(corpus::field_k());
  const auto h = hasse(inv, enumerate_stpairs(inv));
  REQUIRE(h.arrows.size() == 1);
  CHECK(h.labels[h.arrows[0].first] == "1");
  CHECK(h.labels[h.arrows[0].second] == "0");
}

TEST_CASE("full_subquiver examples") {
  const auto inv = build_inventory(corpus::a3sq());
  const auto pairs = enumerate_stpairs(inv);
  const auto h = hasse(inv, pairs);
  std::vector<std::size_t> tilt, all;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    all.push_back(i);
    if (pairs[i].is_tau_tilting) tilt.push_back(i);
  }
  const auto sub = full_subquiver(h, tilt);
  CHECK(sub.size() == 3);
  REQUIRE(sub.arrows.size() == 2);
  for (const auto& [s, t] : sub.arrows) CHECK(sub.labels[s] == "1/2⊕2/3⊕3");

  const auto same = full_subquiver(h, all);
  CHECK(same.arrows == h.arrows);
  CHECK(same.labels == h.labels);
  CHECK(full_subquiver(h, {}).size() == 0);
  CHECK_THROWS_AS(full_subquiver(h, {99}), Error);
}

TEST_CASE("property: Hasse quivers are covering relations of a partial order") {
  for (const auto& a : small_corpus()) {
    const auto inv = build_inventory(a);
    const auto pairs = enumerate_stpairs(inv);
    const auto h = hasse(inv, pairs);
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(h.order[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) CHECK_FALSE((h.order[i][j] && h.order[j][i]));
        for (std::size_t k = 0; k < n; ++k)
          if (h.order[i][j] && h.order[j][k]) CHECK(h.order[i][k]);
      }
    }
    CHECK(reachability(n, h.arrows) == h.order);

    // unique maximum (the projectives) and unique minimum (zero)
    std::size_t maxima = 0, minima = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool is_max = true, is_min = true;
      for (std::size_t j = 0; j < n; ++j) {
        is_max = is_max && h.order[i][j];
        is_min = is_min && h.order[j][i];
      }
      if (is_max) {
        ++maxima;
        for (auto id : pairs[i].modules) CHECK(inv.record(id).is_projective);
      }
      if (is_min) {
        ++minima;
        CHECK(pairs[i].modules.empty());
      }
    }
    CHECK(maxima == 1);
    CHECK(minima == 1);

    // every arrow exchanges exactly one summand
    for (const auto& [s, t] : h.arrows) {
      std::set<std::pair<int, std::size_t>> x, y;
      for (auto id : pairs[s].modules) x.insert({0, id});
      for (auto v : pairs[s].support) x.insert({1, v});
      for (auto id : pairs[t].modules) y.insert({0, id});
      for (auto v : pairs[t].support) y.insert({1, v});
      std::vector<std::pair<int, std::size_t>> diff;
      std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
      CHECK(diff.size() == 2);
    }

    // tau-tilting modules are sincere; module parts determine pairs
    std::set<std::vector<std::size_t>> parts;
    for (const auto& p : pairs) {
      parts.insert(p.modules);
      if (!p.is_tau_tilting) continue;
      std::vector<Representation> summands;
      for (auto id : p.modules) summands.push_back(inv.record(id).module);
      CHECK(is_sincere(direct_sum(a, summands)));
    }
    CHECK(parts.size() == pairs.size());
  }
}

TEST_CASE("user-supplied inventories") {
  auto a = corpus::a3sq();
  std::vector<UserModule> mods;
  const auto strings = build_inventory(a);
  for (const auto& r : strings.records()) mods.push_back({"", r.module});
  const auto inv = build_inventory(a, Backend::user(mods));
  CHECK(record_names(inv) == std::vector<std::string>{"1/2", "1", "2/3", "2", "3"});
  CHECK(enumerate_stpairs(inv).size() == 12);
  CHECK(oracle_stpairs_via_quotients(inv, Backend::user(mods)) == enumerate_stpairs(inv));

  auto dup = mods;
  dup.push_back({"again", mods[0].module});
  try {
    build_inventory(a, Backend::user(dup));
    FAIL("expected IncompleteInventory");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteInventory);
  }

  // a decomposable module is flagged by the audit, not rejected
  auto bad = mods;
  bad.push_back({"S1+S3", direct_sum(a, {simple(a, 0), simple(a, 2)})});
  CHECK_FALSE(build_inventory(a, Backend::user(bad)).warnings().empty());

  // dropping a projective is reported
  std::vector<UserModule> partial(mods.begin() + 1, mods.end());
  CHECK_FALSE(build_inventory(a, Backend::user(partial)).warnings().empty());
}
