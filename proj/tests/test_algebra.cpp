#include <functional>

#include "corpus.hpp"
#include "doctest.h"
#include "taured/error.hpp"

using namespace taured;

namespace {

std::vector<std::string> basis_names(const Algebra& a) {
  std::vector<std::string> out;
  for (const auto& p : a.basis()) out.push_back(path_to_string(a.quiver(), p));
  return out;
}

// Counts paths of the quiver avoiding every monomial relation as a subpath.
std::size_t count_relation_free_paths(const Algebra& a) {
  const Quiver& q = a.quiver();
  std::vector<std::vector<std::size_t>> forbidden;
  for (const auto& r : a.relations()) forbidden.push_back(r.terms.front().path.arrows);
  auto avoids = [&](const std::vector<std::size_t>& w) {
    for (const auto& f : forbidden)
      for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
        if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(i))) return false;
    return true;
  };
  std::size_t count = q.num_vertices();
  std::function<void(std::vector<std::size_t>&)> grow = [&](std::vector<std::size_t>& w) {
    ++count;
    for (std::size_t b = 0; b < q.num_arrows(); ++b) {
      if (q.arrow(w.back()).target != q.arrow(b).source) continue;
      w.push_back(b);
      if (avoids(w)) grow(w);
      w.pop_back();
    }
  };
  for (std::size_t b = 0; b < q.num_arrows(); ++b) {
    std::vector<std::size_t> w{b};
    grow(w);
  }
  return count;
}

AlgebraPtr commutative_square() {
  Quiver q({"1", "2", "3", "4"}, {});
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "4");
  q.add_arrow("c", "1", "3");
  q.add_arrow("d", "3", "4");
  const Field f = Field::rational();
  Relation r{{{f.one(), make_path(q, {0, 1})}, {f.from_int(-1), make_path(q, {2, 3})}}};
  return build_algebra(q, {r});
}

}  // namespace

TEST_CASE("build_algebra examples") {
  SUBCASE("A3 squared") {
    auto a = corpus::a3sq();
    CHECK(a->dim() == 5);
    CHECK(basis_names(*a) == std::vector<std::string>{"e1", "e2", "e3", "a", "b"});
    CHECK(a->nilpotency_bound() == 2);
  }
  SUBCASE("KA2 without relations") { CHECK(corpus::ka2_down()->dim() == 3); }
  SUBCASE("a loop without relations is rejected") {
    Quiver q({"1"}, {});
    q.add_arrow("x", "1", "1");
    try {
      build_algebra(q, {});
      FAIL("expected NotFiniteDimensional");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotFiniteDimensional);
    }
  }
  SUBCASE("a two-cycle without relations is rejected") {
    Quiver q({"1", "2"}, {});
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "1");
    CHECK_THROWS_AS(build_algebra(q, {}, 12), Error);
  }
  SUBCASE("nakayama algebra with rad^3 = 0") { CHECK(corpus::nakayama2()->dim() == 6); }
}

TEST_CASE("relations are validated") {
  Quiver q({"1", "2", "3"}, {});
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "3");
  const Field f = Field::rational();
  CHECK_THROWS_AS(build_algebra(q, {Relation{{{f.one(), make_path(q, {0})}}}}), Error);
  CHECK_THROWS_AS(make_path(q, {1, 0}), Error);
}

TEST_CASE("non-monomial relations keep the least path as representative") {
  auto a = commutative_square();
  CHECK(a->dim() == 9);
  CHECK_FALSE(a->is_monomial());
  const Quiver& q = a->quiver();
  const Element ab = a->path_element(make_path(q, {0, 1}));
  const Element cd = a->path_element(make_path(q, {2, 3}));
  CHECK(ab == cd);
  CHECK(a->basis_index(make_path(q, {0, 1})).has_value());
  CHECK_FALSE(a->basis_index(make_path(q, {2, 3})).has_value());
  CHECK(check_associativity(*a));
}

TEST_CASE("idempotent decomposition and associativity") {
  for (const auto& a : {corpus::a3sq(), corpus::nakayama2(), corpus::kd3(), corpus::path_an(4)}) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a->num_vertices(); ++i)
      for (std::size_t j = 0; j < a->num_vertices(); ++j) total += a->slice(i, j).size();
    CHECK(total == a->dim());

    Element one = a->zero_element();
    for (std::size_t v = 0; v < a->num_vertices(); ++v) one[a->trivial_index(v)] = a->field().one();
    for (std::size_t i = 0; i < a->dim(); ++i) {
      CHECK(a->multiply(one, a->basis_element(i)) == a->basis_element(i));
      CHECK(a->multiply(a->basis_element(i), one) == a->basis_element(i));
    }
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
      for (std::size_t w = 0; w < a->num_vertices(); ++w) {
        const Element ev = a->basis_element(a->trivial_index(v));
        const Element ew = a->basis_element(a->trivial_index(w));
        CHECK(a->multiply(ev, ew) == (v == w ? ev : a->zero_element()));
      }
    CHECK(check_associativity(*a));
  }
}

TEST_CASE("monomial basis equals relation-avoiding paths") {
  for (const auto& a : {corpus::a3sq(), corpus::nakayama2(), corpus::path_an(5)})
    CHECK(count_relation_free_paths(*a) == a->dim());
}

TEST_CASE("quotient_by_elements examples") {
  auto a = corpus::a3sq();
  const Quiver& q = a->quiver();

  SUBCASE("socle of P1") {
    const Element soc = a->path_element(make_path(q, {*q.find_arrow("a")}));
    auto quo = quotient_by_elements(a, {soc});
    CHECK(quo.target->dim() == 4);
    CHECK(quo.target->num_vertices() == 3);
    REQUIRE(quo.target->quiver().num_arrows() == 1);
    CHECK(quo.target->quiver().arrow(0).name == "b");
    CHECK(quo.ideal_basis.rows() == 1);
  }
  SUBCASE("empty generator list") {
    auto quo = quotient_by_elements(a, {});
    CHECK(quo.target->dim() == a->dim());
    CHECK(quo.target->quiver().num_arrows() == 2);
  }
  SUBCASE("idempotent e1") {
    auto quo = quotient_by_elements(a, {a->basis_element(a->trivial_index(0))});
    CHECK(quo.target->dim() == 3);
    CHECK(quo.target->quiver().vertices() == std::vector<std::string>{"2", "3"});
    CHECK(quo.target->quiver().num_arrows() == 1);
  }
}

TEST_CASE("vertex_subalgebra_quotient examples") {
  auto a = corpus::a3sq();
  CHECK(vertex_subalgebra_quotient(a, {1, 2}).target->dim() == 3);
  CHECK(vertex_subalgebra_quotient(a, {0, 1, 2}).target->dim() == 5);
  auto one = vertex_subalgebra_quotient(a, {0});
  CHECK(one.target->dim() == 1);
  CHECK(one.target->quiver().num_arrows() == 0);
  try {
    vertex_subalgebra_quotient(a, {});
    FAIL("expected EmptySupport");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySupport);
  }
}

TEST_CASE("property: quotient dimension drops by the ideal dimension") {
  for (const auto& a : {corpus::a3sq(), corpus::nakayama2(), corpus::path_an(4), corpus::kd3()}) {
    for (std::size_t i = 0; i < a->dim(); ++i) {
      if (a->basis()[i].trivial()) continue;
      auto quo = quotient_by_elements(a, {a->basis_element(i)});
      CHECK(quo.target->dim() + quo.ideal_basis.rows() == a->dim());
      // the projection is multiplicative on basis pairs
      for (std::size_t x = 0; x < a->dim(); ++x)
        for (std::size_t y = 0; y < a->dim(); ++y) {
          const Element lhs = quo.project(a->multiply(a->basis_element(x), a->basis_element(y)));
          const Element rhs = quo.target->multiply(quo.project(a->basis_element(x)),
                                                   quo.project(a->basis_element(y)));
          CHECK(lhs == rhs);
        }
    }
  }
}
