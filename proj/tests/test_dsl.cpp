#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "golden.hpp"
#include "json.hpp"
#include "taured/dsl.hpp"
#include "taured/emit.hpp"
#include "taured/error.hpp"

using namespace taured;

namespace {

std::string algebra_text(const std::string& name) {
  std::ifstream in(std::string(TAURED_ALGEBRA_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse_algebra_file(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

std::string message_of(const std::string& text) {
  try {
    parse_algebra_file(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse examples") {
  const AlgebraFile f = parse_algebra_file(algebra_text("a3sq.alg"));
  CHECK(f.name == "a3sq");
  CHECK(f.vertices == std::vector<std::string>{"1", "2", "3"});
  REQUIRE(f.relations.size() == 1);
  CHECK(f.relations[0].size() == 1);
  const auto a = build_algebra_file(f);
  CHECK(a->dim() == corpus::a3sq()->dim());
  CHECK(build_inventory(a).size() == 5);

  const AlgebraFile sq = parse_algebra_file(algebra_text("square.alg"));
  REQUIRE(sq.relations.size() == 1);
  REQUIRE(sq.relations[0].size() == 2);
  CHECK(sq.relations[0][0].coeff == 1);
  CHECK(sq.relations[0][1].coeff == -1);
  CHECK(build_algebra_file(sq)->dim() == 9);

  CHECK(kind_of("vertices 1 2\narrow a 1 9\n") == ErrorKind::UnknownVertex);
  CHECK(message_of("vertices 1 2\narrow a 1 9\n").find("line 2, column 11") != std::string::npos);
}

TEST_CASE("parse accepts the full relation grammar") {
  const std::string head = "vertices 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\n";
  const auto f = parse_algebra_file(head + "relation 2*(a b) + 1/3*(c d)  # comment\n");
  REQUIRE(f.relations[0].size() == 2);
  CHECK(f.relations[0][0].coeff == 2);
  CHECK(f.relations[0][1].coeff == mpq_class(1, 3));
  const auto g = parse_algebra_file(head + "relation -(a b) -2*(c d)\n");
  CHECK(g.relations[0][0].coeff == -1);
  CHECK(g.relations[0][1].coeff == -2);
  const auto h = parse_algebra_file(head + "relation a b - c d\n");
  CHECK(h.relations[0][1].arrows == std::vector<std::string>{"c", "d"});
  CHECK(parse_algebra_file("field fp 7\nvertices 1\n").field == Field::prime(7));
}

TEST_CASE("parse errors carry locations and kinds") {
  const std::string head = "vertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\n";
  CHECK(kind_of(head + "relation a c\n") == ErrorKind::InvalidRelation);
  CHECK(message_of(head + "relation a c\n").find("line 5, column 12") != std::string::npos);
  CHECK(kind_of(head + "relation (a b) - c\n") == ErrorKind::InvalidRelation);
  CHECK(kind_of(head + "relation a b + (b a)\n") == ErrorKind::InvalidRelation);
  CHECK(kind_of(head + "relation a x\n") == ErrorKind::UnknownArrow);
  CHECK(kind_of(head + "relation (a b\n") == ErrorKind::Parse);
  CHECK(kind_of(head + "relation (a b) (a b)\n") == ErrorKind::Parse);
  CHECK(kind_of(head + "relation\n") == ErrorKind::Parse);
  CHECK(kind_of("vertices 1 1\n") == ErrorKind::InvalidQuiver);
  CHECK(kind_of("vertices 1\narrow a 1 1\narrow a 1 1\n") == ErrorKind::InvalidQuiver);
  CHECK(kind_of("frobnicate\n") == ErrorKind::Parse);
  CHECK(kind_of("field fp 8\n") == ErrorKind::Parse);
  CHECK(kind_of("field complex\n") == ErrorKind::Parse);
  CHECK(kind_of("vertices 1 2\narrow 3 1 2\n") == ErrorKind::Parse);
  CHECK(kind_of("vertices 1 2\narrow a 1 2\nmodule M 1 1\n") == ErrorKind::Parse);
  CHECK(kind_of("vertices 1 2\narrow a 1 2\nmodule M 1\nend\n") == ErrorKind::InvalidRepresentation);
  CHECK(kind_of("vertices 1 2\narrow a 1 2\nmodule M 1 1\nmap a 1 0\nend\n") == ErrorKind::InvalidRepresentation);
  CHECK(kind_of("vertices 1 2\narrow a 1 2\nmodule M 1 1\narrow b 1 2\nend\n") == ErrorKind::Parse);
  CHECK(kind_of("end\n") == ErrorKind::Parse);
  CHECK(message_of("vertices 1\nfrobnicate\n").find("line 2, column 1") != std::string::npos);
}

TEST_CASE("property: parse . emit . parse = parse") {
  const std::vector<std::string> texts{
      algebra_text("a3sq.alg"),
      algebra_text("nakayama2.alg"),
      algebra_text("square.alg"),
      algebra_text("a3sq_modules.alg"),
      "vertices 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation -3/2*(a b) + (c d)\n",
      "algebra empty\n",
  };
  for (const auto& t : texts) {
    const std::string once = emit_algebra_file(parse_algebra_file(t));
    const std::string twice = emit_algebra_file(parse_algebra_file(once));
    CHECK(once == twice);
  }
  // emitting a built algebra describes the same algebra
  for (const auto& a : {corpus::a3sq(), corpus::nakayama2(), corpus::kd3()}) {
    const auto back = build_algebra_file(parse_algebra_file(emit_algebra_file(describe_algebra(*a, "x"))));
    CHECK(back->dim() == a->dim());
    CHECK(back->quiver().vertices() == a->quiver().vertices());
    CHECK(enumerate_stpairs(build_inventory(back)).size() == enumerate_stpairs(build_inventory(a)).size());
  }
}

TEST_CASE("explicit inventories") {
  const AlgebraFile f = parse_algebra_file(algebra_text("a3sq_modules.alg"));
  REQUIRE(f.modules.size() == 5);
  // a missing map line reads as zero and is emitted explicitly
  CHECK(f.modules[1].maps.empty());
  CHECK(f.modules[0].maps.size() == 1);
  const auto a = build_algebra_file(f);
  const auto inv = build_inventory(a, file_backend(f, a));
  CHECK(inv.warnings().empty());
  CHECK(enumerate_stpairs(inv).size() == 12);
  CHECK(inv.record(0).name == "P1");

  // maps violating a relation
  const std::string bad = "vertices 1 2 3\narrow a 1 2\narrow b 2 3\nrelation a b\nmodule M 1 1 1\nmap a 1\nmap b 1\nend\n";
  const AlgebraFile g = parse_algebra_file(bad);
  const auto ga = build_algebra_file(g);
  CHECK_THROWS_AS(file_backend(g, ga), Error);
}

TEST_CASE("field overrides") {
  CHECK(parse_field("rational") == Field::rational());
  CHECK(parse_field("fp:5") == Field::prime(5));
  CHECK(parse_field("fp 5") == Field::prime(5));
  CHECK_THROWS_AS(parse_field("fp:4"), Error);
  CHECK_THROWS_AS(parse_field("reals"), Error);
  const auto a = build_algebra_file(parse_algebra_file(algebra_text("a3sq.alg")), Field::prime(3));
  CHECK(a->field() == Field::prime(3));
  CHECK(enumerate_stpairs(build_inventory(a)).size() == 12);
}

TEST_CASE("emit_dot examples") {
  CHECK(emit_dot(PosetQuiver{}) == "digraph {\n}\n");

  const auto inv = build_inventory(corpus::a3sq());
  const auto pairs = enumerate_stpairs(inv);
  const auto h = hasse(inv, pairs);
  std::vector<bool> tilt;
  for (const auto& p : pairs) tilt.push_back(p.is_tau_tilting);
  const std::string dot = emit_dot(h, {tilt, {}, false});
  CHECK(dot == golden::read_text("a3sq_hasse.dot"));
  std::size_t nodes = 0, edges = 0, doubled = 0;
  std::istringstream lines(dot);
  for (std::string l; std::getline(lines, l);) {
    nodes += l.find("[label=") != std::string::npos;
    edges += l.find("->") != std::string::npos;
    doubled += l.find("peripheries=2") != std::string::npos;
  }
  CHECK(nodes == 12);
  CHECK(edges == 18);
  CHECK(doubled == 3);

  const std::string ascii = emit_dot(h, {tilt, {}, true});
  CHECK(ascii.find("⊕") == std::string::npos);
  CHECK(ascii.find("\"1/2+2/3+3\"") != std::string::npos);
  CHECK(ascii_label("b⁺") == "b^+");
}

TEST_CASE("emit_dot marks N in the quotient Hasse quiver") {
  auto a = corpus::a3sq();
  const Quiver& q = a->quiver();
  const auto bar = quotient_by_elements(a, {a->path_element(make_path(q, {*q.find_arrow("a")}))}).target;
  const auto inv = build_inventory(bar);
  const auto pairs = enumerate_stpairs(inv);
  std::vector<bool> red, tilt;
  for (const auto& p : pairs) {
    red.push_back(pair_label(inv, p) == "1⊕3");
    tilt.push_back(p.is_tau_tilting);
  }
  const std::string dot = emit_dot(hasse(inv, pairs), {tilt, red, false});
  CHECK(dot.find("[label=\"1⊕3\", color=red, fontcolor=red]") != std::string::npos);
  CHECK(dot == golden::read_text("a3sq_bar_hasse.dot"));
}

TEST_CASE("emit_json schema") {
  const auto inv = build_inventory(corpus::a3sq());
  const auto pairs = enumerate_stpairs(inv);
  const auto doc = nlohmann::ordered_json::parse(emit_json("a3sq", inv, pairs, hasse(inv, pairs)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"algebra", "indecomposables", "stpairs", "hasse"});
  CHECK(doc["indecomposables"].size() == 5);
  CHECK(doc["indecomposables"][0]["name"] == "1/2");
  CHECK(doc["indecomposables"][0]["dim_vector"] == nlohmann::json::array({1, 1, 0}));
  REQUIRE(doc["stpairs"].size() == 12);
  keys.clear();
  for (const auto& [k, v] : doc["stpairs"][0].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"id", "module_summands", "support_vertices", "is_tau_tilting"});
  CHECK(doc["hasse"]["edges"].size() == 18);
  auto edges = doc["hasse"]["edges"].get<std::vector<std::pair<int, int>>>();
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  std::size_t tilting = 0;
  for (const auto& p : doc["stpairs"]) tilting += p["is_tau_tilting"].get<bool>();
  CHECK(tilting == 3);
}
