#include <doctest.h>

#include "relcomm/catalog.hpp"
#include "relcomm/errors.hpp"
#include "relcomm/families.hpp"
#include "relcomm/group_spec.hpp"

using namespace relcomm;

namespace {

std::string schema_field(std::string const& text) {
  try {
    parse_group_spec(text);
  } catch (SchemaError const& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("documented spec examples") {
  auto d = parse_group_spec(R"({"dihedral": 9})");
  CHECK(d.kind == GroupSpec::Kind::Dihedral);
  CHECK(d.n == 9);
  CHECK(expected_order(d) == 18);
  CHECK(build_group(d).order() == 18);

  auto f20 = parse_group_spec(
      R"({"semidirect": {"n": {"cyclic": 5}, "h": {"cyclic": 4}, "action": {"h_gen": [0,2,4,1,3]}}})");
  CHECK(f20.kind == GroupSpec::Kind::Semidirect);
  auto g = build_group(f20);
  CHECK(g.order() == 20);
  CHECK_FALSE(is_abelian(g));
  CHECK(center(g).order() == 1);

  auto a4s4 = parse_group_spec(R"({"product": [{"alternating": 4}, {"symmetric": 4}]})");
  CHECK(a4s4.kind == GroupSpec::Kind::Product);
  CHECK(expected_order(a4s4) == 288);
}

TEST_CASE("every constructor kind builds") {
  struct Row {
    char const* text;
    std::size_t order;
  };
  Row rows[] = {
      {R"({"cyclic": 7})", 7},
      {R"({"dihedral": 1})", 2},
      {R"({"dicyclic": 2})", 8},
      {R"({"symmetric": 5})", 120},
      {R"({"alternating": 5})", 60},
      {R"({"elementary_abelian": {"p": 3, "rank": 2}})", 9},
      {R"({"heisenberg": 3})", 27},
      {R"({"sl23": true})", 24},
      {R"({"perm": {"degree": 4, "generators": [[[0,1,2]], [[0,1],[2,3]]]}})", 12},
      {R"({"table": [[0,1],[1,0]]})", 2},
      {R"({"product": [{"cyclic": 2}, {"cyclic": 3}]})", 6},
      {R"({"semidirect": {"n": {"cyclic": 9}, "h": {"cyclic": 2}, "action": {"gens": [1], "images": [[0,8,7,6,5,4,3,2,1]]}}})", 18},
      {R"({"named": "F56"})", 56},
      {R"j({"named": "SG(16,3)"})j", 16},
  };
  for (auto const& row : rows) {
    CAPTURE(row.text);
    auto spec = parse_group_spec(row.text);
    auto g = build_group(spec);
    CHECK(g.order() == row.order);
    auto e = expected_order(spec);
    CHECK((e == 0 || e == row.order));
  }
}

TEST_CASE("display names") {
  auto g = build_group(parse_group_spec(R"({"cyclic": 4, "name": "Z4"})"));
  CHECK(g.name() == "Z4");
}

TEST_CASE("semidirect with the trivial action is the direct product") {
  auto s = build_group(parse_group_spec(
      R"({"semidirect": {"n": {"cyclic": 3}, "h": {"cyclic": 2}, "action": {"h_gen": [0,1,2]}}})"));
  CHECK(is_abelian(s));
  CHECK(s.order() == 6);
}

TEST_CASE("round trip") {
  char const* texts[] = {
      R"({"dihedral": 9})",
      R"({"product": [{"alternating": 4}, {"symmetric": 4}], "name": "A4xS4"})",
      R"({"semidirect": {"n": {"cyclic": 5}, "h": {"cyclic": 4}, "action": {"h_gen": [0,2,4,1,3]}}})",
      R"({"semidirect": {"n": {"cyclic": 9}, "h": {"cyclic": 2}, "action": {"gens": [1], "images": [[0,8,7,6,5,4,3,2,1]]}}})",
      R"({"perm": {"degree": 4, "generators": [[[0,1,2]], [[0,1],[2,3]]]}})",
      R"({"table": [[0,1],[1,0]]})",
      R"({"elementary_abelian": {"p": 2, "rank": 3}})",
      R"({"sl23": true})",
      R"({"named": "Q8"})",
  };
  for (auto t : texts) {
    CAPTURE(t);
    auto spec = parse_group_spec(t);
    CHECK(parse_group_spec(serialize(spec)) == spec);
    CHECK(serialize(parse_group_spec(serialize(spec))) == serialize(spec));
  }
}

TEST_CASE("malformed JSON is a parse error with a position") {
  try {
    parse_group_spec(R"({"cyclic": })");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 12);
  }
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
}

TEST_CASE("schema errors name the field") {
  CHECK(schema_field(R"({"cyclic": 0})") == "cyclic");
  CHECK(schema_field(R"({"cyclic": -3})") == "cyclic");
  CHECK(schema_field(R"({"cyclic": "7"})") == "cyclic");
  CHECK(schema_field(R"({"symmetric": 7})") == "symmetric");
  CHECK(schema_field(R"({"heisenberg": 4})") == "heisenberg");
  CHECK(schema_field(R"({"elementary_abelian": {"p": 4, "rank": 2}})") == "elementary_abelian.p");
  CHECK(schema_field(R"({"elementary_abelian": {"p": 2}})") == "elementary_abelian.rank");
  CHECK(schema_field(R"({"sl23": 1})") == "sl23");
  CHECK(schema_field(R"({"perm": {"degree": 3, "generators": [[[0,3]]]}})") ==
        "perm.generators[0][0][1]");
  CHECK(schema_field(R"({"perm": {"degree": 3, "generators": [[[0,1],[1,2]]]}})") ==
        "perm.generators[0][1]");
  CHECK(schema_field(R"({"table": [[0,1],[1]]})") == "table[1]");
  CHECK(schema_field(R"({"product": [{"cyclic": 2}]})") == "product");
  CHECK(schema_field(R"({"product": [{"cyclic": 2}, {"bogus": 1}]})") == "product[1].bogus");
  CHECK(schema_field(R"({"semidirect": {"n": {"cyclic": 2}, "h": {"cyclic": 2}}})") ==
        "semidirect.action");
  CHECK(schema_field(R"({"cyclic": 2, "dihedral": 2})") == "spec");
  CHECK(schema_field(R"({})") == "spec");
  CHECK(schema_field(R"([1, 2])") == "spec");
  CHECK(schema_field(R"({"named": 3})") == "named");
  CHECK(schema_field(R"({"cyclic": 2, "name": 3})") == "name");
}

TEST_CASE("build-time validation") {
  CHECK_THROWS_AS(build_group(parse_group_spec(
                      R"({"semidirect": {"n": {"cyclic": 5}, "h": {"cyclic": 4}, "action": {"h_gen": [0,1,1,3,4]}}})")),
                  InputError);
  // x -> 2x has order 4 on C5, not a homomorphism image for C2.
  CHECK_THROWS_AS(build_group(parse_group_spec(
                      R"({"semidirect": {"n": {"cyclic": 5}, "h": {"cyclic": 2}, "action": {"h_gen": [0,2,4,1,3]}}})")),
                  NotAHomomorphism);
  CHECK_THROWS_AS(build_group(parse_group_spec(R"({"table": [[0,1],[0,1]]})")), NotAGroup);
  CHECK_THROWS_AS(build_group(parse_group_spec(R"({"named": "nope"})")), InputError);
}

TEST_CASE("order cap") {
  auto spec = parse_group_spec(R"({"product": [{"symmetric": 5}, {"symmetric": 5}]})");
  CHECK(expected_order(spec) == 14400);
  CHECK_THROWS_AS(build_group(spec), OrderCapExceeded);
  CHECK_THROWS_AS(build_group(parse_group_spec(R"({"cyclic": 100})"), 50), OrderCapExceeded);
  CHECK(build_group(parse_group_spec(R"({"cyclic": 100})"), 100).order() == 100);
}
