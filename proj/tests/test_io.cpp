#include "doctest.h"
#include "orbikt/error.hpp"
#include "orbikt/fixtures.hpp"
#include "orbikt/io.hpp"

using namespace orbikt;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("every fixture round-trips through the file formats") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto f = make_fixture(name);
    const auto& g = *f.space.group();
    GroupPtr g2 = parse_group(write_group(g));
    CHECK(*g2 == g);
    for (Element e = 0; e < g.order(); ++e) CHECK(g2->name(e) == g.name(e));
    auto x2 = make_action(parse_complex(write_complex(f.space)), g2);
    CHECK(x2.complex() == f.space.complex());
    CHECK(x2.vertex_action() == f.space.vertex_action());
    CHECK(write_complex(x2) == write_complex(f.space));
  }
}

TEST_CASE("permutation group files") {
  const char* text =
      "# Klein four-group acting on four points\n"
      "group 4\n"
      "perm 4\n"
      "1 0 3 2\n"
      "2 3 0 1\n";
  auto g = parse_group(text);
  CHECK(g->order() == 4);
  CHECK(g->is_abelian());
  CHECK(g->exponent() == 2);
  CHECK(kind_of([] { parse_group("group 6\nperm 4\n1 0 3 2\n"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_group("group 2\nperm 3\n1 0\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("table group files") {
  auto g = parse_group("group 3\ntable\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(*g == *cyclic_group(3));
  CHECK(kind_of([] { parse_group("group 2\ntable\n0 1\n1 1\n"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_group("group 2\ntable\n0 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group("grp 2\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group("group 2\ntable\n0 x\n1 0\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_group("group 300\ntable\n", 256); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_complex("vertices 3\nsimplex 0 1\n\nsimplex 1 7\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("builtin group specs") {
  CHECK(*builtin_group("cyclic 5") == *cyclic_group(5));
  CHECK(*builtin_group("dihedral 4") == *dihedral_group(4));
  CHECK(builtin_group("trivial")->order() == 1);
  auto p = builtin_group("product(cyclic 2, dihedral 3)");
  CHECK(p->order() == 12);
  CHECK(*p == *direct_product(*cyclic_group(2), *dihedral_group(3)));
  CHECK(kind_of([] { builtin_group("cyclic"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { builtin_group("klein"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { builtin_group("cyclic 3 4"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { builtin_group("cyclic 1000", 256); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("complex files with and without an action") {
  auto file = parse_complex("vertices 4\nsimplex 0 1\nsimplex 1 2\nsimplex 2 3\nsimplex 0 3\n");
  CHECK(file.generators.empty());
  auto trivial = make_action(file, cyclic_group(2));
  for (Vertex v = 0; v < 4; ++v) CHECK(trivial.act(1, v) == v);

  auto reflected = parse_complex("vertices 4\nsimplex 0 1\nsimplex 1 2\nsimplex 2 3\nsimplex 0 3\nact 1 : 0 3 2 1\n");
  auto x = make_action(reflected, cyclic_group(2));
  CHECK(x.act(1, 1) == 3);
  CHECK(x.complex().count(1) == 4);

  auto acts = parse_action("act 1: 1 2 3 0\n");
  REQUIRE(acts.size() == 1);
  CHECK(acts[0].first == 1);
  CHECK(acts[0].second == std::vector<Vertex>{1, 2, 3, 0});

  CHECK(kind_of([] { parse_complex("vertices 2\nsimplex 0 0\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_complex("vertices 2\nface 0 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { make_action(parse_complex("vertices 2\nsimplex 0 1\nact 5 : 1 0\n"), cyclic_group(2)); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("filtration files") {
  auto f = parse_filtration("# two steps\nstep: (0, 1) (2,0)\nstep 2: (1, 1)\n\nstep:\n");
  REQUIRE(f.steps.size() == 3);
  CHECK(f.steps[0].size() == 2);
  CHECK(f.steps[0][1].unit == 2);
  CHECK(f.steps[0][1].irrep == 0);
  CHECK(f.steps[1].size() == 1);
  CHECK(f.steps[2].empty());
  CHECK(kind_of([] { parse_filtration("step: (0, 1) junk\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_filtration("(0, 1)\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("element lists by name or index") {
  auto g = dihedral_group(4);
  auto e = parse_elements(*g, {"R^2,S", "5"});
  REQUIRE(e.size() == 3);
  CHECK(e[0] == 2);
  CHECK(e[1] == 4);
  CHECK(e[2] == 5);
  CHECK(kind_of([&] { parse_elements(*g, {"T"}); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_elements(*g, {"8"}); }) == ErrorKind::InvalidInput);
}
