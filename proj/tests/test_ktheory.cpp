#include <map>

#include "doctest.h"
#include "orbikt/error.hpp"
#include "orbikt/fixtures.hpp"
#include "orbikt/ktheory.hpp"

using namespace orbikt;

namespace {

constexpr Element kR = 1, kR2 = 2, kS = 4;

GSimplicialComplex free_cycle() {
  std::vector<Vertex> rot(9);
  for (Vertex k = 0; k < 9; ++k) rot[k] = (k + 3) % 9;
  return GSimplicialComplex::from_generators(circle_complex(9), cyclic_group(3), {{1, rot}});
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalInconsistency;
}

const std::vector<std::string> kIsolated{"z4-torus", "z2-flip-torus", "z2-circle"};

}  // namespace

TEST_CASE("dihedral torus localization") {
  auto f = make_fixture("d4-torus");
  auto bc = bc_decomposition(f.space);
  CHECK(bc.totals == KRanks{9, 0});
  auto g = f.space.group();
  std::map<Element, KRanks> by_rep;
  for (const auto& c : bc.classes) by_rep[c.rep] = c.ranks;
  REQUIRE(by_rep.size() == 5);
  const Element rs = g->mul(kR, kS);
  auto rank_of = [&](Element e) {
    for (const auto& c : bc.classes)
      for (Element x = 0; x < g->order(); ++x)
        if (g->conjugate(x, c.rep) == e) return c.ranks;
    FAIL("no class");
    return KRanks{};
  };
  CHECK(rank_of(0) == KRanks{1, 0});
  CHECK(rank_of(kR2) == KRanks{3, 0});
  CHECK(rank_of(kR) == KRanks{2, 0});
  CHECK(rank_of(kS) == KRanks{2, 0});
  CHECK(rank_of(rs) == KRanks{1, 0});
  std::size_t class_total = 0;
  for (const auto& c : bc.classes) {
    class_total += c.class_size;
    CHECK(c.class_size * c.centralizer_order == 8);
  }
  CHECK(class_total == 8);
}

TEST_CASE("trivial group localization is plain K-theory") {
  for (const std::string name : {"trivial-on(torus)", "trivial-on(rp2)", "trivial-on(sphere)"}) {
    auto f = make_fixture(name);
    CHECK(bc_decomposition(f.space).totals == k_ranks(f.space.complex()));
  }
}

TEST_CASE("trivial action gives K tensor the representation ring") {
  auto x = GSimplicialComplex::trivial_action(torus_complex(), dihedral_group(4));
  auto bc = bc_decomposition(x);
  CHECK(bc.totals == KRanks{10, 10});
}

TEST_CASE("identity class contributes the quotient") {
  for (const auto& name : fixture_names()) {
    auto f = make_fixture(name);
    auto bc = bc_decomposition(f.space);
    const auto& id = bc.classes.front();
    CHECK(id.rep == f.space.group()->identity());
    CHECK(id.ranks == k_ranks(regular_quotient(f.space).quotient.complex));
  }
}

TEST_CASE("Euler characteristics agree across methods") {
  for (const auto& name : fixture_names()) {
    auto f = make_fixture(name);
    const long bc = equivariant_euler(f.space, EulerMethod::BC);
    CHECK(bc == equivariant_euler(f.space, EulerMethod::CommutingPairs));
    if (has_isolated_singularities(f.space)) CHECK(bc == equivariant_euler(f.space, EulerMethod::Isolated));
  }
  auto d4 = make_fixture("d4-torus");
  CHECK(equivariant_euler(d4.space, EulerMethod::BC) == 9);
  CHECK(equivariant_euler(d4.space, EulerMethod::CommutingPairs) == 9);
  CHECK(kind_of([&] { equivariant_euler(d4.space, EulerMethod::Isolated); }) == ErrorKind::NotIsolated);
  auto z4 = make_fixture("z4-torus");
  CHECK(equivariant_euler(z4.space, EulerMethod::Isolated) == 9);
  CHECK(equivariant_euler(free_cycle(), EulerMethod::Isolated) == 0);
}

TEST_CASE("Euler characteristic of the quotient from fixed sets") {
  auto d4 = euler_quotient_check(make_fixture("d4-torus").space);
  CHECK(d4.lhs == 1);
  CHECK(d4.rhs == 1);
  CHECK(d4.holds());
  auto z4 = euler_quotient_check(make_fixture("z4-torus").space);
  CHECK(z4.lhs == 2);
  CHECK(z4.rhs == 2);
  for (const auto& name : fixture_names()) CHECK(euler_quotient_check(make_fixture(name).space).holds());
  auto free = euler_quotient_check(free_cycle());
  CHECK(free.lhs == 0);
  CHECK(free.holds());
}

TEST_CASE("counting identity") {
  auto z4 = bc_vs_count_identity(make_fixture("z4-torus").space);
  CHECK(z4.lhs == 7);
  CHECK(z4.rhs == 7);
  auto circle = bc_vs_count_identity(make_fixture("z2-circle").space);
  CHECK(circle.lhs == 2);
  CHECK(circle.rhs == 2);
  auto free = bc_vs_count_identity(free_cycle());
  CHECK(free.lhs == 0);
  CHECK(free.rhs == 0);
  CHECK(kind_of([] { bc_vs_count_identity(make_fixture("d4-torus").space); }) == ErrorKind::NotApplicable);
}

TEST_CASE("invariant cohomology matches the quotient") {
  for (const auto& name : fixture_names()) CHECK(invariants_check(make_fixture(name).space).all_equal());
  auto flip = invariants_check(make_fixture("z2-flip-torus").space);
  REQUIRE(flip.degrees.size() == 3);
  CHECK(flip.degrees[0].invariant == 1);
  CHECK(flip.degrees[1].invariant == 0);
  CHECK(flip.degrees[2].invariant == 1);
}

TEST_CASE("isolated K-theory") {
  auto circle = isolated_k_theory(make_fixture("z2-circle").space);
  CHECK(circle.k0.to_string() == "Z^3");
  CHECK(circle.k1.to_string() == "0");
  CHECK(circle.boundary == BoundaryStatus::ProvablyZero);
  CHECK(circle.singular_orbits.size() == 2);
  CHECK(circle.torsion_bounds == std::vector<std::size_t>{2, 2});

  auto z4 = isolated_k_theory(make_fixture("z4-torus").space);
  CHECK(z4.k0.rank == 9);
  CHECK(z4.k0.torsion.empty());
  CHECK(z4.k0.exact);
  CHECK(z4.k1.to_string() == "0");
  CHECK(z4.quotient_k0.to_string() == "Z^2");
  CHECK(z4.boundary == BoundaryStatus::ProvablyZero);

  auto flip = isolated_k_theory(make_fixture("z2-flip-torus").space);
  CHECK(flip.k0.to_string() == "Z^6");
  CHECK(flip.k1.to_string() == "0");

  CHECK(kind_of([] { isolated_k_theory(make_fixture("d4-torus").space); }) == ErrorKind::NotIsolated);
}

TEST_CASE("isolated ranks agree with localization") {
  for (const auto& name : kIsolated) {
    auto f = make_fixture(name);
    auto iso = isolated_k_theory(f.space);
    auto bc = bc_decomposition(f.space);
    CHECK(bc.totals == KRanks{iso.k0.rank, iso.k1.rank});
  }
}

TEST_CASE("quotient torsion in low dimension is exact") {
  // Antipodal Z/2 on the octahedron is free with quotient RP2.
  std::vector<Simplex> faces;
  for (Vertex a : {0u, 3u})
    for (Vertex b : {1u, 4u})
      for (Vertex c : {2u, 5u}) faces.push_back({a, b, c});
  auto oct = SimplicialComplex::from_maximal(6, faces);
  auto anti = GSimplicialComplex::from_generators(oct, cyclic_group(2), {{1, {3, 4, 5, 0, 1, 2}}});
  auto r = isolated_k_theory(anti);
  CHECK(r.singular_orbits.empty());
  CHECK(r.quotient_k0.to_string() == "Z + Z/2");
  CHECK(r.quotient_k1.to_string() == "0");
  CHECK(r.k0.to_string() == "Z + Z/2");
  CHECK(r.boundary == BoundaryStatus::ProvablyZero);
  CHECK(bc_decomposition(anti).totals == KRanks{1, 0});
}

TEST_CASE("quotients above dimension two only claim ranks") {
  std::vector<Simplex> facets;
  for (Vertex skip = 0; skip < 5; ++skip) {
    Simplex s;
    for (Vertex v = 0; v < 5; ++v)
      if (v != skip) s.push_back(v);
    facets.push_back(s);
  }
  auto sphere3 = GSimplicialComplex::trivial_action(SimplicialComplex::from_maximal(5, facets), trivial_group());
  auto r = isolated_k_theory(sphere3);
  CHECK(r.quotient_dimension == 3);
  CHECK(r.boundary == BoundaryStatus::TorsionBounded);
  CHECK_FALSE(r.k0.exact);
  CHECK(r.k0.rank == 1);
  CHECK(r.k1.rank == 1);
}

TEST_CASE("localization totals are invariant under subdivision") {
  for (const std::string name : {"z2-circle", "z2-flip-torus", "z4-torus"}) {
    auto f = make_fixture(name);
    auto sub = barycentric_subdivide(f.space);
    CHECK(bc_decomposition(f.space).totals == bc_decomposition(sub).totals);
    CHECK(equivariant_euler(f.space, EulerMethod::BC) == equivariant_euler(sub, EulerMethod::BC));
  }
}

TEST_CASE("forbidding subdivision refuses irregular quotients") {
  auto z4 = make_fixture("z4-torus");
  CHECK(kind_of([&] { bc_decomposition(z4.space, SubdivisionPolicy::Forbid); }) == ErrorKind::NotRegular);
}

TEST_CASE("published value comparison") {
  auto z4 = make_fixture("z4-torus");
  auto iso = isolated_k_theory(z4.space);
  auto bc = bc_decomposition(z4.space);
  auto flags = reference_discrepancies("z4-torus", &iso, &bc);
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].kind == "paper-discrepancy");
  CHECK(flags[0].ref == "ex-sphere");
  CHECK(flags[0].expected == 8);
  CHECK(flags[0].computed == 9);

  auto d4 = make_fixture("d4-torus");
  auto d4bc = bc_decomposition(d4.space);
  CHECK(reference_discrepancies("d4-torus", nullptr, &d4bc).empty());
  CHECK(reference_discrepancies("z2-circle", nullptr, &d4bc).empty());
}
