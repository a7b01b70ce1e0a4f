#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "orbikt/character.hpp"
#include "orbikt/error.hpp"

using namespace orbikt;

namespace {

// D4 element indices: R^k = k, S R^k = 4 + k.
constexpr Element kR = 1, kR2 = 2, kS = 4;

Cyclotomic num(std::size_t m, long v) { return Cyclotomic(m, Rational(v)); }

std::vector<GroupPtr> fixture_groups() {
  return {trivial_group(), cyclic_group(2), cyclic_group(4), dihedral_group(4),
          dihedral_group(3), dihedral_group(6), direct_product(*cyclic_group(2), *cyclic_group(2)),
          direct_product(*cyclic_group(3), *cyclic_group(3)),
          make_group(FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 2, 3}}, 64)),
          make_group(FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, 64)),
          make_group(FiniteGroup::from_permutations(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}, 64))};
}

/// Index of the D4 irrep with the given values at R and S.
std::size_t d4_linear(const CharacterTable& t, long at_r, long at_s) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.irrep(i).degree == 1 && t.value(i, kR) == num(4, at_r) && t.value(i, kS) == num(4, at_s)) return i;
  FAIL("linear character not found");
  return 0;
}

}  // namespace

TEST_CASE("Z/2 table") {
  auto t = character_table(cyclic_group(2));
  REQUIRE(t.size() == 2);
  CHECK(t.value(0, 1) == num(2, 1));
  CHECK(t.value(1, 1) == num(2, -1));
}

TEST_CASE("Z/4 table matches brute-force homomorphisms") {
  auto g = cyclic_group(4);
  auto t = character_table(g);
  REQUIRE(t.size() == 4);
  std::set<std::vector<Cyclotomic>> ours, brute;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Cyclotomic> row;
    for (Element x = 0; x < 4; ++x) row.push_back(t.value(i, x));
    ours.insert(row);
  }
  for (const auto& chi : oracle::abelian_characters(*g)) {
    std::vector<Cyclotomic> row;
    for (Element x = 0; x < 4; ++x) row.push_back(Cyclotomic::root_of_unity(4, static_cast<std::int64_t>(chi[x])));
    brute.insert(row);
  }
  CHECK(ours == brute);
  // Row j, class k is i^{jk} for a suitable labelling of rows.
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<Cyclotomic> row;
    for (Element k = 0; k < 4; ++k) row.push_back(Cyclotomic::root_of_unity(4, static_cast<std::int64_t>(j * k)));
    CHECK(ours.count(row) == 1);
  }
}

TEST_CASE("abelian products against brute force") {
  for (auto g : {direct_product(*cyclic_group(2), *cyclic_group(4)), direct_product(*cyclic_group(3), *cyclic_group(3)),
                 cyclic_group(12)}) {
    auto t = character_table(g);
    auto brute = oracle::abelian_characters(*g);
    CHECK(t.size() == brute.size());
    std::set<std::vector<Cyclotomic>> a, b;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::vector<Cyclotomic> row;
      for (Element x = 0; x < g->order(); ++x) row.push_back(t.value(i, x));
      a.insert(row);
    }
    for (const auto& chi : brute) {
      std::vector<Cyclotomic> row;
      for (Element x = 0; x < g->order(); ++x)
        row.push_back(Cyclotomic::root_of_unity(g->exponent(), static_cast<std::int64_t>(chi[x])));
      b.insert(row);
    }
    CHECK(a == b);
  }
}

TEST_CASE("D4 degrees and named characters") {
  auto g = dihedral_group(4);
  auto t = character_table(g);
  REQUIRE(t.size() == 5);
  std::vector<std::size_t> degrees;
  for (const auto& irr : t.irreps()) degrees.push_back(irr.degree);
  CHECK(degrees == std::vector<std::size_t>{1, 1, 1, 1, 2});
  CHECK(d4_linear(t, 1, 1) == 0);
  // chi1, chi2, chi3 in the usual labelling.
  std::set<std::size_t> linear{d4_linear(t, 1, -1), d4_linear(t, -1, -1), d4_linear(t, -1, 1)};
  CHECK(linear.size() == 3);
  CHECK(t.value(4, kR2) == num(4, -2));
  CHECK(t.value(4, kR) == num(4, 0));
}

TEST_CASE("table invariants on fixture groups") {
  for (const auto& g : fixture_groups()) {
    auto t = character_table(g);
    const auto& cd = t.classes();
    CHECK(t.size() == cd.size());
    std::size_t sq = 0;
    for (const auto& irr : t.irreps()) {
      sq += irr.degree * irr.degree;
      CHECK(g->order() % irr.degree == 0);
      CHECK(t.value(irr.id, g->identity()) == num(t.conductor(), static_cast<long>(irr.degree)));
    }
    CHECK(sq == g->order());
    for (const auto& v : t.irrep(0).values) CHECK(v == num(t.conductor(), 1));
    // Row orthogonality over elements.
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        Cyclotomic acc(t.conductor());
        for (Element x = 0; x < g->order(); ++x) acc += t.value(a, x) * t.value(b, x).conj();
        CHECK(acc == num(t.conductor(), a == b ? static_cast<long>(g->order()) : 0));
      }
    // Column orthogonality.
    for (std::size_t i = 0; i < cd.size(); ++i)
      for (std::size_t j = 0; j < cd.size(); ++j) {
        Cyclotomic acc(t.conductor());
        for (std::size_t k = 0; k < t.size(); ++k)
          acc += t.value(k, cd.reps[i]) * t.value(k, cd.reps[j]).conj();
        CHECK(acc == num(t.conductor(), i == j ? static_cast<long>(cd.centralizers[i].order()) : 0));
      }
    // Deterministic ordering.
    for (std::size_t k = 2; k < t.size(); ++k) {
      const auto& a = t.irrep(k - 1);
      const auto& b = t.irrep(k);
      CHECK((a.degree < b.degree || (a.degree == b.degree && a.values < b.values)));
    }
  }
}

TEST_CASE("order bound") {
  CHECK_THROWS_AS(character_table(cyclic_group(20), 10), Error);
  try {
    character_table(cyclic_group(20), 10);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}

TEST_CASE("multiplicities for D4 subgroups") {
  auto g = dihedral_group(4);
  SubgroupTable whole(Subgroup::whole(g));
  const Element rs = g->mul(kR, kS);
  SubgroupTable k1(Subgroup::generated(g, std::vector<Element>{rs}));
  const auto& t = whole.table();
  const std::size_t triv = 0, chi1 = d4_linear(t, 1, -1), chi2 = d4_linear(t, -1, -1), chi3 = d4_linear(t, -1, 1),
                    lambda = 4;
  REQUIRE(k1.size() == 2);
  const std::size_t one = 0, eps = 1;
  CHECK(multiplicity(whole.character(lambda), k1.character(one)) == 1);
  CHECK(multiplicity(whole.character(lambda), k1.character(eps)) == 1);
  CHECK(multiplicity(whole.character(chi2), k1.character(one)) == 1);
  CHECK(multiplicity(whole.character(triv), k1.character(one)) == 1);
  CHECK(multiplicity(whole.character(chi1), k1.character(eps)) == 1);
  CHECK(multiplicity(whole.character(chi3), k1.character(eps)) == 1);
  CHECK(multiplicity(whole.character(chi1), k1.character(one)) == 0);
  for (std::size_t i = 0; i < whole.size(); ++i) CHECK(multiplicity(whole.character(i), whole.character(i)) == 1);
  // A non-character class function is caught.
  auto half = whole.character(chi1);
  std::vector<Cyclotomic> v = half.values();
  v[0] = num(4, 2);
  CHECK_THROWS_AS(multiplicity(ClassFunction(half.domain(), v), k1.character(one)), Error);
}

TEST_CASE("Frobenius reciprocity and degree bookkeeping on all subgroup pairs") {
  for (const auto& g : fixture_groups()) {
    if (g->order() > 24) continue;
    auto subs = oracle::small_subgroups(g);
    std::vector<SubgroupTable> tables;
    for (const auto& s : subs) tables.emplace_back(s);
    for (const auto& big : tables)
      for (const auto& small : tables) {
        if (!big.subgroup().contains(small.subgroup())) continue;
        for (std::size_t tau = 0; tau < big.size(); ++tau) {
          std::size_t total = 0;
          for (std::size_t sigma = 0; sigma < small.size(); ++sigma) {
            const auto res = inner_product(big.character(tau).restrict_to(small.subgroup()), small.character(sigma));
            const auto ind = inner_product(big.character(tau), small.character(sigma).induce_to(big.subgroup()));
            CHECK(res == ind);
            const std::size_t m = multiplicity(big.character(tau), small.character(sigma));
            total += m * small.degree(sigma);
          }
          CHECK(total == big.degree(tau));
        }
      }
  }
}

TEST_CASE("conjugate_irrep") {
  auto g = dihedral_group(4);
  const Element rs = g->mul(kR, kS);
  SubgroupTable k1(Subgroup::generated(g, std::vector<Element>{rs}));
  SubgroupTable moved(k1.subgroup().conjugate(kR));
  CHECK(!(moved.subgroup() == k1.subgroup()));
  // Brute force: transport of the sign character of an order-2 subgroup is the
  // sign character of the image subgroup.
  for (std::size_t sigma = 0; sigma < 2; ++sigma) {
    const std::size_t image = conjugate_irrep(kR, k1, sigma, moved);
    for (Element h : k1.subgroup().elements())
      CHECK(moved.value(image, g->conjugate(kR, h)) == k1.value(sigma, h));
  }
  CHECK(conjugate_irrep(kR, k1, 1, moved) == 1);
  // Identity and inner elements act trivially.
  SubgroupTable whole(Subgroup::whole(g));
  for (std::size_t s = 0; s < whole.size(); ++s) {
    CHECK(conjugate_irrep(g->identity(), whole, s, whole) == s);
    CHECK(conjugate_irrep(kS, whole, s, whole) == s);
  }
}

TEST_CASE("multiplicity is invariant under simultaneous conjugation") {
  auto g = dihedral_group(4);
  auto subs = oracle::small_subgroups(g);
  for (const auto& k : subs)
    for (const auto& l : subs) {
      if (!k.contains(l)) continue;
      SubgroupTable tk(k), tl(l);
      for (Element x = 0; x < g->order(); ++x) {
        SubgroupTable tkx(k.conjugate(x)), tlx(l.conjugate(x));
        for (std::size_t tau = 0; tau < tk.size(); ++tau)
          for (std::size_t sigma = 0; sigma < tl.size(); ++sigma)
            CHECK(multiplicity(tk.character(tau), tl.character(sigma)) ==
                  multiplicity(tkx.character(conjugate_irrep(x, tk, tau, tkx)),
                               tlx.character(conjugate_irrep(x, tl, sigma, tlx))));
      }
    }
}
