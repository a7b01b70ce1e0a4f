#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbikt/fixtures.hpp"
#include "orbikt/homology.hpp"

using namespace orbikt;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

Dense random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int range, int zero_bias) {
  std::uniform_int_distribution<int> val(-range, range), zero(0, 99);
  Dense a(m, std::vector<BigInt>(n));
  for (auto& row : a)
    for (auto& v : row) v = zero(rng) < zero_bias ? 0 : val(rng);
  return a;
}

std::vector<BigInt> nonunit(const std::vector<BigInt>& factors) {
  std::vector<BigInt> out;
  for (const auto& f : factors)
    if (abs(f) != 1) out.push_back(abs(f));
  return out;
}

/// Homology ranks from Bareiss ranks of the dense boundary matrices.
std::vector<std::size_t> betti_by_bareiss(const SimplicialComplex& x) {
  auto cc = chain_complex(x);
  std::vector<std::size_t> ranks(cc.dims.size() + 1, 0);
  for (std::size_t k = 1; k < cc.dims.size(); ++k) ranks[k] = oracle::bareiss_rank(cc.boundary[k].dense());
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k < cc.dims.size(); ++k) betti.push_back(cc.dims[k] - ranks[k] - ranks[k + 1]);
  return betti;
}

/// Number of fixed simplices of g, with alternating sign.
long fixed_euler(const GSimplicialComplex& x, Element g) {
  long chi = 0;
  for (std::size_t d = 0; static_cast<int>(d) <= x.complex().dimension(); ++d)
    for (std::size_t i = 0; i < x.complex().count(d); ++i)
      if (x.act(g, SimplexRef{d, i}) == i) chi += (d % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace

TEST_CASE("homology of basic spaces") {
  auto pt = homology_integral(point_complex());
  CHECK(pt.betti == std::vector<std::size_t>{1});
  auto circle = homology_integral(circle_complex(5));
  CHECK(circle.betti == std::vector<std::size_t>{1, 1});
  auto sphere = homology_integral(sphere_complex());
  CHECK(sphere.betti == std::vector<std::size_t>{1, 0, 1});
  auto torus = homology_integral(torus_complex());
  CHECK(torus.betti == std::vector<std::size_t>{1, 2, 1});
  for (const auto& t : torus.torsion) CHECK(t.empty());
}

TEST_CASE("projective plane torsion agrees with independent ranks") {
  auto rp2 = rp2_complex();
  for (const auto& e : rp2.simplices(1)) {
    std::size_t cofaces = 0;
    for (const auto& t : rp2.simplices(2))
      if (std::includes(t.begin(), t.end(), e.begin(), e.end())) ++cofaces;
    CHECK(cofaces == 2);
  }
  auto h = homology_integral(rp2);
  CHECK(h.betti == std::vector<std::size_t>{1, 0, 0});
  CHECK(h.torsion[1] == std::vector<BigInt>{2});
  CHECK(h.torsion[0].empty());
  CHECK(h.torsion[2].empty());
  CHECK(betti_by_bareiss(rp2) == h.betti);
  // Over GF(2) the boundary ranks drop, giving Betti numbers (1, 1, 1).
  auto cc = chain_complex(rp2);
  const auto r1 = oracle::rank_gf2(cc.boundary[1].dense()), r2 = oracle::rank_gf2(cc.boundary[2].dense());
  CHECK(cc.dims[1] - r1 - r2 == 1);
  CHECK(cc.dims[2] - r2 == 1);
  auto co = cohomology_integral(h);
  CHECK(co.betti == std::vector<std::size_t>{1, 0, 0});
  CHECK(co.torsion[2] == std::vector<BigInt>{2});
  CHECK(co.torsion[1].empty());
}

TEST_CASE("boundary of boundary vanishes") {
  for (const auto& name : fixture_names()) {
    auto cc = chain_complex(make_fixture(name).space.complex());
    for (std::size_t k = 2; k < cc.boundary.size(); ++k) CHECK((cc.boundary[k - 1] * cc.boundary[k]).is_zero());
  }
  auto sd = barycentric_subdivide(rp2_complex());
  auto cc = chain_complex(sd);
  CHECK((cc.boundary[1] * cc.boundary[2]).is_zero());
}

TEST_CASE("Betti numbers match dense ranks on fixtures") {
  for (const auto& name : fixture_names()) {
    const auto f = make_fixture(name);
    const auto& c = f.space.complex();
    CHECK(homology_integral(c).betti == betti_by_bareiss(c));
  }
}

TEST_CASE("Smith form against determinantal divisors") {
  std::mt19937_64 rng(0x5eed0001);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    auto a = random_matrix(rng, m, n, trial % 2 ? 9 : 3, 30);
    auto snf = smith_normal_form(SparseMatrix::from_dense(a));
    auto factors = oracle::invariant_factors_by_minors(a);
    CHECK(snf.rank == factors.size());
    CHECK(snf.torsion == nonunit(factors));
  }
}

TEST_CASE("Smith form rank on larger sparse matrices") {
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 10 + rng() % 30, n = 10 + rng() % 30;
    auto a = random_matrix(rng, m, n, 2, 85);
    auto snf = smith_normal_form(SparseMatrix::from_dense(a));
    CHECK(snf.rank == oracle::bareiss_rank(a));
    // Invariant factors form a divisibility chain.
    for (std::size_t i = 1; i < snf.torsion.size(); ++i) CHECK(snf.torsion[i] % snf.torsion[i - 1] == 0);
  }
}

TEST_CASE("known Smith forms") {
  Dense diag{{2, 0, 0}, {0, 3, 0}, {0, 0, 0}};
  auto s = smith_normal_form(SparseMatrix::from_dense(diag));
  CHECK(s.rank == 2);
  CHECK(s.torsion == std::vector<BigInt>{6});
  Dense pair{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto p = smith_normal_form(SparseMatrix::from_dense(pair));
  CHECK(p.rank == 3);
  CHECK(p.torsion == std::vector<BigInt>{2, 6, 12});
  CHECK(smith_normal_form(SparseMatrix(3, 2)).rank == 0);
  CHECK(rank_mod_p(SparseMatrix::from_dense(pair), 2) == 0);
  CHECK(rank_mod_p(SparseMatrix::from_dense(pair), 5) == 3);
}

TEST_CASE("K-theory ranks from even and odd Betti numbers") {
  CHECK(k_ranks(interval_complex()) == KRanks{1, 0});
  CHECK(k_ranks(torus_complex()) == KRanks{2, 2});
  CHECK(k_ranks(sphere_complex()) == KRanks{2, 0});
  CHECK(k_ranks(rp2_complex()) == KRanks{1, 0});
  auto z4 = regular_quotient(make_fixture("z4-torus").space);
  CHECK(k_ranks(z4.quotient.complex) == KRanks{2, 0});
}

TEST_CASE("Euler characteristic equals alternating Betti sum") {
  for (const auto& name : fixture_names()) {
    const auto f = make_fixture(name);
    const auto& c = f.space.complex();
    auto h = homology_integral(c);
    long alt = 0;
    for (std::size_t k = 0; k < h.betti.size(); ++k)
      alt += (k % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti[k]);
    CHECK(euler_characteristic(c) == alt);
  }
  CHECK(euler_characteristic(torus_complex()) == 0);
  CHECK(euler_characteristic(rp2_complex()) == 1);
}

TEST_CASE("subdivision preserves homology") {
  for (const auto& c : {circle_complex(3), sphere_complex(), rp2_complex()}) {
    auto a = homology_integral(c), b = homology_integral(barycentric_subdivide(c));
    CHECK(a.betti == b.betti);
    CHECK(a.torsion == b.torsion);
  }
}

TEST_CASE("chain maps") {
  for (const std::string name : {"d4-torus", "z4-torus", "z2-flip-torus", "z2-circle"}) {
    auto f = make_fixture(name);
    const auto& x = f.space;
    auto cc = chain_complex(x.complex());
    auto as_matrix = [&](Element g, std::size_t k) {
      SparseMatrix m(x.complex().count(k), x.complex().count(k));
      auto map = chain_map(x, g, k);
      for (std::size_t i = 0; i < map.size(); ++i) m.set_column(i, {{map[i].second, BigInt(map[i].first)}});
      return m;
    };
    for (Element g = 0; g < x.group()->order(); ++g) {
      long lefschetz = 0;
      for (std::size_t k = 0; static_cast<int>(k) <= x.complex().dimension(); ++k) {
        auto fk = as_matrix(g, k);
        if (k > 0) {
          auto lhs = cc.boundary[k] * fk;
          auto rhs = as_matrix(g, k - 1) * cc.boundary[k];
          CHECK(lhs.dense() == rhs.dense());
        }
        // g^ord is the identity on chains.
        auto power = fk;
        for (std::size_t e = 1; e < x.group()->element_order(g); ++e) power = power * fk;
        SparseMatrix id(fk.rows(), fk.cols());
        for (std::size_t i = 0; i < fk.cols(); ++i) id.set_column(i, {{i, BigInt(1)}});
        CHECK(power.dense() == id.dense());
        long trace = 0;
        for (std::size_t i = 0; i < fk.cols(); ++i)
          for (const auto& [r, v] : fk.column(i))
            if (r == i) trace += v.get_si();
        lefschetz += (k % 2 == 0 ? 1 : -1) * trace;
      }
      // Admissible actions fix simplices pointwise, so the trace counts fixed simplices.
      CHECK(lefschetz == fixed_euler(x, g));
      CHECK(lefschetz == euler_characteristic(fixed_subcomplex(x, {g}).complex));
    }
  }
}

TEST_CASE("invariant rational cohomology") {
  auto trivial = make_fixture("trivial-on(torus)");
  CHECK(invariant_cohomology_dims(trivial.space) == std::vector<std::size_t>{1, 2, 1});
  auto d4 = make_fixture("d4-torus");
  CHECK(invariant_cohomology_dims(d4.space) == std::vector<std::size_t>{1, 0, 0});
  auto flip = make_fixture("z2-flip-torus");
  CHECK(invariant_cohomology_dims(flip.space) == std::vector<std::size_t>{1, 0, 1});
  // Rationally the invariants compute the cohomology of the quotient.
  for (const std::string name : {"d4-torus", "z4-torus", "z2-flip-torus", "z2-circle"}) {
    auto f = make_fixture(name);
    auto q = regular_quotient(f.space);
    auto h = homology_integral(q.quotient.complex).betti;
    auto inv = invariant_cohomology_dims(f.space);
    h.resize(inv.size(), 0);
    CHECK(inv == h);
  }
}
