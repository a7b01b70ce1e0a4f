#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <set>
#include <vector>

#include "orbikt/character.hpp"
#include "orbikt/group.hpp"
#include "orbikt/numeric.hpp"

namespace oracle {

using orbikt::Element;

/// All subgroups generated by at most two elements (every subgroup of the
/// small groups exercised here).
inline std::vector<orbikt::Subgroup> small_subgroups(const orbikt::GroupPtr& g) {
  std::set<std::vector<Element>> seen;
  std::vector<orbikt::Subgroup> out;
  for (Element a = 0; a < g->order(); ++a)
    for (Element b = a; b < g->order(); ++b) {
      const std::vector<Element> gens{a, b};
      auto s = orbikt::Subgroup::generated(g, gens);
      std::vector<Element> key(s.elements().begin(), s.elements().end());
      if (seen.insert(key).second) out.push_back(s);
    }
  return out;
}

/// Linear characters of an abelian group by brute force over all assignments
/// of e-th roots of unity (exponent e) that respect the multiplication table.
/// Each character is a vector of exponents k with value zeta_e^k.
inline std::vector<std::vector<std::size_t>> abelian_characters(const orbikt::FiniteGroup& g) {
  const std::size_t n = g.order(), e = g.exponent();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> assign(n, 0);
  // Enumerate values on a generating set found greedily, then check the table.
  std::vector<Element> gens;
  {
    std::vector<bool> reached(n, false);
    reached[g.identity()] = true;
    std::vector<Element> span{g.identity()};
    for (Element x = 0; x < n; ++x) {
      if (reached[x]) continue;
      gens.push_back(x);
      span.clear();
      std::fill(reached.begin(), reached.end(), false);
      reached[g.identity()] = true;
      span.push_back(g.identity());
      for (std::size_t i = 0; i < span.size(); ++i)
        for (Element gen : gens) {
          Element y = g.mul(span[i], gen);
          if (!reached[y]) {
            reached[y] = true;
            span.push_back(y);
          }
        }
    }
  }
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    // Propagate along words in the generators, rejecting contradictions.
    std::vector<long> val(n, -1);
    val[g.identity()] = 0;
    std::vector<Element> queue{g.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element y = g.mul(queue[i], gens[k]);
        const long v = static_cast<long>((static_cast<std::size_t>(val[queue[i]]) + choice[k]) % e);
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    if (ok) {
      for (Element a = 0; a < n && ok; ++a)
        for (Element b = 0; b < n && ok; ++b)
          if (static_cast<std::size_t>(val[g.mul(a, b)]) != (static_cast<std::size_t>(val[a] + val[b])) % e) ok = false;
      if (ok) {
        std::vector<std::size_t> chi(n);
        for (Element a = 0; a < n; ++a) chi[a] = static_cast<std::size_t>(val[a]);
        out.push_back(chi);
      }
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == e) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

/// Rank over Q by fraction-free (Bareiss) elimination on a dense matrix.
inline std::size_t bareiss_rank(std::vector<std::vector<orbikt::BigInt>> a) {
  const std::size_t m = a.size();
  if (m == 0) return 0;
  const std::size_t n = a[0].size();
  orbikt::BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] /= prev;  // exact by Sylvester's identity
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Rank over GF(2) by plain dense elimination.
inline std::size_t rank_gf2(const std::vector<std::vector<orbikt::BigInt>>& in) {
  std::vector<std::vector<int>> a;
  for (const auto& row : in) {
    std::vector<int> bits;
    for (const auto& v : row) bits.push_back(mpz_odd_p(v.get_mpz_t()) ? 1 : 0);
    a.push_back(bits);
  }
  const std::size_t m = a.size();
  if (m == 0) return 0;
  const std::size_t n = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != r && a[i][c])
        for (std::size_t j = 0; j < n; ++j) a[i][j] ^= a[r][j];
    ++r;
  }
  return r;
}

/// Determinant by cofactor expansion (tiny matrices only).
inline orbikt::BigInt determinant(const std::vector<std::vector<orbikt::BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  orbikt::BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<orbikt::BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<orbikt::BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const orbikt::BigInt term = a[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : orbikt::BigInt(-term);
  }
  return det;
}

/// Invariant factors via determinantal divisors: d_1 ... d_k is the gcd of all
/// k x k minors. Returns every nonzero factor, units included.
inline std::vector<orbikt::BigInt> invariant_factors_by_minors(const std::vector<std::vector<orbikt::BigInt>>& a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<orbikt::BigInt> divisors{1};
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    orbikt::BigInt g = 0;
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<orbikt::BigInt>> sub;
        for (std::size_t i = 0; i < m; ++i) {
          if (!rsel[i]) continue;
          std::vector<orbikt::BigInt> row;
          for (std::size_t j = 0; j < n; ++j)
            if (csel[j]) row.push_back(a[i][j]);
          sub.push_back(row);
        }
        orbikt::BigInt d = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<orbikt::BigInt> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

}  // namespace oracle
