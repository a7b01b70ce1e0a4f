#include "orbikt/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "homology";
constexpr std::uint64_t kLargePrime = 2147483647;

[[noreturn]] void inconsistent(const std::string& what) { fail(ErrorKind::InternalInconsistency, kModule, what); }

struct IntegerOps {
  using T = BigInt;
  static bool pivotable(const T& v) { return v == 1 || v == -1; }
  // Pivot is a unit, so a_rc / a_pc = a_rc * a_pc.
  static T factor(const T& a_rc, const T& a_pc) { return a_rc * a_pc; }
  static T sub_mul(const T& x, const T& f, const T& y) { return x - f * y; }
  static bool zero(const T& v) { return v == 0; }
};

struct ModOps {
  using T = std::uint64_t;
  std::uint64_t p;
  bool pivotable(const T& v) const { return v != 0; }
  T factor(const T& a_rc, const T& a_pc) const { return modp::mul(a_rc, modp::inv(a_pc, p), p); }
  T sub_mul(const T& x, const T& f, const T& y) const { return modp::sub(x, modp::mul(f, y, p), p); }
  static bool zero(const T& v) { return v == 0; }
};

/// Sparse Gaussian elimination restricted to pivotable entries. Each pivot
/// removes one row and one column (a Schur complement step) and adds one to the
/// rank; whatever cannot be pivoted is left in `rows`.
template <class Ops>
class SparseEliminator {
 public:
  using T = typename Ops::T;

  SparseEliminator(std::size_t nrows, std::size_t ncols, Ops ops) : rows(nrows), cols_(ncols), ops_(ops) {}

  void set(std::size_t r, std::size_t c, T v) {
    if (Ops::zero(v)) return;
    rows[r][c] = std::move(v);
    cols_[c].insert(r);
  }

  std::size_t run() {
    std::size_t rank = 0;
    while (true) {
      bool found = false;
      std::size_t best_cost = 0, pr = 0, pc = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t rlen = rows[r].size();
        if (rlen == 0) continue;
        for (const auto& [c, v] : rows[r]) {
          if (!ops_.pivotable(v)) continue;
          const std::size_t cost = (rlen - 1) * (cols_[c].size() - 1);
          if (!found || cost < best_cost) {
            found = true;
            best_cost = cost;
            pr = r;
            pc = c;
            if (cost == 0) break;
          }
        }
        if (found && best_cost == 0) break;
      }
      if (!found) return rank;
      pivot(pr, pc);
      ++rank;
    }
  }

  std::vector<std::map<std::size_t, T>> rows;

 private:
  void pivot(std::size_t pr, std::size_t pc) {
    const auto prow = rows[pr];
    const T a_pc = prow.at(pc);
    const std::vector<std::size_t> targets(cols_[pc].begin(), cols_[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      auto& row = rows[r];
      const T f = ops_.factor(row.at(pc), a_pc);
      for (const auto& [c, v] : prow) {
        auto it = row.find(c);
        T cur = it == row.end() ? T(0) : it->second;
        T next = ops_.sub_mul(cur, f, v);
        if (Ops::zero(next)) {
          if (it != row.end()) {
            row.erase(it);
            cols_[c].erase(r);
          }
        } else if (it == row.end()) {
          row.emplace(c, std::move(next));
          cols_[c].insert(r);
        } else {
          it->second = std::move(next);
        }
      }
    }
    for (const auto& [c, v] : prow) cols_[c].erase(pr);
    rows[pr].clear();
  }

  std::vector<std::set<std::size_t>> cols_;
  Ops ops_;
};

/// Diagonal of a dense Smith normal form (absolute values, zeros dropped).
std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool any = false;
      std::size_t bi = t, bj = t;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (!any || abs(a[i][j]) < best)) {
            any = true;
            best = abs(a[i][j]);
            bi = i;
            bj = j;
          }
      if (!any) return diag;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      const BigInt piv = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / piv;
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / piv;
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % piv != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (!divides) continue;
      diag.push_back(abs(piv));
      break;
    }
  }
  return diag;
}

}  // namespace

// ---------------------------------------------------------------------------

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<BigInt>>& rows) {
  SparseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Column col;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r][c] != 0) col.emplace_back(r, rows[r][c]);
    m.columns_[c] = std::move(col);
  }
  return m;
}

void SparseMatrix::set_column(std::size_t c, Column entries) {
  std::map<std::size_t, BigInt> acc;
  for (auto& [r, v] : entries) {
    if (r >= rows_) inconsistent("sparse matrix row index out of range");
    acc[r] += v;
  }
  Column out;
  for (auto& [r, v] : acc)
    if (v != 0) out.emplace_back(r, v);
  columns_.at(c) = std::move(out);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::vector<std::vector<BigInt>> SparseMatrix::dense() const {
  std::vector<std::vector<BigInt>> out(rows_, std::vector<BigInt>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) out[r][c] = v;
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols() != other.rows()) inconsistent("sparse matrix shapes do not compose");
  SparseMatrix out(rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) {
    Column acc;
    for (const auto& [k, v] : other.columns_[c])
      for (const auto& [r, w] : columns_[k]) acc.emplace_back(r, v * w);
    out.set_column(c, std::move(acc));
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_)
    if (!c.empty()) return false;
  return true;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  SparseEliminator<ModOps> e(m.rows(), m.cols(), ModOps{p});
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      BigInt red = v % static_cast<unsigned long>(p);
      if (red < 0) red += static_cast<unsigned long>(p);
      e.set(r, c, red.get_ui());
    }
  return e.run();
}

SmithForm smith_normal_form(const SparseMatrix& m) {
  SparseEliminator<IntegerOps> e(m.rows(), m.cols(), IntegerOps{});
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) e.set(r, c, v);
  SmithForm form;
  form.rank = e.run();

  // Dense pass on the rows and columns that still carry entries.
  std::vector<std::size_t> live_rows;
  std::map<std::size_t, std::size_t> live_cols;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : e.rows[r]) live_cols.emplace(c, 0);
  }
  std::size_t k = 0;
  for (auto& [c, idx] : live_cols) idx = k++;
  std::vector<std::vector<BigInt>> rest(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : e.rows[live_rows[i]]) rest[i][live_cols.at(c)] = v;
  std::vector<BigInt> diag = dense_smith_diagonal(std::move(rest));
  form.rank += diag.size();

  // Normalise to a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  for (const auto& d : diag)
    if (d > 1) form.torsion.push_back(d);

  // Rank over F_p equals the rational rank minus the invariant factors divisible by p.
  for (std::uint64_t p : {std::uint64_t{2}, kLargePrime}) {
    std::size_t divisible = 0;
    for (const auto& d : form.torsion)
      if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) ++divisible;
    if (rank_mod_p(m, p) != form.rank - divisible)
      inconsistent("Smith normal form disagrees with the rank modulo " + std::to_string(p));
  }
  return form;
}

// ---------------------------------------------------------------------------

ChainComplex chain_complex(const SimplicialComplex& x) {
  ChainComplex cc;
  const int top = x.dimension();
  for (int d = 0; d <= top; ++d) cc.dims.push_back(x.count(static_cast<std::size_t>(d)));
  if (top < 0) return cc;
  cc.boundary.emplace_back(0, cc.dims[0]);
  for (std::size_t k = 1; k < cc.dims.size(); ++k) {
    SparseMatrix b(cc.dims[k - 1], cc.dims[k]);
    for (std::size_t j = 0; j < cc.dims[k]; ++j) {
      SparseMatrix::Column col;
      const auto faces = x.facets({k, j});
      for (std::size_t i = 0; i < faces.size(); ++i) col.emplace_back(faces[i], BigInt(i % 2 == 0 ? 1 : -1));
      b.set_column(j, std::move(col));
    }
    cc.boundary.push_back(std::move(b));
  }
  return cc;
}

HomologyResult homology_integral(const SimplicialComplex& x) {
  const ChainComplex cc = chain_complex(x);
  const std::size_t top = cc.dims.size();
  std::vector<SmithForm> forms(top + 1);
  for (std::size_t k = 1; k < top; ++k) forms[k] = smith_normal_form(cc.boundary[k]);
  HomologyResult h;
  long alternating_betti = 0;
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t rk = forms[k].rank, rk1 = k + 1 < top ? forms[k + 1].rank : 0;
    if (rk + rk1 > cc.dims[k]) inconsistent("boundary ranks exceed the chain group");
    h.betti.push_back(cc.dims[k] - rk - rk1);
    h.torsion.push_back(k + 1 < top ? forms[k + 1].torsion : std::vector<BigInt>{});
    alternating_betti += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(h.betti.back());
  }
  if (alternating_betti != x.euler_characteristic()) inconsistent("Euler-Poincare identity fails");
  return h;
}

HomologyResult cohomology_integral(const HomologyResult& homology) {
  HomologyResult c;
  c.betti = homology.betti;
  c.torsion.resize(homology.betti.size());
  for (std::size_t k = 1; k < homology.betti.size(); ++k) c.torsion[k] = homology.torsion[k - 1];
  // Torsion of the top homology group would land one degree higher.
  if (!homology.torsion.empty() && !homology.torsion.back().empty()) {
    c.betti.push_back(0);
    c.torsion.push_back(homology.torsion.back());
  }
  return c;
}

KRanks k_ranks(const HomologyResult& h) {
  KRanks r;
  for (std::size_t k = 0; k < h.betti.size(); ++k) (k % 2 == 0 ? r.even : r.odd) += h.betti[k];
  return r;
}

KRanks k_ranks(const SimplicialComplex& x) { return k_ranks(homology_integral(x)); }

long euler_characteristic(const SimplicialComplex& x) { return x.euler_characteristic(); }

std::vector<std::pair<int, std::size_t>> chain_map(const GSimplicialComplex& x, Element g, std::size_t k) {
  const auto& list = x.complex().simplices(k);
  std::vector<std::pair<int, std::size_t>> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::vector<Vertex> image;
    for (Vertex v : list[i]) image.push_back(x.act(g, v));
    int sign = 1;
    for (std::size_t a = 0; a < image.size(); ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b)
        if (image[a] > image[b]) sign = -sign;
    out.emplace_back(sign, x.act(g, SimplexRef{k, i}));
  }
  return out;
}

std::vector<std::size_t> invariant_cohomology_dims(const GSimplicialComplex& x) {
  x.require_admissible(kModule);
  const auto& c = x.complex();
  const auto& g = *x.group();
  const ChainComplex cc = chain_complex(c);
  const std::size_t top = cc.dims.size();

  // Columns spanning the invariant chains: the averaging operator applied to one simplex per orbit.
  std::vector<SparseMatrix> invariant(top);
  for (std::size_t k = 0; k < top; ++k) {
    std::vector<std::vector<std::pair<int, std::size_t>>> maps;
    for (Element e = 0; e < g.order(); ++e) maps.push_back(chain_map(x, e, k));
    std::vector<bool> seen(cc.dims[k], false);
    std::vector<SparseMatrix::Column> cols;
    for (std::size_t i = 0; i < cc.dims[k]; ++i) {
      if (seen[i]) continue;
      SparseMatrix::Column col;
      for (Element e = 0; e < g.order(); ++e) {
        seen[maps[e][i].second] = true;
        col.emplace_back(maps[e][i].second, BigInt(maps[e][i].first));
      }
      cols.push_back(std::move(col));
    }
    SparseMatrix v(cc.dims[k], cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) v.set_column(j, std::move(cols[j]));
    // Orientation-reversing stabilizers would zero a column; drop those.
    std::vector<SparseMatrix::Column> nonzero;
    for (std::size_t j = 0; j < v.cols(); ++j)
      if (!v.column(j).empty()) nonzero.push_back(v.column(j));
    invariant[k] = SparseMatrix(cc.dims[k], nonzero.size());
    for (std::size_t j = 0; j < nonzero.size(); ++j) invariant[k].set_column(j, std::move(nonzero[j]));
  }
  std::vector<std::size_t> rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) rank[k] = smith_normal_form(cc.boundary[k] * invariant[k]).rank;
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < top; ++k) dims.push_back(invariant[k].cols() - rank[k] - rank[k + 1]);
  return dims;
}

}  // namespace orbikt
