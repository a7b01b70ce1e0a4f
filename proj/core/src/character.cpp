#include "orbikt/character.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "grouptheory";
constexpr std::uint64_t kSplitSeed = 0xd1c5'0b5e;

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

[[noreturn]] void inconsistent(const std::string& what) { fail(ErrorKind::InternalInconsistency, kModule, what); }

u64 choose_prime(std::size_t conductor, std::size_t order) {
  for (u64 p = conductor + 1; p < (u64{1} << 32); p += conductor)
    if (p > 2 * order && modp::is_prime(p)) return p;
  fail(ErrorKind::BoundExceeded, kModule, "no splitting prime below 2^32");
}

/// A primitive e-th root of unity mod p (e divides p - 1).
u64 primitive_root_of_unity(u64 e, u64 p) {
  std::vector<u64> primes;
  for (u64 n = e, q = 2; n > 1; ++q) {
    if (q * q > n) q = n;
    if (n % q == 0) {
      primes.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  for (u64 a = 2; a < p; ++a) {
    const u64 z = modp::pow(a, (p - 1) / e, p);
    bool ok = true;
    for (u64 q : primes)
      if (modp::pow(z, e / q, p) == 1) ok = false;
    if (ok) return z;
  }
  inconsistent("no primitive root of unity modulo the splitting prime");
}

/// Row-reduced basis of a subspace of F_p^n.
struct Subspace {
  Mat rows;
  std::vector<std::size_t> pivots;
};

Subspace rref(Mat rows, u64 p) {
  Subspace s;
  if (rows.empty()) return s;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 inv = modp::inv(rows[r][c], p);
    for (auto& x : rows[r]) x = modp::mul(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = modp::sub(rows[i][k], modp::mul(f, rows[r][k], p), p);
    }
    s.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  s.rows = std::move(rows);
  return s;
}

/// Basis of the null space of a square matrix mod p.
Mat null_space(Mat a, u64 p) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    const u64 inv = modp::inv(a[r][c], p);
    for (auto& x : a[r]) x = modp::mul(x, inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t k = 0; k < n; ++k) a[i][k] = modp::sub(a[i][k], modp::mul(f, a[r][k], p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = modp::sub(0, a[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial mod p via Hessenberg reduction; coefficients
/// constant term first, monic of degree n.
Vec char_poly(Mat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 tinv = modp::inv(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      const u64 u = modp::mul(h[r][m - 1], tinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = modp::sub(h[r][c], modp::mul(u, h[m][c], p), p);
      for (std::size_t c = 0; c < n; ++c) h[c][m] = modp::add(h[c][m], modp::mul(u, h[c][r], p), p);
    }
  }
  // polys[k] is the characteristic polynomial of the leading k x k block.
  std::vector<Vec> polys(n + 1);
  polys[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = polys[m - 1];
    const u64 hmm = h[m - 1][m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = modp::add(next[k + 1], prev[k], p);
      next[k] = modp::sub(next[k], modp::mul(hmm, prev[k], p), p);
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = modp::mul(t, h[i][i - 1], p);
      const u64 f = modp::mul(h[i - 1][m - 1], t, p);
      if (f != 0)
        for (std::size_t k = 0; k < polys[i - 1].size(); ++k)
          next[k] = modp::sub(next[k], modp::mul(f, polys[i - 1][k], p), p);
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

std::vector<u64> roots(const Vec& poly, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = modp::add(modp::mul(acc, x, p), poly[k], p);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

Vec mat_vec(const Mat& m, const Vec& v, u64 p) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] && v[j]) acc = modp::add(acc, modp::mul(m[i][j], v[j], p), p);
    out[i] = acc;
  }
  return out;
}

/// Splits each subspace into eigenspaces of the (commuting) operator m.
std::vector<Subspace> split(const std::vector<Subspace>& spaces, const Mat& m, u64 p) {
  std::vector<Subspace> out;
  for (const auto& s : spaces) {
    const std::size_t d = s.rows.size();
    if (d == 1) {
      out.push_back(s);
      continue;
    }
    // Restricted operator: column i holds the coordinates of m * b_i.
    Mat a(d, Vec(d, 0));
    std::vector<Vec> images(d);
    for (std::size_t i = 0; i < d; ++i) {
      images[i] = mat_vec(m, s.rows[i], p);
      for (std::size_t k = 0; k < d; ++k) a[k][i] = images[i][s.pivots[k]];
    }
    const auto eig = roots(char_poly(a, p), p);
    if (eig.size() == 1) {
      out.push_back(s);
      continue;
    }
    std::size_t total = 0;
    for (u64 lambda : eig) {
      Mat shifted = a;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = modp::sub(shifted[i][i], lambda, p);
      Mat vecs;
      for (const auto& x : null_space(shifted, p)) {
        Vec v(s.rows[0].size(), 0);
        for (std::size_t i = 0; i < d; ++i)
          if (x[i])
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = modp::add(v[k], modp::mul(x[i], s.rows[i][k], p), p);
        vecs.push_back(std::move(v));
      }
      total += vecs.size();
      out.push_back(rref(std::move(vecs), p));
    }
    if (total != d) inconsistent("class algebra operator is not diagonalizable modulo the splitting prime");
  }
  return out;
}

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, ConjugacyData classes, std::size_t conductor, std::vector<Irrep> irreps)
    : group_(std::move(group)), classes_(std::move(classes)), conductor_(conductor), irreps_(std::move(irreps)) {}

CharacterTable character_table(const GroupPtr& group, std::size_t max_order, std::size_t conductor) {
  const auto& g = *group;
  const std::size_t n = g.order();
  if (n > max_order)
    fail(ErrorKind::BoundExceeded, kModule,
         "group order " + std::to_string(n) + " exceeds bound " + std::to_string(max_order));
  if (conductor == 0) conductor = g.exponent();
  if (conductor % g.exponent() != 0) inconsistent("character conductor is not a multiple of the group exponent");

  ConjugacyData cd = conjugacy_data(group);
  const std::size_t r = cd.size();
  const std::size_t id_class = cd.class_of[g.identity()];
  const u64 p = choose_prime(conductor, n);

  // Class matrix j: entry (k, l) counts x in C_j with x^-1 z_l in C_k.
  auto class_matrix = [&](std::size_t j) {
    Mat m(r, Vec(r, 0));
    for (std::size_t l = 0; l < r; ++l)
      for (Element x : cd.classes[j]) {
        const std::size_t k = cd.class_of[g.mul(g.inv(x), cd.reps[l])];
        m[k][l] = modp::add(m[k][l], 1, p);
      }
    return m;
  };

  Subspace whole;
  for (std::size_t i = 0; i < r; ++i) {
    Vec v(r, 0);
    v[i] = 1;
    whole.rows.push_back(std::move(v));
    whole.pivots.push_back(i);
  }
  std::vector<Subspace> spaces{whole};
  auto done = [&] { return spaces.size() == r; };

  std::vector<Mat> mats(r);
  for (std::size_t j = 0; j < r; ++j)
    if (j != id_class) mats[j] = class_matrix(j);

  if (r > 1) {
    // A fixed pseudo-random combination usually separates every eigenspace at once.
    std::mt19937_64 rng(kSplitSeed);
    Mat combo(r, Vec(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      if (j == id_class) continue;
      const u64 c = rng() % p;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          if (mats[j][a][b]) combo[a][b] = modp::add(combo[a][b], modp::mul(c, mats[j][a][b], p), p);
    }
    spaces = split(spaces, combo, p);
  }
  for (std::size_t j = 0; j < r && !done(); ++j)
    if (j != id_class) spaces = split(spaces, mats[j], p);
  if (!done()) inconsistent("class algebra eigenspaces did not separate");

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t j = 0; j < r; ++j) inverse_class[j] = cd.class_of[g.inv(cd.reps[j])];

  // power_class[j][l] = class of rep_j^l.
  std::vector<std::vector<std::size_t>> power_class(r, std::vector<std::size_t>(conductor));
  for (std::size_t j = 0; j < r; ++j) {
    Element x = g.identity();
    for (std::size_t l = 0; l < conductor; ++l) {
      power_class[j][l] = cd.class_of[x];
      x = g.mul(x, cd.reps[j]);
    }
  }

  const u64 z = primitive_root_of_unity(conductor, p);
  std::vector<u64> zpow(conductor);
  zpow[0] = 1;
  for (std::size_t k = 1; k < conductor; ++k) zpow[k] = modp::mul(zpow[k - 1], z, p);
  const u64 inv_e = modp::inv(conductor % p, p);

  std::vector<Irrep> irreps;
  for (const auto& s : spaces) {
    Vec omega = s.rows[0];
    if (omega[id_class] == 0) inconsistent("central character vanishes on the identity class");
    const u64 scale = modp::inv(omega[id_class], p);
    for (auto& w : omega) w = modp::mul(w, scale, p);

    u64 sum = 0;
    for (std::size_t j = 0; j < r; ++j)
      sum = modp::add(sum, modp::mul(modp::mul(omega[j], omega[inverse_class[j]], p),
                                     modp::inv(cd.classes[j].size() % p, p), p), p);
    const u64 d2 = modp::mul(n % p, modp::inv(sum, p), p);
    const std::size_t d = exact_sqrt(static_cast<std::size_t>(d2));
    if (d == 0 || n % d != 0) inconsistent("character degree is not a divisor of the group order");

    Vec chi(r);
    for (std::size_t j = 0; j < r; ++j)
      chi[j] = modp::mul(modp::mul(omega[j], d % p, p), modp::inv(cd.classes[j].size() % p, p), p);

    Irrep irrep;
    irrep.degree = d;
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Rational> mult(conductor, Rational(0));
      std::size_t total = 0;
      for (std::size_t k = 0; k < conductor; ++k) {
        u64 acc = 0;
        for (std::size_t l = 0; l < conductor; ++l)
          acc = modp::add(acc, modp::mul(chi[power_class[j][l]], zpow[(conductor - (k * l) % conductor) % conductor], p),
                          p);
        const u64 m_k = modp::mul(acc, inv_e, p);
        if (m_k > d) inconsistent("eigenvalue multiplicity out of range while lifting a character");
        mult[k] = static_cast<unsigned long>(m_k);
        total += m_k;
      }
      if (total != d) inconsistent("eigenvalue multiplicities do not sum to the degree");
      irrep.values.push_back(Cyclotomic::from_powers(conductor, mult));
    }
    irreps.push_back(std::move(irrep));
  }

  const Cyclotomic one(conductor, Rational(1));
  auto is_trivial = [&](const Irrep& x) {
    return std::all_of(x.values.begin(), x.values.end(), [&](const Cyclotomic& v) { return v == one; });
  };
  std::sort(irreps.begin(), irreps.end(), [&](const Irrep& a, const Irrep& b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end());
  });
  if (irreps.empty() || !is_trivial(irreps[0])) inconsistent("trivial character missing from the table");

  std::size_t deg_sq = 0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    irreps[i].id = i;
    deg_sq += irreps[i].degree * irreps[i].degree;
  }
  if (deg_sq != n) inconsistent("squared character degrees do not sum to the group order");

  // Exact row orthogonality.
  std::vector<std::vector<Cyclotomic>> conj_vals(irreps.size());
  for (std::size_t a = 0; a < irreps.size(); ++a)
    for (const auto& v : irreps[a].values) conj_vals[a].push_back(v.conj());
  for (std::size_t a = 0; a < irreps.size(); ++a)
    for (std::size_t b = a; b < irreps.size(); ++b) {
      Cyclotomic acc(conductor);
      for (std::size_t j = 0; j < r; ++j)
        acc += irreps[a].values[j] * conj_vals[b][j] * Rational(static_cast<unsigned long>(cd.classes[j].size()));
      if (acc != Cyclotomic(conductor, Rational(a == b ? static_cast<unsigned long>(n) : 0UL)))
        inconsistent("lifted characters fail row orthogonality");
    }

  return CharacterTable(group, std::move(cd), conductor, std::move(irreps));
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(Subgroup domain, std::vector<Cyclotomic> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.order()) fail(ErrorKind::InvalidInput, kModule, "class function has the wrong length");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (!(domain_ == o.domain_)) fail(ErrorKind::InvalidInput, kModule, "class functions on different subgroups");
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return ClassFunction(domain_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (!(domain_ == o.domain_)) fail(ErrorKind::InvalidInput, kModule, "class functions on different subgroups");
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= o.values_[i];
  return ClassFunction(domain_, std::move(v));
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(domain_, std::move(v));
}

ClassFunction ClassFunction::restrict_to(const Subgroup& sub) const {
  if (!domain_.contains(sub)) fail(ErrorKind::NotSubgroup, kModule, "restriction target is not contained in the domain");
  std::vector<Cyclotomic> v;
  v.reserve(sub.order());
  for (Element h : sub.elements()) v.push_back(at(h));
  return ClassFunction(sub, std::move(v));
}

ClassFunction ClassFunction::induce_to(const Subgroup& over) const {
  if (!over.contains(domain_)) fail(ErrorKind::NotSubgroup, kModule, "induction source is not contained in the target");
  const auto& g = *over.parent();
  const std::size_t m = conductor();
  const Rational inv_order(1, static_cast<unsigned long>(domain_.order()));
  std::vector<Cyclotomic> v;
  v.reserve(over.order());
  for (Element k : over.elements()) {
    Cyclotomic acc(m);
    for (Element x : over.elements()) {
      const Element y = g.mul(g.mul(x, k), g.inv(x));
      if (domain_.contains(y)) acc += at(y);
    }
    v.push_back(acc * inv_order);
  }
  return ClassFunction(over, std::move(v));
}

ClassFunction ClassFunction::conjugate(Element g) const {
  const auto& grp = *domain_.parent();
  Subgroup target = domain_.conjugate(g);
  std::vector<Cyclotomic> v;
  v.reserve(target.order());
  for (Element h : target.elements()) v.push_back(at(grp.conjugate(grp.inv(g), h)));
  return ClassFunction(std::move(target), std::move(v));
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (!(a.domain() == b.domain())) fail(ErrorKind::InvalidInput, kModule, "inner product of functions on different subgroups");
  Cyclotomic acc(a.conductor());
  for (std::size_t i = 0; i < a.values().size(); ++i) acc += a.values()[i] * b.values()[i].conj();
  return acc * Rational(1, static_cast<unsigned long>(a.domain().order()));
}

std::size_t multiplicity(const ClassFunction& chi, const ClassFunction& psi) {
  const Cyclotomic ip = inner_product(chi.restrict_to(psi.domain()), psi);
  if (!ip.is_rational()) fail(ErrorKind::NonIntegralMultiplicity, kModule, "multiplicity is not rational: " + ip.to_string());
  const Rational q = ip.rational_value();
  BigInt value;
  if (!as_integer(q, value) || value < 0)
    fail(ErrorKind::NonIntegralMultiplicity, kModule, "multiplicity is not a non-negative integer: " + q.get_str());
  return value.get_ui();
}

// ---------------------------------------------------------------------------

SubgroupTable::SubgroupTable(Subgroup sub, std::size_t max_order)
    : sub_(std::move(sub)),
      table_(character_table(make_group(sub_.as_group()), max_order, sub_.parent()->exponent())) {}

ClassFunction SubgroupTable::character(std::size_t irrep) const {
  std::vector<Cyclotomic> v;
  v.reserve(sub_.order());
  for (std::size_t i = 0; i < sub_.order(); ++i) v.push_back(table_.value(irrep, static_cast<Element>(i)));
  return ClassFunction(sub_, std::move(v));
}

std::size_t SubgroupTable::find(const ClassFunction& f) const {
  if (!(f.domain() == sub_)) inconsistent("character lookup on a different subgroup");
  for (std::size_t i = 0; i < size(); ++i)
    if (character(i) == f) return i;
  inconsistent("class function is not an irreducible character of the subgroup");
}

std::size_t conjugate_irrep(Element g, const SubgroupTable& source, std::size_t sigma, const SubgroupTable& target) {
  const ClassFunction moved = source.character(sigma).conjugate(g);
  if (!(moved.domain() == target.subgroup())) inconsistent("conjugation target table does not match g K g^-1");
  return target.find(moved);
}

}  // namespace orbikt
