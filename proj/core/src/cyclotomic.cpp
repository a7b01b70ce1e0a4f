#include "orbikt/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "grouptheory";

/// Rows x^j mod Phi_m for 0 <= j < m, each of length phi(m).
struct Reduction {
  std::size_t phi;
  std::vector<std::vector<BigInt>> rows;
};

std::shared_ptr<const Reduction> build_reduction(std::size_t m) {
  const auto phi_poly = cyclotomic_polynomial(m);
  const std::size_t phi = phi_poly.size() - 1;
  auto red = std::make_shared<Reduction>();
  red->phi = phi;
  red->rows.assign(m, std::vector<BigInt>(phi, 0));
  std::vector<BigInt> cur(phi, 0);
  if (phi > 0) cur[0] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    red->rows[j] = cur;
    // Multiply by x; Phi_m is monic so x^phi = -sum phi_poly[i] x^i.
    BigInt top = phi > 0 ? cur[phi - 1] : BigInt(0);
    for (std::size_t i = phi; i-- > 1;) cur[i] = cur[i - 1];
    if (phi > 0) cur[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * phi_poly[i];
  }
  return red;
}

const Reduction& reduction(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const Reduction>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_reduction(m)).first;
  return *it->second;
}

void require_same(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor())
    fail(ErrorKind::InternalInconsistency, kModule,
         "cyclotomic conductors differ: " + std::to_string(a.conductor()) + " vs " + std::to_string(b.conductor()));
}

std::size_t mod_index(std::int64_t k, std::size_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::size_t>(((k % mm) + mm) % mm);
}

}  // namespace

std::size_t euler_phi(std::size_t m) {
  std::size_t result = m, n = m;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(std::size_t m) {
  if (m == 0) fail(ErrorKind::InvalidInput, kModule, "cyclotomic conductor must be positive");
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact long division.
  std::vector<BigInt> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dn = den.size() - 1;
    std::vector<BigInt> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      const BigInt c = num[i];  // den is monic
      q[i - dn] = c;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

Cyclotomic::Cyclotomic(std::size_t conductor) : conductor_(conductor) {
  if (conductor == 0) fail(ErrorKind::InvalidInput, kModule, "cyclotomic conductor must be positive");
  coeffs_.assign(euler_phi(conductor), Rational(0));
}

Cyclotomic::Cyclotomic(std::size_t conductor, const Rational& value) : Cyclotomic(conductor) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::root_of_unity(std::size_t conductor, std::int64_t k) {
  Cyclotomic r(conductor);
  const auto& row = reduction(conductor).rows[mod_index(k, conductor)];
  for (std::size_t i = 0; i < row.size(); ++i) r.coeffs_[i] = row[i];
  return r;
}

Cyclotomic Cyclotomic::from_powers(std::size_t conductor, const std::vector<Rational>& powers) {
  Cyclotomic r(conductor);
  const auto& red = reduction(conductor);
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (powers[j] == 0) continue;
    const auto& row = red.rows[j % conductor];
    for (std::size_t i = 0; i < red.phi; ++i)
      if (row[i] != 0) r.coeffs_[i] += powers[j] * row[i];
  }
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail(ErrorKind::InvalidInput, kModule, "cyclotomic number " + to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r -= o;
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same(*this, o);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return from_powers(conductor_, prod);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c *= q;
  return r;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (std::gcd(static_cast<std::size_t>(mod_index(k, conductor_)), conductor_) != 1 && conductor_ > 1)
    fail(ErrorKind::InvalidInput, kModule, "Galois exponent is not coprime to the conductor");
  std::vector<Rational> powers(conductor_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) powers[mod_index(static_cast<std::int64_t>(i) * k, conductor_)] += coeffs_[i];
  return from_powers(conductor_, powers);
}

Cyclotomic Cyclotomic::conj() const { return galois(static_cast<std::int64_t>(conductor_) - 1); }

Cyclotomic Cyclotomic::embed(std::size_t target) const {
  if (target % conductor_ != 0)
    fail(ErrorKind::InvalidInput, kModule, "cannot embed Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" +
                                               std::to_string(target) + ")");
  const std::size_t step = target / conductor_;
  std::vector<Rational> powers(target, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) powers[i * step] = coeffs_[i];
  return from_powers(target, powers);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  require_same(*this, o);
  return coeffs_ < o.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z" + std::to_string(conductor_) + "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace orbikt
