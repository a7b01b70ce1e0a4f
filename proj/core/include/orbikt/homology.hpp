#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbikt/complex.hpp"
#include "orbikt/numeric.hpp"

namespace orbikt {

/// Column-major sparse integer matrix; each column sorted by row.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, BigInt>>;

  SparseMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), columns_(cols) {}
  static SparseMatrix from_dense(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_.at(c); }
  /// Replaces column c; entries need not be sorted and zeros are dropped.
  void set_column(std::size_t c, Column entries);
  std::size_t nonzeros() const;
  std::vector<std::vector<BigInt>> dense() const;

  /// this * other.
  SparseMatrix operator*(const SparseMatrix& other) const;
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::vector<Column> columns_;
};

struct SmithForm {
  std::size_t rank = 0;
  /// Non-unit invariant factors d_1 | d_2 | ..., each greater than one.
  std::vector<BigInt> torsion;
};

/// Smith normal form over Z by unit-pivot sparse elimination followed by a
/// dense pass on whatever remains. The rank is cross-checked against ranks
/// modulo two primes.
SmithForm smith_normal_form(const SparseMatrix& m);

/// Rank over F_p (p < 2^32, prime).
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p);

/// Simplicial chain complex: boundary[k] maps C_k to C_{k-1} (boundary[0] is
/// the zero map to the zero module).
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundary;
};

ChainComplex chain_complex(const SimplicialComplex& x);

struct HomologyResult {
  std::vector<std::size_t> betti;
  std::vector<std::vector<BigInt>> torsion;
};

HomologyResult homology_integral(const SimplicialComplex& x);

/// Integral cohomology by universal coefficients: H^k = free(H_k) + tors(H_{k-1}).
HomologyResult cohomology_integral(const HomologyResult& homology);

struct KRanks {
  std::size_t even = 0;
  std::size_t odd = 0;
  bool operator==(const KRanks& o) const { return even == o.even && odd == o.odd; }
};

KRanks k_ranks(const HomologyResult& h);
KRanks k_ranks(const SimplicialComplex& x);

long euler_characteristic(const SimplicialComplex& x);

/// Chain map of a group element in degree k: each k-simplex goes to
/// (sign, image index) with the sign of the sorting permutation.
std::vector<std::pair<int, std::size_t>> chain_map(const GSimplicialComplex& x, Element g, std::size_t k);

/// Dimension of the G-invariant part of H^k(X; Q), per degree.
std::vector<std::size_t> invariant_cohomology_dims(const GSimplicialComplex& x);

}  // namespace orbikt
