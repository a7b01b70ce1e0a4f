#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbikt/character.hpp"
#include "orbikt/complex.hpp"
#include "orbikt/homology.hpp"

namespace orbikt {

/// Contribution of one conjugacy class [g]: the K-ranks of Z^g \ X^g.
struct ClassComponent {
  Element rep = 0;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  SimplicialComplex quotient;
  int subdivisions = 0;
  KRanks ranks;
};

struct BCDecomposition {
  /// In ConjugacyData order.
  std::vector<ClassComponent> classes;
  KRanks totals;
};

/// Rational equivariant K-ranks as the sum over conjugacy classes of the
/// K-ranks of Z^g \ X^g.
BCDecomposition bc_decomposition(const GSimplicialComplex& x, SubdivisionPolicy policy = SubdivisionPolicy::Auto);

enum class EulerMethod { BC, CommutingPairs, Isolated };

/// rank K^0_G - rank K^1_G by the chosen formula. Isolated requires every
/// positive-dimensional simplex to have trivial stabilizer (NotIsolated).
long equivariant_euler(const GSimplicialComplex& x, EulerMethod method,
                       SubdivisionPolicy policy = SubdivisionPolicy::Auto);

/// True when nontrivial stabilizers occur only on vertices.
bool has_isolated_singularities(const GSimplicialComplex& x);

struct IdentityCheck {
  long lhs = 0;
  long rhs = 0;
  /// False when rhs needed a division that left a remainder.
  bool integral = true;
  bool holds() const { return integral && lhs == rhs; }
};

/// chi(G\X) against (1/|G|) sum_g chi(X^g).
IdentityCheck euler_quotient_check(const GSimplicialComplex& x, SubdivisionPolicy policy = SubdivisionPolicy::Auto);

/// sum over nontrivial classes of #(Z^g \ X^g) against the sum over singular
/// orbits of (#irreps(G_x) - 1). Throws NotApplicable unless every X^g with
/// g != e is finite.
IdentityCheck bc_vs_count_identity(const GSimplicialComplex& x, std::size_t max_order = kDefaultMaxOrder);

struct DegreeComparison {
  std::size_t degree = 0;
  std::size_t invariant = 0;
  std::size_t quotient = 0;
  bool equal() const { return invariant == quotient; }
};

struct InvariantsCheck {
  std::vector<DegreeComparison> degrees;
  bool all_equal() const;
};

/// dim H^k(X; Q)^G against the Betti numbers of G\X, degree by degree.
InvariantsCheck invariants_check(const GSimplicialComplex& x, SubdivisionPolicy policy = SubdivisionPolicy::Auto);

/// Finitely generated abelian group Z^rank + sum Z/t. With exact == false the
/// torsion part is unknown and only the rank is claimed.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  bool exact = true;
  std::string to_string() const;
};

struct SingularOrbit {
  std::size_t orbit = 0;
  Subgroup stabilizer;
  /// Number of nontrivial irreps of the stabilizer.
  std::size_t extra = 0;
};

enum class BoundaryStatus { ProvablyZero, TorsionBounded };

std::string boundary_status_name(BoundaryStatus s);

struct IsolatedKResult {
  std::vector<SingularOrbit> singular_orbits;
  int quotient_dimension = 0;
  HomologyResult quotient_cohomology;
  KRanks quotient_ranks;
  /// Integral K of the quotient; inexact when its dimension exceeds two.
  AbelianGroup quotient_k0;
  AbelianGroup quotient_k1;
  AbelianGroup k0;
  AbelianGroup k1;
  BoundaryStatus boundary = BoundaryStatus::TorsionBounded;
  /// Order of each singular orbit's stabilizer, bounding its boundary torsion.
  std::vector<std::size_t> torsion_bounds;
};

/// Equivariant K-theory when singular orbits are isolated points, from the
/// six-term sequence of the ideal of free orbits. Throws NotIsolated otherwise.
IsolatedKResult isolated_k_theory(const GSimplicialComplex& x, SubdivisionPolicy policy = SubdivisionPolicy::Auto,
                                  std::size_t max_order = kDefaultMaxOrder);

/// A published value that a computation disagrees with.
struct ReferenceDiscrepancy {
  std::string kind;
  std::string ref;
  std::string quantity;
  long expected = 0;
  long computed = 0;
  std::string detail;
};

/// Compares computed K-data of a named fixture against the recorded published
/// values and returns one entry per mismatch.
std::vector<ReferenceDiscrepancy> reference_discrepancies(const std::string& fixture, const IsolatedKResult* isolated,
                                                          const BCDecomposition* bc);

}  // namespace orbikt
