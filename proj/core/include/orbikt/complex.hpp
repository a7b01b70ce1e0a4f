#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orbikt/group.hpp"

namespace orbikt {

using Vertex = std::uint32_t;
/// Strictly increasing vertex tuple.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// (dimension, index within that dimension's simplex list).
struct SimplexRef {
  std::size_t dim = 0;
  std::size_t index = 0;
  bool operator==(const SimplexRef& o) const { return dim == o.dim && index == o.index; }
  bool operator<(const SimplexRef& o) const { return dim != o.dim ? dim < o.dim : index < o.index; }
};

/// Finite abstract simplicial complex. Simplices of each dimension are kept in
/// lexicographic order; every vertex below vertex_count is a 0-simplex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Closure of the given simplices (any order, any dimension).
  static SimplicialComplex from_maximal(std::size_t vertex_count, std::vector<Simplex> maximal);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(std::size_t dim) const { return dim < simplices_.size() ? simplices_[dim].size() : 0; }
  std::size_t total() const;
  const std::vector<Simplex>& simplices(std::size_t dim) const { return simplices_.at(dim); }
  const Simplex& simplex(SimplexRef r) const { return simplices_.at(r.dim).at(r.index); }
  std::optional<std::size_t> find(const Simplex& s) const;
  /// Index of s; throws InvalidInput when absent.
  std::size_t index(const Simplex& s) const;
  /// Indices of the codimension-one faces, face i omitting vertex i.
  std::vector<std::size_t> facets(SimplexRef r) const;
  std::vector<Simplex> maximal_simplices() const;
  long euler_characteristic() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_count_ == o.vertex_count_ && simplices_ == o.simplices_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

/// A subcomplex re-indexed on its own vertices; vertices[i] is the original id.
struct Subcomplex {
  SimplicialComplex complex;
  std::vector<Vertex> vertices;

  /// Simplices in original vertex labels, sorted.
  std::vector<Simplex> original_simplices() const;
};

struct AdmissibilityWitness {
  Element element;
  Simplex simplex;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::optional<AdmissibilityWitness> witness;
};

/// Simplicial action of a finite group, stored as one vertex permutation per
/// group element together with induced simplex permutations.
class GSimplicialComplex {
 public:
  /// Full action table; validated as a homomorphism into simplicial automorphisms.
  GSimplicialComplex(SimplicialComplex complex, GroupPtr group, std::vector<std::vector<Vertex>> vertex_action);

  /// Action given on generators only; other elements are derived from the group table.
  static GSimplicialComplex from_generators(SimplicialComplex complex, GroupPtr group,
                                            const std::vector<std::pair<Element, std::vector<Vertex>>>& generators);
  static GSimplicialComplex trivial_action(SimplicialComplex complex, GroupPtr group);

  const SimplicialComplex& complex() const noexcept { return complex_; }
  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<std::vector<Vertex>>& vertex_action() const noexcept { return action_; }
  Vertex act(Element g, Vertex v) const { return action_[g][v]; }
  /// Index of g applied to simplex r (same dimension).
  std::size_t act(Element g, SimplexRef r) const { return simplex_action_[r.dim][g][r.index]; }
  Simplex act(Element g, const Simplex& s) const;

  const AdmissibilityReport& admissibility() const noexcept { return admissibility_; }
  bool admissible() const noexcept { return admissibility_.admissible; }
  /// Throws NotAdmissible with the witness when the action is not admissible.
  void require_admissible(const char* module) const;

 private:
  SimplicialComplex complex_;
  GroupPtr group_;
  std::vector<std::vector<Vertex>> action_;
  /// [dim][element][index] -> image index.
  std::vector<std::vector<std::vector<std::size_t>>> simplex_action_;
  AdmissibilityReport admissibility_;
};

AdmissibilityReport check_admissible(const GSimplicialComplex& x);

/// Vertices of the result are the simplices of x (ordered by dimension, then
/// index); k-simplices are strict flags of length k + 1.
GSimplicialComplex barycentric_subdivide(const GSimplicialComplex& x);
SimplicialComplex barycentric_subdivide(const SimplicialComplex& x);

struct SimplexOrbit {
  std::size_t id = 0;
  std::size_t dim = 0;
  /// Lexicographically smallest member.
  std::size_t rep = 0;
  std::vector<std::size_t> members;
  Subgroup stabilizer;
};

struct OrbitData {
  /// Ordered by dimension, then representative.
  std::vector<SimplexOrbit> orbits;
  /// orbit_of[dim][index]
  std::vector<std::vector<std::size_t>> orbit_of;

  std::size_t orbit_id(SimplexRef r) const { return orbit_of.at(r.dim).at(r.index); }
};

OrbitData orbits_and_stabilizers(const GSimplicialComplex& x);

/// Full subcomplex on the vertices fixed by every element of s.
Subcomplex fixed_subcomplex(const GSimplicialComplex& x, const std::vector<Element>& s);

struct Quotient {
  SimplicialComplex complex;
  /// Quotient vertex of every vertex of the source.
  std::vector<Vertex> vertex_image;
  /// projection[dim][index]: quotient simplex index of each source simplex.
  std::vector<std::vector<std::size_t>> projection;
};

/// Orbit complex; throws NotRegular unless every simplex maps injectively onto
/// distinct vertex orbits and distinct simplex orbits have distinct images.
Quotient quotient_complex(const GSimplicialComplex& x);

enum class SubdivisionPolicy { Auto, Forbid };

inline constexpr int kMaxAutoSubdivisions = 2;

struct RegularQuotient {
  GSimplicialComplex source;
  Quotient quotient;
  int subdivisions = 0;
};

/// Quotient after up to two barycentric subdivisions (Auto) or none (Forbid).
RegularQuotient regular_quotient(const GSimplicialComplex& x, SubdivisionPolicy policy = SubdivisionPolicy::Auto);

/// X^g with the restricted action of the centralizer Z^g. The action's group
/// is Z^g as a standalone group, its element i being centralizer.elements()[i].
struct FixedAction {
  Subgroup centralizer;
  Subcomplex fixed;
  GSimplicialComplex action;
};

FixedAction centralizer_fixed_action(const GSimplicialComplex& x, Element g);

struct IsotropyStratum {
  std::size_t id = 0;
  /// Common stabilizer of the chosen representatives.
  Subgroup stabilizer;
  std::vector<std::size_t> orbits;
  /// Chosen representative simplex of each orbit, aligned with `orbits`; these
  /// all have stabilizer exactly `stabilizer`.
  std::vector<SimplexRef> reps;
  bool connected = true;
};

/// Maximal connected unions of simplex orbits with conjugate stabilizers, where
/// orbits are adjacent when a member of one is a face of a member of the other.
/// Sorted by smallest orbit id.
std::vector<IsotropyStratum> isotropy_strata(const GSimplicialComplex& x, const OrbitData& orbits);

}  // namespace orbikt
