#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "orbikt/character.hpp"
#include "orbikt/complex.hpp"

namespace orbikt {

/// One block of the fixed-point algebra K(l^2 G)^K: a full matrix algebra of
/// size block_dim repeated `multiplicity` times.
struct FiberBlock {
  std::size_t irrep = 0;
  std::size_t degree = 0;
  std::size_t block_dim = 0;
  std::size_t multiplicity = 0;
};

struct FiberDecomposition {
  Subgroup stabilizer;
  std::vector<FiberBlock> blocks;

  /// Sum of block_dim * multiplicity; always |G|.
  std::size_t total() const;
};

/// Block decomposition of K(l^2 G)^K, one block per irrep of K with size
/// [G:K] d and multiplicity d.
FiberDecomposition fiber_decomposition(const Subgroup& k, std::size_t max_order = kDefaultMaxOrder);

/// m[sigma][tau]: multiplicity of the irrep sigma of `sub` in the restriction
/// of the irrep tau of `ambient`.
struct InclusionMultiplicities {
  Subgroup sub;
  Subgroup ambient;
  std::vector<std::vector<std::size_t>> m;
};

/// Throws NotSubgroup unless sub is contained in ambient.
InclusionMultiplicities inclusion_multiplicities(const Subgroup& sub, const Subgroup& ambient,
                                                 std::size_t max_order = kDefaultMaxOrder);

/// A point of the finite primitive-ideal space: an irrep of the stabilizer of a
/// simplex orbit (raw poset) or of an isotropy stratum (aggregated poset).
struct PrimNode {
  std::size_t unit = 0;
  std::size_t irrep = 0;
  bool operator==(const PrimNode& o) const { return unit == o.unit && irrep == o.irrep; }
  bool operator<(const PrimNode& o) const { return unit != o.unit ? unit < o.unit : irrep < o.irrep; }
};

using NodeSet = std::vector<bool>;

/// Specialization preorder on prim nodes. below(a, b) means node a lies in the
/// closure of node b.
class PrimPoset {
 public:
  struct Unit {
    Subgroup stabilizer;
    std::shared_ptr<const SubgroupTable> table;
  };

  PrimPoset(bool aggregated, std::vector<Unit> units, std::vector<PrimNode> nodes,
            std::vector<std::vector<bool>> below);

  bool aggregated() const noexcept { return aggregated_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<PrimNode>& nodes() const noexcept { return nodes_; }
  const PrimNode& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<Unit>& units() const noexcept { return units_; }
  const Unit& unit(std::size_t u) const { return units_.at(u); }
  std::optional<std::size_t> find(PrimNode n) const;
  bool below(std::size_t a, std::size_t b) const { return below_[a][b]; }

  std::size_t degree(std::size_t i) const;
  /// [G:K] d for the node's stabilizer K and irrep degree d.
  std::size_t block_dim(std::size_t i) const;
  bool trivial_irrep(std::size_t i) const { return nodes_[i].irrep == 0; }

  NodeSet closure(const NodeSet& s) const;
  /// Closure of a single node as a sorted index list.
  std::vector<std::size_t> closure_of(std::size_t i) const;
  /// U is open when its complement is closed.
  bool is_open(const NodeSet& u) const;
  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_t0() const;

 private:
  bool aggregated_;
  std::vector<Unit> units_;
  std::vector<PrimNode> nodes_;
  std::vector<std::vector<bool>> below_;
  std::map<PrimNode, std::size_t> index_;
};

/// Raw poset on (simplex orbit, irrep of the orbit representative's
/// stabilizer). (s, sigma) <= (t, tau) iff some g has s a face of g t and
/// g tau occurs in sigma restricted to G_{g t}.
PrimPoset specialization(const GSimplicialComplex& x, std::size_t max_order = kDefaultMaxOrder);

/// Merges orbits of each isotropy stratum, transporting irreps to the
/// stratum's representatives. The relation is the existential lift, closed
/// under transitivity. Throws NonConstantStabilizer when a stratum's
/// representatives do not share one stabilizer.
PrimPoset aggregate_strata(const PrimPoset& raw, const GSimplicialComplex& x, const OrbitData& orbits,
                           const std::vector<IsotropyStratum>& strata);

/// Stratum-level poset of x in one call.
PrimPoset aggregated_specialization(const GSimplicialComplex& x, std::size_t max_order = kDefaultMaxOrder);

/// Nodes with trivial irrep; verified open (NotOpen otherwise).
std::vector<std::size_t> ix_nodes(const PrimPoset& poset);

/// Each step lists the nodes added to the previous open set.
struct Filtration {
  std::vector<std::vector<PrimNode>> steps;
};

struct FiltrationStep {
  std::vector<std::size_t> added;
  std::size_t cumulative = 0;
};

struct FiltrationReport {
  std::vector<FiltrationStep> steps;
  /// True when the last set is every node.
  bool exhaustive = false;
};

/// Checks every cumulative set is open; throws NotOpen naming the first step
/// that is not, and InvalidInput for unknown or repeated nodes.
FiltrationReport filtration_report(const PrimPoset& poset, const Filtration& filtration);

}  // namespace orbikt
