#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "orbikt/cyclotomic.hpp"
#include "orbikt/group.hpp"

namespace orbikt {

inline constexpr std::size_t kDefaultMaxOrder = 512;

struct Irrep {
  std::size_t id = 0;
  std::size_t degree = 0;
  /// One value per conjugacy class, in ConjugacyData order.
  std::vector<Cyclotomic> values;
};

/// Exact irreducible characters of a finite group.
///
/// Irreps are ordered trivial first, then by degree, then lexicographically on
/// the coefficient vectors of their class values.
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, ConjugacyData classes, std::size_t conductor, std::vector<Irrep> irreps);

  const GroupPtr& group() const noexcept { return group_; }
  const ConjugacyData& classes() const noexcept { return classes_; }
  std::size_t conductor() const noexcept { return conductor_; }
  const std::vector<Irrep>& irreps() const noexcept { return irreps_; }
  std::size_t size() const noexcept { return irreps_.size(); }
  const Irrep& irrep(std::size_t i) const { return irreps_.at(i); }
  const Cyclotomic& value(std::size_t irrep, Element g) const {
    return irreps_[irrep].values[classes_.class_of[g]];
  }

 private:
  GroupPtr group_;
  ConjugacyData classes_;
  std::size_t conductor_;
  std::vector<Irrep> irreps_;
};

/// Burnside-Dixon-Schneider character table. Values live in Q(zeta_conductor);
/// conductor 0 means exp(G). Throws BoundExceeded above max_order.
CharacterTable character_table(const GroupPtr& group, std::size_t max_order = kDefaultMaxOrder,
                               std::size_t conductor = 0);

/// A class function on a subgroup, one value per element of the subgroup
/// (indexed by Subgroup::local_index).
class ClassFunction {
 public:
  ClassFunction(Subgroup domain, std::vector<Cyclotomic> values);

  const Subgroup& domain() const noexcept { return domain_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& at(Element g) const { return values_[domain_.local_index(g)]; }
  std::size_t conductor() const { return values_.front().conductor(); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction conj() const;

  ClassFunction restrict_to(const Subgroup& sub) const;
  /// Induced class function on `over`, which must contain the domain.
  ClassFunction induce_to(const Subgroup& over) const;
  /// Transport along conjugation: the function h -> f(g^-1 h g) on g K g^-1.
  ClassFunction conjugate(Element g) const;

  bool operator==(const ClassFunction& o) const { return domain_ == o.domain_ && values_ == o.values_; }

 private:
  Subgroup domain_;
  std::vector<Cyclotomic> values_;
};

/// (1/|K|) sum_k a(k) conj(b(k)); both functions must share a domain.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicity of psi in the restriction of chi to psi's domain. Verifies the
/// result is a non-negative integer (NonIntegralMultiplicity otherwise).
std::size_t multiplicity(const ClassFunction& chi, const ClassFunction& psi);

/// Character table of a subgroup, with values in the parent's conductor.
class SubgroupTable {
 public:
  explicit SubgroupTable(Subgroup sub, std::size_t max_order = kDefaultMaxOrder);

  const Subgroup& subgroup() const noexcept { return sub_; }
  const CharacterTable& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::size_t degree(std::size_t irrep) const { return table_.irrep(irrep).degree; }
  const Cyclotomic& value(std::size_t irrep, Element parent_element) const {
    return table_.value(irrep, static_cast<Element>(sub_.local_index(parent_element)));
  }
  ClassFunction character(std::size_t irrep) const;
  /// Index of the irrep with exactly this character; InternalInconsistency if none.
  std::size_t find(const ClassFunction& f) const;

 private:
  Subgroup sub_;
  CharacterTable table_;
};

/// The irrep of g K g^-1 whose character is chi_sigma o C_g^-1.
std::size_t conjugate_irrep(Element g, const SubgroupTable& source, std::size_t sigma, const SubgroupTable& target);

}  // namespace orbikt
