#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbikt {

using Element = std::uint32_t;

/// Element count above which associativity is spot-checked instead of
/// verified on every triple.
inline constexpr std::size_t kExhaustiveAssociativityBound = 512;
/// Seed for the associativity spot-check. Fixed so validation is reproducible.
inline constexpr std::uint64_t kAssociativitySeed = 0x5eed'0f'a550c;

/// A finite group given by its full multiplication table.
///
/// Construction validates the table (Latin square, identity, inverses,
/// associativity); an invalid table throws `InvalidInput`. Everything else in
/// the library derives from this representation.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> names = {});

  /// Closure of a set of permutations of 0..degree-1 (one-line image notation).
  /// Elements are numbered in breadth-first discovery order, identity first.
  static FiniteGroup from_permutations(std::size_t degree,
                                       const std::vector<std::vector<std::uint32_t>>& generators,
                                       std::size_t max_order);

  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conjugate(Element g, Element h) const { return mul(mul(g, h), inv(g)); }
  Element power(Element g, std::uint64_t k) const;

  std::size_t element_order(Element g) const { return element_order_[g]; }
  std::size_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const;

  const std::string& name(Element g) const { return names_[g]; }
  std::optional<Element> find(std::string_view name) const;
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }

  bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::string> names_;
  Element identity_ = 0;
  std::size_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(FiniteGroup g);

GroupPtr trivial_group();
/// Z/n with elements E, R, R^2, ...
GroupPtr cyclic_group(std::size_t n);
/// Dihedral group of order 2n: elements R^k (index k) then S R^k (index n + k),
/// with S R S = R^-1.
GroupPtr dihedral_group(std::size_t n);
/// Direct product; element (a, b) has index a * |H| + b.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// A subgroup stored as a sorted element list of its parent.
class Subgroup {
 public:
  /// Validates closure; throws NotSubgroup otherwise.
  Subgroup(GroupPtr parent, std::vector<Element> elements);

  static Subgroup generated(GroupPtr parent, std::span<const Element> generators);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const { return parent_->order() / elements_.size(); }
  bool contains(Element g) const;
  bool contains(const Subgroup& other) const;
  /// Position of g within elements(); g must be a member.
  std::size_t local_index(Element g) const;

  /// g K g^-1.
  Subgroup conjugate(Element g) const;
  bool is_conjugate_to(const Subgroup& other) const;
  /// Some g with g K g^-1 == other, if one exists.
  std::optional<Element> conjugator_to(const Subgroup& other) const;

  /// The subgroup as a group in its own right, elements indexed by local_index.
  FiniteGroup as_group() const;

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
  bool operator<(const Subgroup& other) const { return elements_ < other.elements_; }

 private:
  GroupPtr parent_;
  std::vector<Element> elements_;
};

struct ConjugacyData {
  /// Classes ordered by representative; each class sorted.
  std::vector<std::vector<Element>> classes;
  /// Smallest element index in each class.
  std::vector<Element> reps;
  std::vector<Subgroup> centralizers;
  /// Class index of every element.
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return reps.size(); }
};

ConjugacyData conjugacy_data(const GroupPtr& group);

Subgroup centralizer(const GroupPtr& group, Element g);

/// All ordered pairs (a, b) with ab = ba.
std::vector<std::pair<Element, Element>> commuting_pairs(const FiniteGroup& group);

}  // namespace orbikt
