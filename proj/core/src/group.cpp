#include "orbikt/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "grouptheory";

[[noreturn]] void invalid(const std::string& what) { fail(ErrorKind::InvalidInput, kModule, what); }

bool is_permutation_row(const std::vector<Element>& row, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (Element x : row) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::string power_name(const std::string& base, std::size_t k) {
  if (k == 0) return "E";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) invalid("group must have at least one element");
  for (const auto& row : table_) {
    if (row.size() != n) invalid("multiplication table is not square");
    if (!is_permutation_row(row, n)) invalid("a row of the multiplication table is not a permutation");
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Element> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = table_[r][c];
    if (!is_permutation_row(col, n)) invalid("a column of the multiplication table is not a permutation");
  }

  // Identity: the element e with e*e == e in a Latin square whose row is the identity map.
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) invalid("multiplication table has no two-sided identity");

  inverse_.assign(n, 0);
  for (Element g = 0; g < n; ++g) {
    auto it = std::find(table_[g].begin(), table_[g].end(), identity_);
    const auto h = static_cast<Element>(it - table_[g].begin());
    if (table_[h][g] != identity_) invalid("element " + std::to_string(g) + " has no two-sided inverse");
    inverse_[g] = h;
  }

  if (n <= kExhaustiveAssociativityBound) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = table_[a][b];
        for (Element c = 0; c < n; ++c)
          if (table_[ab][c] != table_[a][table_[b][c]]) invalid("multiplication table is not associative");
      }
  } else {
    std::mt19937_64 rng(kAssociativitySeed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int trial = 0; trial < 200000; ++trial) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) invalid("multiplication table is not associative");
    }
  }

  element_order_.assign(n, 1);
  exponent_ = 1;
  for (Element g = 0; g < n; ++g) {
    std::size_t k = 1;
    for (Element x = g; x != identity_; x = table_[x][g]) ++k;
    element_order_[g] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  if (names_.empty()) {
    names_.resize(n);
    for (Element g = 0; g < n; ++g) names_[g] = g == identity_ ? "E" : "g" + std::to_string(g);
  } else if (names_.size() != n) {
    invalid("element name list has the wrong length");
  }
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           const std::vector<std::vector<std::uint32_t>>& generators,
                                           std::size_t max_order) {
  using Perm = std::vector<std::uint32_t>;
  for (const auto& p : generators)
    if (p.size() != degree || !is_permutation_row(p, degree))
      fail(ErrorKind::ParseError, kModule, "generator is not a permutation of 0.." + std::to_string(degree - 1));

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  // compose(a, b) = a o b, i.e. apply b first.
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = a[b[i]];
    return r;
  };
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element cur = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      Perm next = compose(gen, elems[cur]);
      if (index.count(next)) continue;
      if (elems.size() >= max_order)
        fail(ErrorKind::BoundExceeded, kModule, "permutation group order exceeds bound " + std::to_string(max_order));
      index.emplace(next, static_cast<Element>(elems.size()));
      elems.push_back(std::move(next));
      queue.push_back(static_cast<Element>(elems.size() - 1));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(std::move(table));
}

Element FiniteGroup::power(Element g, std::uint64_t k) const {
  k %= element_order_[g];
  Element r = identity_;
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (Element g = 0; g < order(); ++g)
    if (names_[g] == name) return g;
  return std::nullopt;
}

GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupPtr trivial_group() { return cyclic_group(1); }

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) invalid("cyclic group order must be positive");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = power_name("R", a);
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Element>((a + b) % n);
  }
  return make_group(FiniteGroup(std::move(table), std::move(names)));
}

GroupPtr dihedral_group(std::size_t n) {
  if (n == 0) invalid("dihedral parameter must be positive");
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  // Element (a, i) = S^a R^i; (S^a R^i)(S^b R^j) = S^(a+b) R^((-1)^b i + j).
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / n, i = x % n;
    names[x] = a == 0 ? power_name("R", i) : (i == 0 ? std::string("S") : "S" + power_name("R", i));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y / n, j = y % n;
      const std::size_t ii = b == 0 ? i : (n - i) % n;
      table[x][y] = static_cast<Element>(((a + b) % 2) * n + (ii + j) % n);
    }
  }
  return make_group(FiniteGroup(std::move(table), std::move(names)));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order(), n = g.order() * m;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = "(" + g.name(static_cast<Element>(x / m)) + "," + h.name(static_cast<Element>(x % m)) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Element a = g.mul(static_cast<Element>(x / m), static_cast<Element>(y / m));
      const Element b = h.mul(static_cast<Element>(x % m), static_cast<Element>(y % m));
      table[x][y] = static_cast<Element>(a * m + b);
    }
  }
  return make_group(FiniteGroup(std::move(table), std::move(names)));
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const auto& g = *parent_;
  auto bad = [](const std::string& why) { fail(ErrorKind::NotSubgroup, kModule, why); };
  if (elements_.empty() || !std::binary_search(elements_.begin(), elements_.end(), g.identity()))
    bad("element set does not contain the identity");
  for (Element x : elements_) {
    if (x >= g.order()) bad("element index out of range");
    if (!contains(g.inv(x))) bad("element set is not closed under inverses");
    for (Element y : elements_)
      if (!contains(g.mul(x, y))) bad("element set is not closed under multiplication");
  }
  if (g.order() % elements_.size() != 0) bad("subgroup order does not divide the group order");
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Element> generators) {
  const auto& g = *parent;
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{g.identity()};
  in[g.identity()] = true;
  for (Element gen : generators)
    if (gen >= g.order()) fail(ErrorKind::InvalidInput, kModule, "generator index out of range");
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Element gen : generators) {
      const Element next = g.mul(elems[i], gen);
      if (!in[next]) {
        in[next] = true;
        elems.push_back(next);
      }
    }
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(parent->order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  const Element e = parent->identity();
  return Subgroup(std::move(parent), {e});
}

bool Subgroup::contains(Element g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

std::size_t Subgroup::local_index(Element g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g)
    fail(ErrorKind::InternalInconsistency, kModule, "element is not a member of the subgroup");
  return static_cast<std::size_t>(it - elements_.begin());
}

Subgroup Subgroup::conjugate(Element g) const {
  std::vector<Element> conj;
  conj.reserve(elements_.size());
  for (Element h : elements_) conj.push_back(parent_->conjugate(g, h));
  return Subgroup(parent_, std::move(conj));
}

std::optional<Element> Subgroup::conjugator_to(const Subgroup& other) const {
  if (other.order() != order()) return std::nullopt;
  for (Element g = 0; g < parent_->order(); ++g) {
    bool ok = true;
    for (Element h : elements_)
      if (!other.contains(parent_->conjugate(g, h))) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return std::nullopt;
}

bool Subgroup::is_conjugate_to(const Subgroup& other) const { return conjugator_to(other).has_value(); }

FiniteGroup Subgroup::as_group() const {
  const std::size_t n = elements_.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = parent_->name(elements_[a]);
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = static_cast<Element>(local_index(parent_->mul(elements_[a], elements_[b])));
  }
  return FiniteGroup(std::move(table), std::move(names));
}

// ---------------------------------------------------------------------------

Subgroup centralizer(const GroupPtr& group, Element g) {
  std::vector<Element> elems;
  for (Element h = 0; h < group->order(); ++h)
    if (group->mul(g, h) == group->mul(h, g)) elems.push_back(h);
  return Subgroup(group, std::move(elems));
}

ConjugacyData conjugacy_data(const GroupPtr& group) {
  const auto& g = *group;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ConjugacyData data;
  data.class_of.assign(g.order(), kUnset);
  for (Element x = 0; x < g.order(); ++x) {
    if (data.class_of[x] != kUnset) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < g.order(); ++h) cls.push_back(g.conjugate(h, x));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    const std::size_t id = data.classes.size();
    for (Element y : cls) data.class_of[y] = id;
    // x is the first unassigned index scanned, hence the class minimum.
    data.reps.push_back(x);
    data.centralizers.push_back(centralizer(group, x));
    data.classes.push_back(std::move(cls));
  }
  return data;
}

std::vector<std::pair<Element, Element>> commuting_pairs(const FiniteGroup& group) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < group.order(); ++a)
    for (Element b = 0; b < group.order(); ++b)
      if (group.mul(a, b) == group.mul(b, a)) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace orbikt
