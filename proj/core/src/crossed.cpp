#include "orbikt/crossed.hpp"

#include <string>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "crossed";

[[noreturn]] void inconsistent(const std::string& what) { fail(ErrorKind::InternalInconsistency, kModule, what); }

using TableCache = std::map<std::vector<Element>, std::shared_ptr<const SubgroupTable>>;

std::shared_ptr<const SubgroupTable> table_for(TableCache& cache, const Subgroup& k, std::size_t max_order) {
  std::vector<Element> key(k.elements().begin(), k.elements().end());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<const SubgroupTable>(k, max_order);
  cache.emplace(std::move(key), t);
  return t;
}

std::string node_name(const PrimNode& n) {
  return "(" + std::to_string(n.unit) + ", " + std::to_string(n.irrep) + ")";
}

/// Some g with g * from == to, for two simplices in the same orbit.
Element transporter(const GSimplicialComplex& x, SimplexRef from, SimplexRef to) {
  for (Element g = 0; g < x.group()->order(); ++g)
    if (x.act(g, from) == to.index) return g;
  inconsistent("simplices expected in one orbit are not");
}

Subgroup literal_stabilizer(const GSimplicialComplex& x, SimplexRef r) {
  std::vector<Element> stab;
  for (Element g = 0; g < x.group()->order(); ++g)
    if (x.act(g, r) == r.index) stab.push_back(g);
  return Subgroup(x.group(), std::move(stab));
}

void close_transitively(std::vector<std::vector<bool>>& rel) {
  const std::size_t n = rel.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
}

}  // namespace

std::size_t FiberDecomposition::total() const {
  std::size_t sum = 0;
  for (const auto& b : blocks) sum += b.block_dim * b.multiplicity;
  return sum;
}

FiberDecomposition fiber_decomposition(const Subgroup& k, std::size_t max_order) {
  const SubgroupTable table(k, max_order);
  FiberDecomposition out{k, {}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::size_t d = table.degree(i);
    out.blocks.push_back({i, d, k.index() * d, d});
  }
  if (out.total() != k.parent()->order()) inconsistent("fiber blocks do not fill l^2(G)");
  return out;
}

InclusionMultiplicities inclusion_multiplicities(const Subgroup& sub, const Subgroup& ambient, std::size_t max_order) {
  if (*sub.parent() != *ambient.parent() || !ambient.contains(sub))
    fail(ErrorKind::NotSubgroup, kModule, "inclusion multiplicities need L contained in K");
  const SubgroupTable small(sub, max_order), big(ambient, max_order);
  InclusionMultiplicities out{sub, ambient, std::vector<std::vector<std::size_t>>(small.size(), std::vector<std::size_t>(big.size()))};
  for (std::size_t tau = 0; tau < big.size(); ++tau) {
    const ClassFunction chi = big.character(tau);
    std::size_t check = 0;
    for (std::size_t sigma = 0; sigma < small.size(); ++sigma) {
      out.m[sigma][tau] = multiplicity(chi, small.character(sigma));
      check += out.m[sigma][tau] * small.degree(sigma);
    }
    if (check != big.degree(tau)) inconsistent("restricted degrees do not add up for irrep " + std::to_string(tau));
  }
  return out;
}

PrimPoset::PrimPoset(bool aggregated, std::vector<Unit> units, std::vector<PrimNode> nodes,
                     std::vector<std::vector<bool>> below)
    : aggregated_(aggregated), units_(std::move(units)), nodes_(std::move(nodes)), below_(std::move(below)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
}

std::optional<std::size_t> PrimPoset::find(PrimNode n) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PrimPoset::degree(std::size_t i) const {
  const auto& n = nodes_.at(i);
  return units_.at(n.unit).table->degree(n.irrep);
}

std::size_t PrimPoset::block_dim(std::size_t i) const {
  return units_.at(nodes_.at(i).unit).stabilizer.index() * degree(i);
}

NodeSet PrimPoset::closure(const NodeSet& s) const {
  NodeSet out = s;
  for (std::size_t a = 0; a < size(); ++a) {
    if (out[a]) continue;
    for (std::size_t b = 0; b < size(); ++b)
      if (s[b] && below_[a][b]) {
        out[a] = true;
        break;
      }
  }
  return out;
}

std::vector<std::size_t> PrimPoset::closure_of(std::size_t i) const {
  NodeSet s(size(), false);
  s.at(i) = true;
  const NodeSet c = closure(s);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (c[a]) out.push_back(a);
  return out;
}

bool PrimPoset::is_open(const NodeSet& u) const {
  NodeSet complement(size());
  for (std::size_t i = 0; i < size(); ++i) complement[i] = !u[i];
  return closure(complement) == complement;
}

bool PrimPoset::is_reflexive() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!below_[i][i]) return false;
  return true;
}

bool PrimPoset::is_transitive() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (!below_[a][b]) continue;
      for (std::size_t c = 0; c < size(); ++c)
        if (below_[b][c] && !below_[a][c]) return false;
    }
  return true;
}

bool PrimPoset::is_t0() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (below_[a][b] && below_[b][a]) return false;
  return true;
}

PrimPoset specialization(const GSimplicialComplex& x, std::size_t max_order) {
  x.require_admissible(kModule);
  const OrbitData od = orbits_and_stabilizers(x);
  const auto& c = x.complex();

  TableCache cache;
  std::vector<PrimPoset::Unit> units;
  std::vector<PrimNode> nodes;
  std::vector<std::size_t> first_node;
  std::vector<std::vector<ClassFunction>> characters;
  for (const auto& o : od.orbits) {
    auto t = table_for(cache, o.stabilizer, max_order);
    first_node.push_back(nodes.size());
    characters.emplace_back();
    for (std::size_t i = 0; i < t->size(); ++i) {
      nodes.push_back({o.id, i});
      characters.back().push_back(t->character(i));
    }
    units.push_back({o.stabilizer, std::move(t)});
  }

  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) below[i][i] = true;

  for (std::size_t d = 0; static_cast<int>(d) <= c.dimension(); ++d)
    for (std::size_t idx = 0; idx < c.count(d); ++idx) {
      const SimplexRef top{d, idx};
      const std::size_t ot = od.orbit_id(top);
      const SimplexOrbit& orbit_t = od.orbits[ot];
      const Element g = transporter(x, SimplexRef{d, orbit_t.rep}, top);
      std::vector<ClassFunction> moved;
      for (const auto& chi : characters[ot]) moved.push_back(chi.conjugate(g));

      const Simplex& verts = c.simplex(top);
      const std::uint32_t full = (1u << verts.size()) - 1;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Simplex face;
        for (std::size_t b = 0; b < verts.size(); ++b)
          if (mask & (1u << b)) face.push_back(verts[b]);
        const SimplexRef s{face.size() - 1, c.index(face)};
        const std::size_t os = od.orbit_id(s);
        if (od.orbits[os].rep != s.index) continue;
        for (std::size_t sigma = 0; sigma < characters[os].size(); ++sigma)
          for (std::size_t tau = 0; tau < moved.size(); ++tau)
            if (multiplicity(characters[os][sigma], moved[tau]) > 0)
              below[first_node[os] + sigma][first_node[ot] + tau] = true;
      }
    }

  PrimPoset out(false, std::move(units), std::move(nodes), std::move(below));
  if (!out.is_transitive()) inconsistent("specialization relation is not transitive");
  return out;
}

PrimPoset aggregate_strata(const PrimPoset& raw, const GSimplicialComplex& x, const OrbitData& orbits,
                           const std::vector<IsotropyStratum>& strata) {
  if (raw.aggregated() || raw.units().size() != orbits.orbits.size())
    fail(ErrorKind::InvalidInput, kModule, "aggregation expects the raw orbit-level poset");

  TableCache cache;
  for (const auto& u : raw.units()) {
    std::vector<Element> key(u.stabilizer.elements().begin(), u.stabilizer.elements().end());
    cache.emplace(std::move(key), u.table);
  }

  std::vector<PrimPoset::Unit> units;
  std::vector<PrimNode> nodes;
  std::vector<std::size_t> raw_to_agg(raw.size(), 0);
  for (const auto& s : strata) {
    if (s.id != units.size()) inconsistent("strata are not numbered consecutively");
    auto table = table_for(cache, s.stabilizer, kDefaultMaxOrder);
    const std::size_t base = nodes.size();
    for (std::size_t i = 0; i < table->size(); ++i) nodes.push_back({s.id, i});
    for (std::size_t k = 0; k < s.orbits.size(); ++k) {
      const SimplexRef rep = s.reps[k];
      if (!(literal_stabilizer(x, rep) == s.stabilizer))
        fail(ErrorKind::NonConstantStabilizer, kModule,
             "stratum " + std::to_string(s.id) + " has representatives with different stabilizers");
      const SimplexOrbit& o = orbits.orbits[s.orbits[k]];
      const Element g = transporter(x, SimplexRef{o.dim, o.rep}, rep);
      const auto& source = *raw.unit(o.id).table;
      for (std::size_t sigma = 0; sigma < source.size(); ++sigma) {
        const auto at = raw.find({o.id, sigma});
        if (!at) inconsistent("raw poset is missing a node");
        raw_to_agg[*at] = base + conjugate_irrep(g, source, sigma, *table);
      }
    }
    units.push_back({s.stabilizer, std::move(table)});
  }

  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < raw.size(); ++a)
    for (std::size_t b = 0; b < raw.size(); ++b)
      if (raw.below(a, b)) below[raw_to_agg[a]][raw_to_agg[b]] = true;
  close_transitively(below);
  return PrimPoset(true, std::move(units), std::move(nodes), std::move(below));
}

PrimPoset aggregated_specialization(const GSimplicialComplex& x, std::size_t max_order) {
  const PrimPoset raw = specialization(x, max_order);
  const OrbitData od = orbits_and_stabilizers(x);
  return aggregate_strata(raw, x, od, isotropy_strata(x, od));
}

std::vector<std::size_t> ix_nodes(const PrimPoset& poset) {
  NodeSet u(poset.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poset.size(); ++i)
    if (poset.trivial_irrep(i)) {
      u[i] = true;
      out.push_back(i);
    }
  if (!poset.is_open(u)) fail(ErrorKind::NotOpen, kModule, "trivial-irrep nodes do not form an open set");
  return out;
}

FiltrationReport filtration_report(const PrimPoset& poset, const Filtration& filtration) {
  FiltrationReport report;
  NodeSet current(poset.size(), false);
  std::size_t count = 0;
  for (std::size_t k = 0; k < filtration.steps.size(); ++k) {
    FiltrationStep step;
    for (const auto& node : filtration.steps[k]) {
      const auto at = poset.find(node);
      if (!at) fail(ErrorKind::InvalidInput, kModule, "unknown node " + node_name(node) + " in step " + std::to_string(k + 1));
      if (current[*at])
        fail(ErrorKind::InvalidInput, kModule, "node " + node_name(node) + " repeated in step " + std::to_string(k + 1));
      current[*at] = true;
      step.added.push_back(*at);
      ++count;
    }
    if (!poset.is_open(current))
      fail(ErrorKind::NotOpen, kModule, "filtration step " + std::to_string(k + 1) + " is not open");
    step.cumulative = count;
    report.steps.push_back(std::move(step));
  }
  report.exhaustive = count == poset.size();
  return report;
}

}  // namespace orbikt
