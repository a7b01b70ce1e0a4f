#include "orbikt/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "gcomplex";

[[noreturn]] void invalid(const std::string& what) { fail(ErrorKind::InvalidInput, kModule, what); }

std::string simplex_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out + "]";
}

bool is_permutation(const std::vector<Vertex>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = s.size();
  for (Vertex v : s) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

SimplicialComplex SimplicialComplex::from_maximal(std::size_t vertex_count, std::vector<Simplex> maximal) {
  std::vector<std::set<Simplex>> by_dim;
  for (auto& s : maximal) {
    if (s.empty()) invalid("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) invalid("repeated vertex in simplex " + simplex_string(s));
    if (s.back() >= vertex_count) invalid("vertex index out of range in simplex " + simplex_string(s));
    if (s.size() > 31) invalid("simplex dimension too large");
    const std::size_t k = s.size();
    if (by_dim.size() < k) by_dim.resize(k);
    // All non-empty subsets.
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      by_dim[face.size() - 1].insert(std::move(face));
    }
  }
  if (vertex_count > 0 && (by_dim.empty() || by_dim[0].size() != vertex_count))
    invalid("every vertex must belong to some simplex");
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  for (auto& layer : by_dim) {
    c.simplices_.emplace_back(layer.begin(), layer.end());
    auto& idx = c.index_.emplace_back();
    idx.reserve(layer.size());
    const auto& list = c.simplices_.back();
    for (std::size_t i = 0; i < list.size(); ++i) idx.emplace(list[i], i);
  }
  return c;
}

std::size_t SimplicialComplex::total() const {
  std::size_t n = 0;
  for (const auto& layer : simplices_) n += layer.size();
  return n;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index(const Simplex& s) const {
  auto i = find(s);
  if (!i) invalid("simplex " + simplex_string(s) + " is not in the complex");
  return *i;
}

std::vector<std::size_t> SimplicialComplex::facets(SimplexRef r) const {
  std::vector<std::size_t> out;
  if (r.dim == 0) return out;
  const Simplex& s = simplex(r);
  const auto& idx = index_[r.dim - 1];
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) face.push_back(s[j]);
    out.push_back(idx.at(face));
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t d = 0; d < simplices_.size(); ++d) {
    std::vector<bool> covered(simplices_[d].size(), false);
    if (d + 1 < simplices_.size())
      for (std::size_t j = 0; j < simplices_[d + 1].size(); ++j)
        for (std::size_t f : facets({d + 1, j})) covered[f] = true;
    for (std::size_t i = 0; i < simplices_[d].size(); ++i)
      if (!covered[i]) out.push_back(simplices_[d][i]);
  }
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < simplices_.size(); ++d)
    chi += (d % 2 == 0 ? 1L : -1L) * static_cast<long>(simplices_[d].size());
  return chi;
}

std::vector<Simplex> Subcomplex::original_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= complex.dimension(); ++d)
    for (const auto& s : complex.simplices(static_cast<std::size_t>(d))) {
      Simplex t;
      for (Vertex v : s) t.push_back(vertices[v]);
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

GSimplicialComplex::GSimplicialComplex(SimplicialComplex complex, GroupPtr group,
                                       std::vector<std::vector<Vertex>> vertex_action)
    : complex_(std::move(complex)), group_(std::move(group)), action_(std::move(vertex_action)) {
  const auto& g = *group_;
  const std::size_t nv = complex_.vertex_count();
  if (action_.size() != g.order()) invalid("action must list one vertex permutation per group element");
  for (Element x = 0; x < g.order(); ++x)
    if (!is_permutation(action_[x], nv))
      invalid("action of element " + g.name(x) + " is not a vertex permutation");
  for (Vertex v = 0; v < nv; ++v)
    if (action_[g.identity()][v] != v) invalid("identity does not act trivially");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const auto& pab = action_[g.mul(a, b)];
      for (Vertex v = 0; v < nv; ++v)
        if (pab[v] != action_[a][action_[b][v]])
          invalid("vertex action is not a homomorphism at (" + g.name(a) + ", " + g.name(b) + ")");
    }

  const int top = complex_.dimension();
  simplex_action_.resize(top < 0 ? 0 : static_cast<std::size_t>(top) + 1);
  for (std::size_t d = 0; d < simplex_action_.size(); ++d) {
    const auto& list = complex_.simplices(d);
    auto& table = simplex_action_[d];
    table.assign(g.order(), std::vector<std::size_t>(list.size()));
    for (Element x = 0; x < g.order(); ++x)
      for (std::size_t i = 0; i < list.size(); ++i) {
        auto image = complex_.find(act(x, list[i]));
        if (!image)
          invalid("element " + g.name(x) + " maps simplex " + simplex_string(list[i]) + " outside the complex");
        table[x][i] = *image;
      }
  }
  admissibility_ = check_admissible(*this);
}

GSimplicialComplex GSimplicialComplex::from_generators(
    SimplicialComplex complex, GroupPtr group, const std::vector<std::pair<Element, std::vector<Vertex>>>& generators) {
  const auto& g = *group;
  const std::size_t nv = complex.vertex_count();
  std::vector<std::vector<Vertex>> action(g.order());
  std::vector<Vertex> id(nv);
  std::iota(id.begin(), id.end(), Vertex{0});
  action[g.identity()] = id;
  for (const auto& [elt, perm] : generators) {
    if (elt >= g.order()) invalid("action element index out of range");
    if (!is_permutation(perm, nv)) invalid("action of element " + g.name(elt) + " is not a vertex permutation");
  }
  std::vector<Element> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (const auto& [elt, perm] : generators) {
      const Element y = g.mul(elt, x);
      if (!action[y].empty()) continue;
      std::vector<Vertex> p(nv);
      for (Vertex v = 0; v < nv; ++v) p[v] = perm[action[x][v]];
      action[y] = std::move(p);
      queue.push_back(y);
    }
  }
  if (queue.size() != g.order()) invalid("the listed action elements do not generate the group");
  // Generators must agree with the derived action (a generator may be reached first by another word).
  for (const auto& [elt, perm] : generators)
    if (action[elt] != perm) invalid("action of element " + g.name(elt) + " is inconsistent with the group relations");
  return GSimplicialComplex(std::move(complex), std::move(group), std::move(action));
}

GSimplicialComplex GSimplicialComplex::trivial_action(SimplicialComplex complex, GroupPtr group) {
  std::vector<Vertex> id(complex.vertex_count());
  std::iota(id.begin(), id.end(), Vertex{0});
  std::vector<std::vector<Vertex>> action(group->order(), id);
  return GSimplicialComplex(std::move(complex), std::move(group), std::move(action));
}

Simplex GSimplicialComplex::act(Element g, const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(action_[g][v]);
  std::sort(out.begin(), out.end());
  return out;
}

void GSimplicialComplex::require_admissible(const char* module) const {
  if (admissible()) return;
  const auto& w = *admissibility_.witness;
  fail(ErrorKind::NotAdmissible, module,
       "action is not admissible: element " + group_->name(w.element) + " fixes simplex " + simplex_string(w.simplex) +
           " setwise but not pointwise; subdivide first");
}

AdmissibilityReport check_admissible(const GSimplicialComplex& x) {
  const auto& g = *x.group();
  const auto& c = x.complex();
  for (Element e = 0; e < g.order(); ++e)
    for (int d = 1; d <= c.dimension(); ++d) {
      const auto dim = static_cast<std::size_t>(d);
      for (std::size_t i = 0; i < c.count(dim); ++i) {
        if (x.act(e, SimplexRef{dim, i}) != i) continue;
        for (Vertex v : c.simplices(dim)[i])
          if (x.act(e, v) != v) return AdmissibilityReport{false, AdmissibilityWitness{e, c.simplices(dim)[i]}};
      }
    }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

struct Subdivision {
  SimplicialComplex complex;
  /// First new vertex id of each dimension's simplices.
  std::vector<std::size_t> offset;
};

Subdivision subdivide_impl(const SimplicialComplex& x) {
  Subdivision out;
  std::size_t n = 0;
  for (int d = 0; d <= x.dimension(); ++d) {
    out.offset.push_back(n);
    n += x.count(static_cast<std::size_t>(d));
  }
  std::vector<Simplex> flags;
  // Full flags ending in each maximal simplex: recurse through facets.
  std::function<void(SimplexRef, Simplex&)> descend = [&](SimplexRef r, Simplex& chain) {
    chain.push_back(static_cast<Vertex>(out.offset[r.dim] + r.index));
    if (r.dim == 0) {
      flags.push_back(chain);
    } else {
      for (std::size_t f : x.facets(r)) descend({r.dim - 1, f}, chain);
    }
    chain.pop_back();
  };
  for (const auto& s : x.maximal_simplices()) {
    Simplex chain;
    descend({s.size() - 1, x.index(s)}, chain);
  }
  out.complex = SimplicialComplex::from_maximal(n, std::move(flags));
  return out;
}

}  // namespace

SimplicialComplex barycentric_subdivide(const SimplicialComplex& x) { return subdivide_impl(x).complex; }

GSimplicialComplex barycentric_subdivide(const GSimplicialComplex& x) {
  auto sub = subdivide_impl(x.complex());
  const auto& g = *x.group();
  std::vector<std::vector<Vertex>> action(g.order(), std::vector<Vertex>(sub.complex.vertex_count()));
  for (Element e = 0; e < g.order(); ++e)
    for (std::size_t d = 0; d < sub.offset.size(); ++d)
      for (std::size_t i = 0; i < x.complex().count(d); ++i)
        action[e][sub.offset[d] + i] = static_cast<Vertex>(sub.offset[d] + x.act(e, SimplexRef{d, i}));
  return GSimplicialComplex(std::move(sub.complex), x.group(), std::move(action));
}

// ---------------------------------------------------------------------------

OrbitData orbits_and_stabilizers(const GSimplicialComplex& x) {
  x.require_admissible(kModule);
  const auto& g = *x.group();
  const auto& c = x.complex();
  OrbitData data;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  for (int di = 0; di <= c.dimension(); ++di) {
    const auto d = static_cast<std::size_t>(di);
    auto& of = data.orbit_of.emplace_back(c.count(d), kUnset);
    for (std::size_t i = 0; i < c.count(d); ++i) {
      if (of[i] != kUnset) continue;
      const std::size_t id = data.orbits.size();
      std::vector<std::size_t> members;
      std::vector<Element> stab;
      for (Element e = 0; e < g.order(); ++e) {
        const std::size_t j = x.act(e, SimplexRef{d, i});
        if (j == i) stab.push_back(e);
        if (of[j] == kUnset) {
          of[j] = id;
          members.push_back(j);
        }
      }
      std::sort(members.begin(), members.end());
      data.orbits.push_back(SimplexOrbit{id, d, i, std::move(members), Subgroup(x.group(), std::move(stab))});
    }
  }
  for (const auto& o : data.orbits)
    if (o.members.size() * o.stabilizer.order() != g.order())
      fail(ErrorKind::InternalInconsistency, kModule, "orbit-stabilizer count fails");
  return data;
}

Subcomplex fixed_subcomplex(const GSimplicialComplex& x, const std::vector<Element>& s) {
  x.require_admissible(kModule);
  const auto& c = x.complex();
  for (Element e : s)
    if (e >= x.group()->order()) invalid("element index out of range");
  Subcomplex out;
  std::vector<long> local(c.vertex_count(), -1);
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    bool fixed = true;
    for (Element e : s) fixed = fixed && x.act(e, v) == v;
    if (fixed) {
      local[v] = static_cast<long>(out.vertices.size());
      out.vertices.push_back(v);
    }
  }
  std::vector<Simplex> kept;
  for (int d = 0; d <= c.dimension(); ++d)
    for (const auto& simplex : c.simplices(static_cast<std::size_t>(d))) {
      Simplex t;
      for (Vertex v : simplex) {
        if (local[v] < 0) break;
        t.push_back(static_cast<Vertex>(local[v]));
      }
      if (t.size() == simplex.size()) kept.push_back(std::move(t));
    }
  out.complex = SimplicialComplex::from_maximal(out.vertices.size(), std::move(kept));
  return out;
}

Quotient quotient_complex(const GSimplicialComplex& x) {
  x.require_admissible(kModule);
  const auto& g = *x.group();
  const auto& c = x.complex();
  Quotient q;
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  q.vertex_image.assign(c.vertex_count(), kUnset);
  Vertex next = 0;
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    if (q.vertex_image[v] != kUnset) continue;
    for (Element e = 0; e < g.order(); ++e) q.vertex_image[x.act(e, v)] = next;
    ++next;
  }

  const OrbitData orbits = orbits_and_stabilizers(x);
  std::map<Simplex, std::size_t> image_orbit;
  std::vector<Simplex> images;
  for (const auto& o : orbits.orbits) {
    Simplex img;
    for (Vertex v : c.simplices(o.dim)[o.rep]) img.push_back(q.vertex_image[v]);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
      fail(ErrorKind::NotRegular, kModule,
           "simplex " + simplex_string(c.simplices(o.dim)[o.rep]) +
               " has two vertices in one orbit; subdivide before taking the quotient");
    auto [it, inserted] = image_orbit.emplace(img, o.id);
    if (!inserted)
      fail(ErrorKind::NotRegular, kModule,
           "simplices " + simplex_string(c.simplices(o.dim)[o.rep]) + " and " +
               simplex_string(c.simplices(orbits.orbits[it->second].dim)[orbits.orbits[it->second].rep]) +
               " lie in different orbits but have the same image; subdivide before taking the quotient");
    images.push_back(std::move(img));
  }
  q.complex = SimplicialComplex::from_maximal(next, images);
  q.projection.resize(orbits.orbit_of.size());
  for (std::size_t d = 0; d < orbits.orbit_of.size(); ++d) {
    q.projection[d].resize(orbits.orbit_of[d].size());
    for (std::size_t i = 0; i < orbits.orbit_of[d].size(); ++i)
      q.projection[d][i] = q.complex.index(images[orbits.orbit_of[d][i]]);
  }
  return q;
}

RegularQuotient regular_quotient(const GSimplicialComplex& x, SubdivisionPolicy policy) {
  const int limit = policy == SubdivisionPolicy::Auto ? kMaxAutoSubdivisions : 0;
  GSimplicialComplex current = x;
  for (int round = 0;; ++round) {
    if (current.admissible()) {
      try {
        Quotient q = quotient_complex(current);
        return RegularQuotient{std::move(current), std::move(q), round};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRegular || round >= limit) throw;
      }
    } else if (round >= limit) {
      current.require_admissible(kModule);
    }
    current = barycentric_subdivide(current);
  }
}

FixedAction centralizer_fixed_action(const GSimplicialComplex& x, Element g) {
  x.require_admissible(kModule);
  Subgroup z = centralizer(x.group(), g);
  Subcomplex fixed = fixed_subcomplex(x, {g});
  auto local_group = make_group(z.as_group());
  std::vector<long> local(x.complex().vertex_count(), -1);
  for (std::size_t i = 0; i < fixed.vertices.size(); ++i) local[fixed.vertices[i]] = static_cast<long>(i);
  std::vector<std::vector<Vertex>> action(z.order(), std::vector<Vertex>(fixed.vertices.size()));
  for (std::size_t k = 0; k < z.order(); ++k)
    for (std::size_t i = 0; i < fixed.vertices.size(); ++i) {
      const long img = local[x.act(z.elements()[k], fixed.vertices[i])];
      if (img < 0) fail(ErrorKind::InternalInconsistency, kModule, "centralizer does not preserve the fixed set");
      action[k][i] = static_cast<Vertex>(img);
    }
  GSimplicialComplex restricted(fixed.complex, std::move(local_group), std::move(action));
  return FixedAction{std::move(z), std::move(fixed), std::move(restricted)};
}

// ---------------------------------------------------------------------------

std::vector<IsotropyStratum> isotropy_strata(const GSimplicialComplex& x, const OrbitData& orbits) {
  x.require_admissible(kModule);
  const auto& c = x.complex();
  const std::size_t n = orbits.orbits.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // Coface stabilizers sit inside face stabilizers, so equal order means equal
  // subgroups; codimension-one pairs generate the adjacency.
  for (int di = 1; di <= c.dimension(); ++di) {
    const auto d = static_cast<std::size_t>(di);
    for (std::size_t i = 0; i < c.count(d); ++i) {
      const std::size_t oi = orbits.orbit_of[d][i];
      for (std::size_t f : c.facets({d, i})) {
        const std::size_t of = orbits.orbit_of[d - 1][f];
        if (orbits.orbits[oi].stabilizer.order() == orbits.orbits[of].stabilizer.order())
          parent[root(oi)] = root(of);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t o = 0; o < n; ++o) groups[root(o)].push_back(o);
  std::vector<std::vector<std::size_t>> comps;
  for (auto& [r, members] : groups) comps.push_back(std::move(members));
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  // Cofaces of every simplex, to walk from a chosen representative to its neighbours.
  std::vector<std::vector<std::vector<std::size_t>>> cofaces(static_cast<std::size_t>(std::max(c.dimension(), 0)) + 1);
  for (std::size_t d = 0; d < cofaces.size(); ++d) cofaces[d].resize(c.count(d));
  for (int di = 1; di <= c.dimension(); ++di) {
    const auto d = static_cast<std::size_t>(di);
    for (std::size_t i = 0; i < c.count(d); ++i)
      for (std::size_t f : c.facets({d, i})) cofaces[d - 1][f].push_back(i);
  }

  std::vector<IsotropyStratum> strata;
  for (auto& members : comps) {
    const auto& first = orbits.orbits[members.front()];
    const Subgroup& stab = first.stabilizer;
    std::map<std::size_t, SimplexRef> chosen{{first.id, SimplexRef{first.dim, first.rep}}};
    std::vector<SimplexRef> queue{chosen.begin()->second};
    auto visit = [&](SimplexRef r) {
      const std::size_t o = orbits.orbit_id(r);
      if (orbits.orbits[o].stabilizer.order() != stab.order() || chosen.count(o)) return;
      chosen.emplace(o, r);
      queue.push_back(r);
    };
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const SimplexRef r = queue[qi];
      for (std::size_t f : c.facets(r)) visit({r.dim - 1, f});
      if (r.dim < cofaces.size())
        for (std::size_t cf : cofaces[r.dim][r.index]) visit({r.dim + 1, cf});
    }
    if (chosen.size() != members.size())
      fail(ErrorKind::InternalInconsistency, kModule, "stratum representatives do not cover the stratum");
    IsotropyStratum s{strata.size(), stab, {}, {}, true};
    for (const auto& [o, r] : chosen) {
      s.orbits.push_back(o);
      s.reps.push_back(r);
    }
    strata.push_back(std::move(s));
  }
  return strata;
}

}  // namespace orbikt
