#include "run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "orbikt/crossed.hpp"
#include "orbikt/error.hpp"
#include "orbikt/fixtures.hpp"
#include "orbikt/homology.hpp"
#include "orbikt/io.hpp"
#include "orbikt/ktheory.hpp"

namespace orbikt::cli {

using nlohmann::json;

namespace {

constexpr const char* kModule = "cli";

/// Column-aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    std::ostringstream out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::vector<std::string> element_names(const Subgroup& k) {
  std::vector<std::string> out;
  for (Element e : k.elements()) out.push_back(k.parent()->name(e));
  return out;
}

std::string subgroup_text(const Subgroup& k) { return "{" + join(element_names(k), ",") + "}"; }

std::vector<std::string> torsion_strings(const std::vector<BigInt>& t) {
  std::vector<std::string> out;
  for (const auto& x : t) out.push_back(x.get_str());
  return out;
}

std::vector<std::size_t> counts(const SimplicialComplex& c) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= c.dimension(); ++d) out.push_back(c.count(static_cast<std::size_t>(d)));
  return out;
}

std::size_t total_simplices(const SimplicialComplex& c) {
  std::size_t n = 0;
  for (auto k : counts(c)) n += k;
  return n;
}

json homology_json(const HomologyResult& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(torsion_strings(t));
  return {{"betti", h.betti}, {"torsion", torsion}};
}

std::string homology_text(const HomologyResult& h, const char* letter) {
  std::ostringstream out;
  for (std::size_t k = 0; k < h.betti.size(); ++k) {
    AbelianGroup a{h.betti[k], k < h.torsion.size() ? h.torsion[k] : std::vector<BigInt>{}, true};
    out << letter << k << " = " << a.to_string() << '\n';
  }
  return out.str();
}

json abelian_json(const AbelianGroup& a) {
  return {{"rank", a.rank}, {"torsion", torsion_strings(a.torsion)}, {"exact", a.exact}, {"text", a.to_string()}};
}

GroupPtr load_group(const std::string& source, std::size_t max_order) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return builtin_group(std::string_view(source).substr(prefix.size()), max_order);
  return parse_group(read_file(source), max_order);
}

struct Inputs {
  GroupPtr group;
  std::optional<GSimplicialComplex> space;
  std::optional<Fixture> fixture;
};

class Runner {
 public:
  Runner(const RunConfig& c, Report& r) : cfg_(c), rep_(r) {}

  void dispatch() {
    static const std::map<std::string, void (Runner::*)()> commands{
        {"group", &Runner::group},       {"complex", &Runner::complex},
        {"orbits", &Runner::orbits},     {"fixed", &Runner::fixed},
        {"quotient", &Runner::quotient}, {"betti", &Runner::betti},
        {"euler", &Runner::euler},       {"fiber", &Runner::fiber},
        {"prim", &Runner::prim},         {"filtration", &Runner::filtration},
        {"bc", &Runner::bc},             {"ktheory", &Runner::ktheory},
        {"identity-check", &Runner::identity_check}, {"fixture", &Runner::fixture},
    };
    auto it = commands.find(cfg_.command);
    if (it == commands.end()) fail(ErrorKind::InvalidInput, kModule, "unknown command '" + cfg_.command + "'");
    (this->*(it->second))();
  }

 private:
  const RunConfig& cfg_;
  Report& rep_;
  Inputs in_;

  void describe_inputs() {
    json inputs;
    if (in_.group) inputs["group_order"] = in_.group->order();
    if (!cfg_.group_source.empty()) inputs["group_source"] = cfg_.group_source;
    if (in_.fixture) inputs["fixture"] = in_.fixture->name;
    if (!cfg_.complex_file.empty()) inputs["complex_file"] = cfg_.complex_file;
    if (!cfg_.action_file.empty()) inputs["action_file"] = cfg_.action_file;
    if (in_.space) {
      inputs["vertices"] = in_.space->complex().vertex_count();
      inputs["simplices"] = counts(in_.space->complex());
    }
    rep_.meta["inputs"] = inputs;
  }

  void resolve_group() {
    if (!cfg_.group_source.empty() && !cfg_.fixture.empty())
      fail(ErrorKind::InvalidInput, kModule, "--group and --fixture are both group sources; give one");
    if (!cfg_.group_source.empty()) {
      in_.group = load_group(cfg_.group_source, cfg_.max_order);
    } else if (!cfg_.fixture.empty()) {
      in_.fixture = make_fixture(cfg_.fixture);
      in_.group = in_.fixture->space.group();
    } else {
      fail(ErrorKind::InvalidInput, kModule, "no group source: pass --group or --fixture");
    }
    describe_inputs();
  }

  void resolve_space() {
    if (!cfg_.fixture.empty() && !cfg_.complex_file.empty())
      fail(ErrorKind::InvalidInput, kModule, "--complex and --fixture are both complex sources; give one");
    if (!cfg_.fixture.empty()) {
      if (!cfg_.group_source.empty())
        fail(ErrorKind::InvalidInput, kModule, "a fixture carries its own group; drop --group");
      if (!cfg_.action_file.empty()) fail(ErrorKind::InvalidInput, kModule, "a fixture carries its own action");
      in_.fixture = make_fixture(cfg_.fixture);
      in_.group = in_.fixture->space.group();
      in_.space = in_.fixture->space;
    } else if (!cfg_.complex_file.empty()) {
      ComplexFile file = parse_complex(read_file(cfg_.complex_file));
      if (!cfg_.action_file.empty())
        for (auto& g : parse_action(read_file(cfg_.action_file))) file.generators.push_back(std::move(g));
      if (!cfg_.group_source.empty()) in_.group = load_group(cfg_.group_source, cfg_.max_order);
      else if (file.generators.empty()) in_.group = trivial_group();
      else fail(ErrorKind::InvalidInput, kModule, "act lines need a group: pass --group");
      if (total_simplices(file.complex) > cfg_.max_simplices)
        fail(ErrorKind::BoundExceeded, kModule,
             "complex has more than " + std::to_string(cfg_.max_simplices) + " simplices");
      in_.space = make_action(std::move(file), in_.group);
    } else {
      fail(ErrorKind::InvalidInput, kModule, "no complex source: pass --complex or --fixture");
    }
    describe_inputs();
  }

  const GSimplicialComplex& space() const { return *in_.space; }
  const FiniteGroup& grp() const { return *in_.group; }

  std::string label(Vertex v) const {
    if (in_.fixture && v < in_.fixture->vertex_labels.size()) return in_.fixture->vertex_labels[v];
    return std::to_string(v);
  }

  std::string simplex_text(const Simplex& s) const {
    std::vector<std::string> parts;
    for (Vertex v : s) parts.push_back(label(v));
    return "[" + join(parts, " ") + "]";
  }

  void add_flag(std::string kind, std::string ref, std::string detail) {
    rep_.flags.push_back({std::move(kind), std::move(ref), std::move(detail)});
  }

  void add_discrepancies(const std::vector<ReferenceDiscrepancy>& ds) {
    for (const auto& d : ds) add_flag(d.kind, d.ref, d.quantity + ": " + d.detail);
  }

  void group() {
    resolve_group();
    const CharacterTable ct = character_table(in_.group, cfg_.max_order);
    const auto& cd = ct.classes();
    json classes = json::array();
    Table ctab({"class", "size", "elements"});
    for (std::size_t i = 0; i < cd.size(); ++i) {
      std::vector<std::string> names;
      for (Element e : cd.classes[i]) names.push_back(grp().name(e));
      classes.push_back({{"rep", grp().name(cd.reps[i])}, {"size", cd.classes[i].size()}, {"elements", names}});
      ctab.add({"[" + grp().name(cd.reps[i]) + "]", std::to_string(cd.classes[i].size()), join(names, ",")});
    }
    json irreps = json::array();
    std::vector<std::string> header{"irrep", "degree"};
    for (Element r : cd.reps) header.push_back(grp().name(r));
    Table itab(header);
    for (const auto& irr : ct.irreps()) {
      std::vector<std::string> values;
      for (const auto& v : irr.values) values.push_back(v.to_string());
      irreps.push_back({{"id", irr.id}, {"degree", irr.degree}, {"values", values}});
      std::vector<std::string> row{std::to_string(irr.id), std::to_string(irr.degree)};
      row.insert(row.end(), values.begin(), values.end());
      itab.add(row);
    }
    std::vector<std::string> elements;
    for (Element e = 0; e < grp().order(); ++e) elements.push_back(grp().name(e));
    rep_.payload = {{"order", grp().order()}, {"abelian", grp().is_abelian()}, {"exponent", grp().exponent()},
                    {"elements", elements}, {"classes", classes}, {"conductor", ct.conductor()},
                    {"irreps", irreps}};
    std::ostringstream t;
    t << "group of order " << grp().order() << ", " << (grp().is_abelian() ? "abelian" : "non-abelian")
      << ", exponent " << grp().exponent() << "\n\n"
      << ctab.str() << "\ncharacter table (values in Q(zeta_" << ct.conductor() << "))\n"
      << itab.str();
    rep_.text = t.str();
  }

  void complex() {
    resolve_space();
    const auto& c = space().complex();
    const auto& adm = space().admissibility();
    json witness = nullptr;
    if (adm.witness)
      witness = {{"element", grp().name(adm.witness->element)}, {"simplex", adm.witness->simplex}};
    rep_.payload = {{"vertices", c.vertex_count()}, {"dimension", c.dimension()}, {"counts", counts(c)},
                    {"euler", c.euler_characteristic()}, {"group_order", grp().order()},
                    {"admissible", adm.admissible}, {"witness", witness}};
    if (in_.fixture) rep_.payload["subdivisions"] = in_.fixture->subdivisions;
    std::ostringstream t;
    t << "vertices " << c.vertex_count() << ", dimension " << c.dimension() << ", simplices per dimension "
      << join(counts(c)) << "\nEuler characteristic " << c.euler_characteristic() << "\ngroup order "
      << grp().order() << ", action " << (adm.admissible ? "admissible" : "not admissible");
    if (adm.witness)
      t << " (" << grp().name(adm.witness->element) << " moves a vertex of " << simplex_text(adm.witness->simplex)
        << " within it)";
    t << '\n';
    rep_.text = t.str();
  }

  void orbits() {
    resolve_space();
    const OrbitData od = orbits_and_stabilizers(space());
    json orbits = json::array();
    Table tab({"orbit", "dim", "rep", "size", "stabilizer"});
    for (const auto& o : od.orbits) {
      const Simplex& rep = space().complex().simplex({o.dim, o.rep});
      orbits.push_back({{"id", o.id}, {"dim", o.dim}, {"rep", rep}, {"size", o.members.size()},
                        {"stabilizer", element_names(o.stabilizer)}, {"stabilizer_order", o.stabilizer.order()}});
      tab.add({std::to_string(o.id), std::to_string(o.dim), simplex_text(rep), std::to_string(o.members.size()),
               subgroup_text(o.stabilizer)});
    }
    json strata = json::array();
    Table stab({"stratum", "stabilizer", "orbits"});
    for (const auto& s : isotropy_strata(space(), od)) {
      strata.push_back({{"id", s.id}, {"stabilizer", element_names(s.stabilizer)}, {"orbits", s.orbits},
                        {"connected", s.connected}});
      stab.add({std::to_string(s.id), subgroup_text(s.stabilizer), join(s.orbits, ",")});
    }
    rep_.payload = {{"orbits", orbits}, {"strata", strata}};
    rep_.text = tab.str() + "\n" + stab.str();
  }

  void fixed() {
    resolve_space();
    const auto elements = parse_elements(grp(), cfg_.args);
    if (elements.empty()) fail(ErrorKind::InvalidInput, kModule, "fixed needs at least one group element");
    const Subcomplex sc = fixed_subcomplex(space(), elements);
    std::vector<std::string> names, labels;
    for (Element e : elements) names.push_back(grp().name(e));
    for (Vertex v : sc.vertices) labels.push_back(label(v));
    json h = nullptr;
    std::string htext;
    if (!sc.vertices.empty()) {
      const HomologyResult hr = homology_integral(sc.complex);
      h = homology_json(hr);
      htext = homology_text(hr, "H");
    }
    rep_.payload = {{"elements", names}, {"vertices", sc.vertices}, {"labels", labels},
                    {"counts", counts(sc.complex)}, {"homology", h}};
    std::ostringstream t;
    t << "fixed by " << join(names, ",") << ": " << sc.vertices.size() << " vertices";
    if (!sc.vertices.empty()) t << ", simplices per dimension " << join(counts(sc.complex));
    t << '\n';
    if (!labels.empty()) t << "vertices " << join(labels) << '\n';
    rep_.text = t.str() + htext;
  }

  void quotient() {
    resolve_space();
    const RegularQuotient rq = regular_quotient(space(), cfg_.policy);
    const auto& q = rq.quotient.complex;
    const HomologyResult h = homology_integral(q);
    rep_.payload = {{"subdivisions", rq.subdivisions}, {"vertices", q.vertex_count()}, {"counts", counts(q)},
                    {"euler", q.euler_characteristic()}, {"homology", homology_json(h)}};
    std::ostringstream t;
    t << "quotient after " << rq.subdivisions << " subdivision(s): " << q.vertex_count()
      << " vertices, simplices per dimension " << join(counts(q)) << ", Euler characteristic "
      << q.euler_characteristic() << '\n'
      << homology_text(h, "H");
    rep_.text = t.str();
  }

  void betti() {
    resolve_space();
    const HomologyResult h = homology_integral(space().complex());
    const HomologyResult co = cohomology_integral(h);
    const KRanks k = k_ranks(h);
    rep_.payload = {{"homology", homology_json(h)}, {"cohomology", homology_json(co)},
                    {"k_ranks", {{"even", k.even}, {"odd", k.odd}}}};
    rep_.text = homology_text(h, "H") + homology_text(co, "H^") + "K0 rank " + std::to_string(k.even) +
                ", K1 rank " + std::to_string(k.odd) + "\n";
  }

  void euler() {
    resolve_space();
    if (cfg_.method == "quotient-check") {
      const IdentityCheck c = euler_quotient_check(space(), cfg_.policy);
      rep_.payload = {{"method", cfg_.method}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"integral", c.integral},
                      {"holds", c.holds()}};
      if (!c.holds()) add_flag("identity-failure", "euler-quotient", "chi of the quotient differs from the fixed-set average");
      rep_.text = "chi(G\\X) = " + std::to_string(c.lhs) + ", average of chi(X^g) = " + std::to_string(c.rhs) +
                  (c.integral ? "" : " (not integral)") + (c.holds() ? ": holds\n" : ": FAILS\n");
      return;
    }
    static const std::map<std::string, EulerMethod> methods{
        {"bc", EulerMethod::BC}, {"pairs", EulerMethod::CommutingPairs}, {"isolated", EulerMethod::Isolated}};
    auto it = methods.find(cfg_.method);
    if (it == methods.end()) fail(ErrorKind::InvalidInput, kModule, "unknown Euler method '" + cfg_.method + "'");
    const long chi = equivariant_euler(space(), it->second, cfg_.policy);
    rep_.payload = {{"method", cfg_.method}, {"euler", chi}};
    rep_.text = "equivariant Euler characteristic (" + cfg_.method + ") " + std::to_string(chi) + "\n";
  }

  void fiber() {
    resolve_group();
    const auto gens = parse_elements(grp(), cfg_.args);
    const Subgroup k = Subgroup::generated(in_.group, gens);
    const FiberDecomposition fd = fiber_decomposition(k, cfg_.max_order);
    json blocks = json::array();
    Table tab({"irrep", "degree", "block", "multiplicity"});
    for (const auto& b : fd.blocks) {
      blocks.push_back({{"irrep", b.irrep}, {"degree", b.degree}, {"block_dim", b.block_dim},
                        {"multiplicity", b.multiplicity}});
      tab.add({std::to_string(b.irrep), std::to_string(b.degree), "M" + std::to_string(b.block_dim),
               std::to_string(b.multiplicity)});
    }
    rep_.payload = {{"stabilizer", element_names(k)}, {"stabilizer_order", k.order()}, {"blocks", blocks},
                    {"total", fd.total()}};
    rep_.text = "stabilizer " + subgroup_text(k) + "\n" + tab.str() + "sum of block * multiplicity = " +
                std::to_string(fd.total()) + "\n";
  }

  static std::string node_label(const PrimNode& n) {
    return "(" + std::to_string(n.unit) + "," + std::to_string(n.irrep) + ")";
  }

  void prim() {
    resolve_space();
    const PrimPoset p = cfg_.aggregate ? aggregated_specialization(space(), cfg_.max_order)
                                       : specialization(space(), cfg_.max_order);
    const auto ix = ix_nodes(p);
    json nodes = json::array();
    Table tab({"node", cfg_.aggregate ? "stratum" : "orbit", "irrep", "stabilizer", "degree", "block"});
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& n = p.node(i);
      const auto& k = p.unit(n.unit).stabilizer;
      nodes.push_back({{"id", i}, {"label", node_label(n)}, {"unit", n.unit}, {"irrep", n.irrep},
                       {"stabilizer_order", k.order()}, {"degree", p.degree(i)}, {"block_dim", p.block_dim(i)}});
      tab.add({node_label(n), std::to_string(n.unit), std::to_string(n.irrep), std::to_string(k.order()),
               std::to_string(p.degree(i)), "M" + std::to_string(p.block_dim(i))});
    }
    json relation = json::array();
    std::ostringstream edges;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (a != b && p.below(a, b)) {
          relation.push_back({a, b});
          edges << node_label(p.node(a)) << " <= " << node_label(p.node(b)) << '\n';
        }
    rep_.payload = {{"unit_kind", cfg_.aggregate ? "stratum" : "orbit"}, {"nodes", nodes}, {"relation", relation},
                    {"ix", ix}, {"ix_open", true}, {"reflexive", p.is_reflexive()},
                    {"transitive", p.is_transitive()}, {"t0", p.is_t0()}};
    std::vector<std::string> ixl;
    for (auto i : ix) ixl.push_back(node_label(p.node(i)));
    rep_.text = std::to_string(p.size()) + " nodes\n" + tab.str() + "\n" + edges.str() + "\nI_X: " +
                std::to_string(ix.size()) + " nodes, open: " + join(ixl) + "\n";
  }

  void filtration() {
    if (cfg_.args.size() != 1) fail(ErrorKind::InvalidInput, kModule, "filtration needs exactly one file");
    resolve_space();
    const Filtration f = parse_filtration(read_file(cfg_.args[0]));
    const PrimPoset p = aggregated_specialization(space(), cfg_.max_order);
    const FiltrationReport r = filtration_report(p, f);
    json steps = json::array();
    std::ostringstream t;
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      std::vector<std::string> added;
      for (auto n : r.steps[i].added) added.push_back(node_label(p.node(n)));
      steps.push_back({{"added", added}, {"size", added.size()}, {"cumulative", r.steps[i].cumulative},
                       {"open", true}});
      t << "step " << i + 1 << ": +" << added.size() << " (" << r.steps[i].cumulative << " of " << p.size()
        << "), open\n";
    }
    rep_.payload = {{"nodes", p.size()}, {"steps", steps}, {"exhaustive", r.exhaustive}};
    t << (r.exhaustive ? "exhaustive\n" : "not exhaustive\n");
    rep_.text = t.str();
  }

  void bc() {
    resolve_space();
    const BCDecomposition d = bc_decomposition(space(), cfg_.policy);
    json per_class = json::array();
    Table tab({"class", "size", "centralizer", "K0", "K1"});
    for (const auto& c : d.classes) {
      per_class.push_back({{"rep", grp().name(c.rep)}, {"class_size", c.class_size},
                           {"centralizer_order", c.centralizer_order}, {"even", c.ranks.even}, {"odd", c.ranks.odd},
                           {"subdivisions", c.subdivisions}});
      tab.add({"[" + grp().name(c.rep) + "]", std::to_string(c.class_size), std::to_string(c.centralizer_order),
               std::to_string(c.ranks.even), std::to_string(c.ranks.odd)});
    }
    rep_.payload = {{"per_class", per_class}, {"totals", {{"even", d.totals.even}, {"odd", d.totals.odd}}}};
    if (in_.fixture) add_discrepancies(reference_discrepancies(in_.fixture->name, nullptr, &d));
    rep_.text = tab.str() + "K0 rank " + std::to_string(d.totals.even) + ", K1 rank " + std::to_string(d.totals.odd) +
                "\n";
  }

  void ktheory() {
    resolve_space();
    const IsolatedKResult r = isolated_k_theory(space(), cfg_.policy, cfg_.max_order);
    const BCDecomposition d = bc_decomposition(space(), cfg_.policy);
    json singular = json::array();
    for (const auto& s : r.singular_orbits)
      singular.push_back({{"orbit", s.orbit}, {"stabilizer", element_names(s.stabilizer)},
                          {"stabilizer_order", s.stabilizer.order()}, {"extra", s.extra}});
    rep_.payload = {{"k0", abelian_json(r.k0)},
                    {"k1", abelian_json(r.k1)},
                    {"boundary", boundary_status_name(r.boundary)},
                    {"torsion_bounds", r.torsion_bounds},
                    {"singular_orbits", singular},
                    {"quotient",
                     {{"dimension", r.quotient_dimension},
                      {"cohomology", homology_json(r.quotient_cohomology)},
                      {"k0", abelian_json(r.quotient_k0)},
                      {"k1", abelian_json(r.quotient_k1)}}},
                    {"bc_totals", {{"even", d.totals.even}, {"odd", d.totals.odd}}}};
    if (d.totals.even != r.k0.rank || d.totals.odd != r.k1.rank)
      add_flag("internal-disagreement", "bc", "localization ranks differ from the exact sequence");
    if (in_.fixture) add_discrepancies(reference_discrepancies(in_.fixture->name, &r, &d));
    std::ostringstream t;
    t << "K0 = " << r.k0.to_string() << ", K1 = " << r.k1.to_string() << '\n'
      << "boundary: " << boundary_status_name(r.boundary) << '\n'
      << "quotient (dimension " << r.quotient_dimension << "): K0 = " << r.quotient_k0.to_string()
      << ", K1 = " << r.quotient_k1.to_string() << '\n'
      << r.singular_orbits.size() << " singular orbit(s), stabilizer orders " << join(r.torsion_bounds, ",") << '\n'
      << "localization cross-check: K0 rank " << d.totals.even << ", K1 rank " << d.totals.odd << '\n';
    rep_.text = t.str();
  }

  void identity_check() {
    resolve_space();
    json checks = json::array();
    std::ostringstream t;
    auto record = [&](const std::string& name, const IdentityCheck& c) {
      checks.push_back({{"name", name}, {"applicable", true}, {"lhs", c.lhs}, {"rhs", c.rhs},
                        {"integral", c.integral}, {"holds", c.holds()}});
      t << name << ": " << c.lhs << " = " << c.rhs << (c.holds() ? " holds\n" : " FAILS\n");
      if (!c.holds()) add_flag("identity-failure", name, std::to_string(c.lhs) + " != " + std::to_string(c.rhs));
    };
    record("euler-quotient", euler_quotient_check(space(), cfg_.policy));
    try {
      record("bc-count", bc_vs_count_identity(space(), cfg_.max_order));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotApplicable) throw;
      checks.push_back({{"name", "bc-count"}, {"applicable", false}, {"reason", e.what()}});
      add_flag("non-applicable-identity", "bc-count", e.what());
      t << "bc-count: not applicable\n";
    }
    const InvariantsCheck inv = invariants_check(space(), cfg_.policy);
    json degrees = json::array();
    for (const auto& d : inv.degrees) {
      degrees.push_back({{"degree", d.degree}, {"invariant", d.invariant}, {"quotient", d.quotient}});
      t << "invariants H^" << d.degree << ": " << d.invariant << " = " << d.quotient << (d.equal() ? "\n" : " FAILS\n");
    }
    if (!inv.all_equal()) add_flag("identity-failure", "invariants", "invariant cohomology differs from the quotient");
    checks.push_back({{"name", "invariants"}, {"applicable", true}, {"degrees", degrees}, {"holds", inv.all_equal()}});
    rep_.payload = {{"checks", checks}};
    rep_.text = t.str();
  }

  void fixture() {
    if (cfg_.args.size() > 1) fail(ErrorKind::InvalidInput, kModule, "fixture takes one name");
    const std::string name = cfg_.args.empty() ? cfg_.fixture : cfg_.args[0];
    if (name.empty()) fail(ErrorKind::InvalidInput, kModule, "fixture needs a name");
    in_.fixture = make_fixture(name);
    in_.group = in_.fixture->space.group();
    in_.space = in_.fixture->space;
    describe_inputs();
    const auto& c = space().complex();
    const OrbitData od = orbits_and_stabilizers(space());
    // Conjugacy classes of vertex stabilizers, with how many vertex orbits carry each.
    std::vector<std::pair<Subgroup, std::size_t>> inventory;
    for (const auto& o : od.orbits) {
      if (o.dim != 0) continue;
      auto it = std::find_if(inventory.begin(), inventory.end(),
                             [&](const auto& e) { return e.first.is_conjugate_to(o.stabilizer); });
      if (it == inventory.end()) inventory.push_back({o.stabilizer, 1});
      else ++it->second;
    }
    json stabilizers = json::array();
    Table tab({"stabilizer", "order", "vertex orbits"});
    for (const auto& [k, n] : inventory) {
      stabilizers.push_back({{"representative", element_names(k)}, {"order", k.order()}, {"vertex_orbits", n}});
      tab.add({subgroup_text(k), std::to_string(k.order()), std::to_string(n)});
    }
    rep_.payload = {{"name", name}, {"group_order", grp().order()}, {"vertices", c.vertex_count()},
                    {"counts", counts(c)}, {"subdivisions", in_.fixture->subdivisions},
                    {"admissible", space().admissible()}, {"stabilizers", stabilizers}};
    std::ostringstream t;
    t << name << ": group of order " << grp().order() << " on " << c.vertex_count()
      << " vertices, simplices per dimension " << join(counts(c)) << '\n'
      << tab.str();
    if (cfg_.emit) {
      namespace fs = std::filesystem;
      const fs::path dir(cfg_.out_dir);
      fs::create_directories(dir);
      const fs::path gfile = dir / (name + ".group");
      const fs::path cfile = dir / (name + ".complex");
      std::ofstream(gfile) << write_group(grp());
      std::ofstream(cfile) << write_complex(space());
      if (!fs::exists(gfile) || !fs::exists(cfile))
        fail(ErrorKind::InvalidInput, kModule, "could not write fixture files to '" + dir.string() + "'");
      rep_.payload["files"] = {gfile.string(), cfile.string()};
      t << "wrote " << gfile.string() << " and " << cfile.string() << '\n';
    }
    rep_.text = t.str();
  }
};

}  // namespace

json Report::to_json() const {
  json flags_json = json::array();
  for (const auto& f : flags) flags_json.push_back({{"kind", f.kind}, {"ref", f.ref}, {"detail", f.detail}});
  json doc = {{"meta", meta}, {"payload", payload}, {"flags", flags_json}};
  if (!error.is_null()) doc["error"] = error;
  return doc;
}

std::string Report::render(OutputFormat format) const {
  if (format == OutputFormat::Json) return to_json().dump(2) + "\n";
  std::string out = text;
  for (const auto& f : flags) out += "flag: " + f.kind + "(" + f.ref + "): " + f.detail + "\n";
  return out;
}

std::vector<std::string> command_names() {
  return {"group", "complex", "orbits", "fixed", "quotient", "betti", "euler", "fiber",
          "prim", "filtration", "bc", "ktheory", "identity-check", "fixture"};
}

Report run(const RunConfig& config) {
  Report rep;
  rep.meta = {{"command", config.command},
              {"args", config.args},
              {"format_version", 1},
              {"max_order", config.max_order},
              {"max_simplices", config.max_simplices},
              {"subdivision", config.policy == SubdivisionPolicy::Auto ? "auto" : "forbid"},
              {"associativity_seed", kAssociativitySeed}};
  try {
    if (config.max_order == 0 || config.max_simplices == 0)
      fail(ErrorKind::InvalidInput, kModule, "bounds must be positive");
    Runner(config, rep).dispatch();
  } catch (const Error& e) {
    rep.exit_code = is_refusal(e.kind()) ? 2 : 1;
    rep.error = {{"kind", std::string(e.name())}, {"module", e.module()}, {"message", e.what()}};
    rep.payload = nullptr;
  } catch (const std::exception& e) {
    rep.exit_code = 1;
    rep.error = {{"kind", "InvalidInput"}, {"module", kModule}, {"message", e.what()}};
    rep.payload = nullptr;
  }
  return rep;
}

}  // namespace orbikt::cli
