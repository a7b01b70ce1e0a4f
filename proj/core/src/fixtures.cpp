#include "orbikt/fixtures.hpp"

#include <array>
#include <map>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "cli";

// Torus vertices in units of 1/8: grid points (2i, 2j) and centres (2i+1, 2j+1).
constexpr int kGrid = 4;
constexpr int kUnits = 2 * kGrid;

using Point = std::array<int, 2>;
using IntMatrix = std::array<int, 4>;

int wrap(int v) { return ((v % kUnits) + kUnits) % kUnits; }

Point torus_point(Vertex v) {
  const int k = static_cast<int>(v);
  if (k < kGrid * kGrid) return {2 * (k / kGrid), 2 * (k % kGrid)};
  const int c = k - kGrid * kGrid;
  return {2 * (c / kGrid) + 1, 2 * (c % kGrid) + 1};
}

Vertex torus_vertex(Point p) {
  const int x = wrap(p[0]), y = wrap(p[1]);
  if (x % 2 == 0 && y % 2 == 0) return static_cast<Vertex>((x / 2) * kGrid + y / 2);
  if (x % 2 == 1 && y % 2 == 1) return static_cast<Vertex>(kGrid * kGrid + (x / 2) * kGrid + y / 2);
  fail(ErrorKind::InternalInconsistency, kModule, "torus action leaves the vertex lattice");
}

std::vector<Vertex> torus_permutation(const IntMatrix& m) {
  std::vector<Vertex> perm(2 * kGrid * kGrid);
  for (Vertex v = 0; v < perm.size(); ++v) {
    const Point p = torus_point(v);
    perm[v] = torus_vertex({m[0] * p[0] + m[1] * p[1], m[2] * p[0] + m[3] * p[1]});
  }
  return perm;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

constexpr IntMatrix kRotation{0, -1, 1, 0};
constexpr IntMatrix kReflection{1, 0, 0, -1};

std::string eighths(int v) {
  if (v == 0) return "0";
  int num = v, den = kUnits;
  while (num % 2 == 0 && den % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<std::string> torus_labels() {
  std::vector<std::string> labels;
  for (Vertex v = 0; v < 2 * kGrid * kGrid; ++v) {
    const Point p = torus_point(v);
    labels.push_back("(" + eighths(p[0]) + "," + eighths(p[1]) + ")");
  }
  return labels;
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

Fixture finish(std::string name, GSimplicialComplex space, std::vector<std::string> labels) {
  Fixture f{std::move(name), std::move(space), std::move(labels), 0};
  while (!f.space.admissible()) {
    if (f.subdivisions >= kMaxAutoSubdivisions)
      fail(ErrorKind::InternalInconsistency, kModule, "fixture " + f.name + " did not become admissible");
    f.space = barycentric_subdivide(f.space);
    f.vertex_labels = index_labels(f.space.complex().vertex_count());
    ++f.subdivisions;
  }
  return f;
}

GSimplicialComplex torus_with(const GroupPtr& group, const std::vector<std::pair<Element, IntMatrix>>& generators) {
  std::vector<std::pair<Element, std::vector<Vertex>>> gens;
  for (const auto& [e, m] : generators) gens.emplace_back(e, torus_permutation(m));
  return GSimplicialComplex::from_generators(torus_complex(), group, gens);
}

SimplicialComplex named_space(const std::string& space) {
  if (space == "point") return point_complex();
  if (space == "interval") return interval_complex();
  if (space == "circle") return circle_complex();
  if (space == "sphere") return sphere_complex();
  if (space == "torus") return torus_complex();
  if (space == "rp2") return rp2_complex();
  fail(ErrorKind::UnknownFixture, kModule, "unknown space '" + space + "' for trivial-on(...)");
}

}  // namespace

SimplicialComplex point_complex() { return SimplicialComplex::from_maximal(1, {{0}}); }

SimplicialComplex interval_complex() { return SimplicialComplex::from_maximal(2, {{0, 1}}); }

SimplicialComplex circle_complex(std::size_t n) {
  if (n < 3) fail(ErrorKind::InvalidInput, kModule, "a simplicial circle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (std::size_t k = 0; k < n; ++k) edges.push_back({static_cast<Vertex>(k), static_cast<Vertex>((k + 1) % n)});
  return SimplicialComplex::from_maximal(n, edges);
}

SimplicialComplex sphere_complex() {
  return SimplicialComplex::from_maximal(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex rp2_complex() {
  return SimplicialComplex::from_maximal(6, {{0, 1, 3},
                                             {0, 1, 5},
                                             {0, 2, 4},
                                             {0, 2, 5},
                                             {0, 3, 4},
                                             {1, 2, 3},
                                             {1, 2, 4},
                                             {1, 4, 5},
                                             {2, 3, 5},
                                             {3, 4, 5}});
}

SimplicialComplex torus_complex() {
  std::vector<Simplex> triangles;
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j) {
      const int x = 2 * i, y = 2 * j;
      const Vertex centre = torus_vertex({x + 1, y + 1});
      const std::array<Point, 4> corners{Point{x, y}, Point{x + 2, y}, Point{x + 2, y + 2}, Point{x, y + 2}};
      for (int k = 0; k < 4; ++k)
        triangles.push_back({torus_vertex(corners[k]), torus_vertex(corners[(k + 1) % 4]), centre});
    }
  return SimplicialComplex::from_maximal(2 * kGrid * kGrid, triangles);
}

std::vector<std::string> fixture_names() {
  return {"d4-torus",
          "z4-torus",
          "z2-flip-torus",
          "z2-circle",
          "trivial-on(point)",
          "trivial-on(interval)",
          "trivial-on(circle)",
          "trivial-on(sphere)",
          "trivial-on(torus)",
          "trivial-on(rp2)"};
}

Fixture make_fixture(const std::string& name) {
  if (name == "d4-torus") {
    // Element 1 is R, element 4 is S.
    return finish(name, torus_with(dihedral_group(4), {{1, kRotation}, {4, kReflection}}), torus_labels());
  }
  if (name == "z4-torus") return finish(name, torus_with(cyclic_group(4), {{1, kRotation}}), torus_labels());
  if (name == "z2-flip-torus")
    return finish(name, torus_with(cyclic_group(2), {{1, mat_mul(kRotation, kRotation)}}), torus_labels());
  if (name == "z2-circle") {
    auto space = GSimplicialComplex::from_generators(circle_complex(4), cyclic_group(2), {{1, {0, 3, 2, 1}}});
    return finish(name, std::move(space), index_labels(4));
  }
  const std::string prefix = "trivial-on(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    auto complex = named_space(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    const std::size_t n = complex.vertex_count();
    return finish(name, GSimplicialComplex::trivial_action(std::move(complex), trivial_group()), index_labels(n));
  }
  fail(ErrorKind::UnknownFixture, kModule, "unknown fixture '" + name + "'");
}

}  // namespace orbikt
