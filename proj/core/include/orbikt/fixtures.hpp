#pragma once

#include <string>
#include <vector>

#include "orbikt/complex.hpp"

namespace orbikt {

/// A named built-in G-complex.
struct Fixture {
  std::string name;
  GSimplicialComplex space;
  /// Human-readable vertex labels (coordinates where they exist).
  std::vector<std::string> vertex_labels;
  int subdivisions = 0;
};

/// d4-torus, z4-torus, z2-flip-torus, z2-circle, or trivial-on(<space>) with
/// space one of point, interval, circle, sphere, torus, rp2.
Fixture make_fixture(const std::string& name);

std::vector<std::string> fixture_names();

/// Plain complexes used by the fixtures.
SimplicialComplex point_complex();
SimplicialComplex interval_complex();
/// Boundary of a square: 4 vertices, 4 edges.
SimplicialComplex circle_complex(std::size_t n = 4);
/// Boundary of the tetrahedron.
SimplicialComplex sphere_complex();
/// Six-vertex real projective plane.
SimplicialComplex rp2_complex();
/// 4x4 grid on the unit torus with each square coned at its centre
/// (32 vertices, 96 edges, 64 triangles).
SimplicialComplex torus_complex();

}  // namespace orbikt
