#pragma once

#include <vector>

#include "morsetile/complex.hpp"

namespace morsetile::catalog {

/// The closed simplex {0..n}.
SimplicialComplex simplex(int n);
/// Boundary of the simplex {0..n+1}, an n-sphere.
SimplicialComplex sphere(int n);
SimplicialComplex octahedron();
SimplicialComplex icosahedron();
/// Triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
SimplicialComplex torus7();
SimplicialComplex projective_plane6();
/// Square grid on Z_m x Z_n with one diagonal per square.
SimplicialComplex grid_torus(int m, int n);
/// Grid with the second direction flipped across the seam.
SimplicialComplex klein_bottle(int m, int n);
/// Connected sum of two copies of torus7.
SimplicialComplex genus2();
/// Suspension of a k-gon.
SimplicialComplex bipyramid(int k);
/// Second complex shifted past the vertices of the first.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
/// Four triangles, each two of them sharing exactly one vertex.
SimplicialComplex four_triangles();

/// Closed surfaces used by the surface tests and benchmarks.
std::vector<SimplicialComplex> surface_corpus();

}  // namespace morsetile::catalog
