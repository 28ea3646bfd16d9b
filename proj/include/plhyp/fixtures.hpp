#pragma once

#include "plhyp/complex.hpp"

namespace plhyp {

/// Standard desk-scale complexes used across tests and the CLI examples.
ComplexPtr delta_complex(int n);           // full n-simplex, vertices "0".."n"
ComplexPtr boundary_delta(int n);          // its boundary sphere
ComplexPtr torus7();                       // 7-vertex torus
ComplexPtr rp2_6();                        // 6-vertex projective plane
ComplexPtr two_triangles_wedge();          // glued at one vertex (not a manifold)
ComplexPtr two_disjoint_triangles();

}  // namespace plhyp
