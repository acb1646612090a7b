#pragma once

#include <vector>

#include "latpoly/diagram.hpp"
#include "latpoly/polynomial.hpp"

namespace latpoly {

// The lattice determinant det || x_i^{p_j} y_i^{q_j} || with columns in
// pseudo-lex order. Expanded as a permutation sum; the n! signed terms are
// pairwise distinct, so no cancellation occurs. Parallel over the first-row
// column choice.
Polynomial delta(const LatticeDiagram& d);

// Cofactor-expansion reference, kept as an independent oracle for tests and
// the benchmark.
Polynomial delta_serial(const LatticeDiagram& d);

// Write P as sum c_D * delta(D) over the given diagrams. Each coefficient is
// probed on the identity-permutation monomial of its diagram and the answer
// is confirmed by subtracting the full expansion; a nonzero remainder throws.
std::vector<Rational> extract_diagram_coefficients(
    const Polynomial& P, const std::vector<LatticeDiagram>& ds);

}  // namespace latpoly
