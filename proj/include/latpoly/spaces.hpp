#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "latpoly/determinant.hpp"
#include "latpoly/diagram.hpp"
#include "latpoly/polynomial.hpp"

namespace latpoly {

// Which alphabets a derivative closure is taken over.
enum class Derivatives { x_only, y_only, both };

struct HilbertEntry {
    int dx = 0;
    int dy = 0;
    std::int64_t dim = 0;
    auto operator<=>(const HilbertEntry&) const = default;
};

// Per-bidegree reduced row echelon bases over the canonical monomial order.
// The reduced form is unique, so equal spaces compare equal structurally.
class GradedSubspace {
  public:
    GradedSubspace() = default;
    explicit GradedSubspace(int nvars) : n_(nvars) {}

    int nvars() const { return n_; }

    // Splits into bihomogeneous components and inserts each; returns true if
    // the dimension grew.
    bool insert(const Polynomial& p);
    bool contains(const Polynomial& p) const;
    Polynomial reduce(Polynomial p) const;

    std::int64_t dimension() const;
    std::int64_t block_dimension(const Bidegree& d) const;
    std::vector<HilbertEntry> hilbert_series() const;

    const std::map<Bidegree, std::vector<Polynomial>>& blocks() const {
        return blocks_;
    }
    std::vector<const Polynomial*> rows() const;

    // Keep only blocks with zero y-degree.
    GradedSubspace x_restriction() const;

    bool operator==(const GradedSubspace&) const = default;

  private:
    bool insert_component(Polynomial p);

    int n_ = 0;
    // Rows sorted by decreasing pivot (leading monomial); fully reduced and
    // pivot-normalized.
    std::map<Bidegree, std::vector<Polynomial>> blocks_;
};

// Smallest derivative-closed space containing P (components inserted
// separately, so the result is graded). Breadth-first differentiation with
// per-bidegree echelon insertion; the frontier derivatives are computed in
// parallel.
GradedSubspace derivative_closure(const Polynomial& P,
                                  Derivatives which = Derivatives::both);
GradedSubspace closure_of(const std::vector<Polynomial>& gens, int nvars,
                          Derivatives which);

// Plain single-threaded reference, kept for tests and the benchmark.
GradedSubspace derivative_closure_serial(const Polynomial& P,
                                         Derivatives which = Derivatives::both);

GradedSubspace sum_spaces(const std::vector<GradedSubspace>& spaces);

// The y-layer coefficients of delta(D); their dX-closure is the zero
// y-degree part of the closure of delta(D).
std::vector<Polynomial> x_part_generators(const LatticeDiagram& d);
GradedSubspace x_space(const LatticeDiagram& d);

// Sum of derivative closures of delta(mu minus S) over all k-subsets S of the
// shadow of c. With x_only set, builds the zero y-degree part through the
// layer generators. Subset closures run in parallel and merge.
GradedSubspace build_mkij(const Partition& mu, const Cell& c, int k,
                          bool x_only = false);
GradedSubspace build_mkij_serial(const Partition& mu, const Cell& c, int k,
                                 bool x_only = false);

std::vector<std::vector<Cell>> shadow_subsets(const Partition& mu, const Cell& c,
                                              int k);

std::vector<HilbertEntry> hilbert_series(const GradedSubspace& s);

// Membership of P in the annihilator ideal of M^k_{i,j}, by direct
// application to every generator.
bool ideal_member_direct(const Polynomial& P, const Partition& mu, const Cell& c,
                         int k);

// Same predicate through the intersection form: P applied to the images of
// delta(mu) in n+k variables under the shadow-tuple derivative monomials.
bool ideal_member_intersection(const Polynomial& P, const Partition& mu,
                               const Cell& c, int k);

struct OrbitPoint {
    std::vector<Rational> a, b;
    bool operator==(const OrbitPoint& o) const { return a == o.a && b == o.b; }
    bool operator<(const OrbitPoint& o) const;
};

// One point per (white k-subset of the shadow, injective filling): coordinate
// i reads alpha at the row and beta at the column of entry i+1.
std::vector<OrbitPoint> orbit_points(const Partition& mu, const Cell& c, int k,
                                     const std::vector<Rational>& alpha,
                                     const std::vector<Rational>& beta);

// Prop-style transfer: multiplies P by the row/column guard factors in the
// extra variables and checks vanishing on the full orbit of mu.
bool orbit_vanishing_transfer(const Polynomial& P, const Partition& mu,
                              const Cell& c, int k,
                              const std::vector<Rational>& alpha,
                              const std::vector<Rational>& beta);

// Basis of the space of polynomials of total degree <= degree_cap in n
// variable pairs vanishing on all the points. Exact dense nullspace.
std::vector<Polynomial> vanishing_ideal_basis(const std::vector<OrbitPoint>& points,
                                              int nvars, int degree_cap);

}  // namespace latpoly
