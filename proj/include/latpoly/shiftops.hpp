#pragma once

#include <map>
#include <vector>

#include "latpoly/determinant.hpp"
#include "latpoly/diagram.hpp"
#include "latpoly/polynomial.hpp"

namespace latpoly {

// Power sum, elementary and complete homogeneous symmetric polynomials in one
// alphabet of n variables.
Polynomial p_sym(int k, int n, Alpha a);
Polynomial e_sym(int k, int n, Alpha a);
Polynomial h_sym(int k, int n, Alpha a);

struct SignedDiagram {
    Rational coeff;
    LatticeDiagram diagram;
};
using SignedDiagramSum = std::vector<SignedDiagram>;

// p_k applied to delta(L), expanded combinatorially: one cell drops k steps
// along the chosen alphabet's axis (rows for X, columns for Y); the
// coefficient magnitude is a falling factorial and the sign is the parity of
// the reordering permutation.
SignedDiagramSum pk_apply(int k, const LatticeDiagram& L, Alpha a = Alpha::X);

// e_k: k distinct cells each drop one step; coefficients are products of the
// vacated coordinates (always >= 0).
SignedDiagramSum ek_apply(int k, const LatticeDiagram& L, Alpha a = Alpha::X);

// h_k: holes below cells climb, possibly in chains. Computed through the
// Newton recursion h_k = h_{k-1}e_1 - h_{k-2}e_2 + ... so the coefficients
// are exact; the hole-swap shape of the support is a tested property, not an
// assumption.
SignedDiagramSum hk_apply(int k, const LatticeDiagram& L, Alpha a = Alpha::X);

// True when the target diagram arises from L by choosing k holes and moving
// each one step up the alphabet's axis (chains through consecutive holes
// allowed).
bool is_hole_swap_image(const LatticeDiagram& L, const LatticeDiagram& target,
                        int k, Alpha a = Alpha::X);

Polynomial expand(const SignedDiagramSum& s, int nvars);

// Checks h_k(d) = sum_{m=1..k} (-1)^{m+1} (h_{k-m} e_m)(d) on delta(L).
bool newton_recursion_check(int k, const LatticeDiagram& L);

enum class TwoHoleVariant { horizontal, vertical };

struct TwoHoleResult {
    Rational c1, c2;   // coefficients on mu/{(i,j),(i+k,j+l)} and mu/{(i+l,j),(i,j+k)}
    bool residual_zero = false;
    bool signs_equal = false;
};

// Two-hole rewriting: applies e_{k-1}(X)p_l(Y) (horizontal, to
// the vertical domino mu/{(i,j),(i+1,j)}) or e_{l-1}(Y)p_k(X) (vertical, to
// mu/{(i,j),(i,j+1)}) and solves for the two target coefficients. A nonzero
// remainder throws.
TwoHoleResult two_hole_identity(const Partition& mu, const Cell& anchor, int k,
                                int l, TwoHoleVariant variant);

}  // namespace latpoly
