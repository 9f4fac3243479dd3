#pragma once

#include "petalforge/braid.hpp"
#include "petalforge/laurent.hpp"
#include "petalforge/pd.hpp"

namespace petalforge {

struct InvariantCaps {
  int kauffman_crossings = 22;
  int pd_route_crossings = 105;
};

// Caps for the exponential-time and dense-elimination routes. When the
// environment variable PETALFORGE_CAP is set, both caps take its value.
InvariantCaps invariant_caps();

// Reduced Burau image of a braid word, an (n-1)x(n-1) Laurent matrix.
PolyMatrix reduced_burau(const BraidWord& w);

// Alexander polynomial of the closure of w, which must be a knot. Normalized
// to lowest exponent 0 and positive top coefficient.
LaurentPolynomial alexander_from_braid(const BraidWord& w);

// Alexander polynomial from a planar diagram via the Wirtinger presentation
// and free-derivative rows, one row and one column deleted before the
// fraction-free determinant. Same normalization as the braid route.
LaurentPolynomial alexander_from_pd(const PDCode& pd);

// Closed form (t^{rs}-1)(t-1) / ((t^r-1)(t^s-1)) for coprime r, s.
LaurentPolynomial torus_alexander(int r, int s);

// Raw bracket state sum in the variable A, no writhe correction.
LaurentPolynomial bracket_state_sum(const PDCode& pd, int crossing_cap);

// Jones polynomial in t of the diagram's knot: bracket state sum followed by
// writhe normalization and the substitution t = A^-4. Refuses diagrams with
// more crossings than the cap.
LaurentPolynomial kauffman_bracket(const PDCode& pd);
LaurentPolynomial kauffman_bracket(const PDCode& pd, int crossing_cap);

}  // namespace petalforge
