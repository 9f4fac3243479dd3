#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "petalforge/braid.hpp"
#include "petalforge/pd.hpp"
#include "petalforge/perm.hpp"

namespace petalforge {

// Petal diagram: one multi-crossing rose with L petals, L odd. The knot is
// determined by the heights of its L straight passes through the center,
// listed in traversal order; greater height crosses over smaller.
struct PetalPermutation {
  std::vector<int> heights;

  int petals() const { return static_cast<int>(heights.size()); }
  void validate() const;
  // Heights in traversal order: "(3 1 4 2 5)".
  std::string to_string() const;
  static PetalPermutation parse(std::string_view text);
};

// Star diagram datum: the braid half_twist(n)^-1 br(p^-1) br(p).
struct StarSpec {
  int strands;
  Permutation perm;

  explicit StarSpec(Permutation p) : strands(p.degree()), perm(std::move(p)) {}
};

BraidWord star_braid(const StarSpec& spec);

// Decides from the normal form whether w is the star braid of some
// permutation, and returns that permutation when it is.
std::optional<StarSpec> is_star_representable(const BraidWord& w);

// Petal diagram of the closure of
//   cycle_braid(n) br(p1)^-1 br(p1^-1)^-1 br(p2^-1) br(p2)
// on n strands, with 2n+1 petals.
PetalPermutation petal_from_pair(const Permutation& p1, const Permutation& p2);

// Planar diagram of the petal projection, built from exact rational chord
// geometry: L passes pairwise crossing once, L(L-1)/2 crossings, the pass of
// smaller height going under.
PDCode petal_to_pd(const PetalPermutation& p);

std::string render_svg(const PetalPermutation& p);

}  // namespace petalforge
