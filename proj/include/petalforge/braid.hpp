#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "petalforge/perm.hpp"

namespace petalforge {

// A word in the Artin generators of the braid group on `strands` strands.
// Letter i > 0 is the positive crossing of strands i, i+1; -i its inverse.
// Products follow composition order: in the word "a b", b acts first, so the
// leftmost letter is applied last.
class BraidWord {
public:
  static constexpr int kMaxStrands = 64;

  BraidWord(int strands, std::vector<int> letters);
  static BraidWord empty(int strands) { return BraidWord(strands, {}); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  bool operator==(const BraidWord& o) const {
    return strands_ == o.strands_ && letters_ == o.letters_;
  }

  // Space-separated signed letters, e.g. "1 2 -1"; empty word prints as "".
  std::string to_string() const;
  static BraidWord parse(int strands, std::string_view text);

private:
  int strands_;
  std::vector<int> letters_;
};

// Positive braid lift of a permutation: the unique positive word whose letter
// count equals the inversion count and whose strands cross at most once.
BraidWord simple_braid(const Permutation& p);
// Half twist on n strands, the lift of the order reversal.
BraidWord half_twist(int n);
// Lift of the n-cycle i -> i+1; its word is 1 2 ... n-1.
BraidWord cycle_braid(int n);

Permutation underlying_permutation(const BraidWord& w);
BraidWord product(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
// conjugate(w, c) = c w c^-1.
BraidWord conjugate(const BraidWord& w, const BraidWord& c);
int exponent_sum(const BraidWord& w);
// Cancel adjacent letter pairs i, -i until none remain.
BraidWord free_reduce(const BraidWord& w);

// Left-greedy normal form: delta^k x_1 ... x_l with simple factors x_t,
// none the identity or the half twist, each x_{t+1} starting only with
// crossings that x_t finishes with.
struct NormalForm {
  int strands = 0;
  int delta_power = 0;
  std::vector<Permutation> factors;

  bool operator==(const NormalForm& o) const {
    return strands == o.strands && delta_power == o.delta_power && factors == o.factors;
  }
  bool is_trivial() const { return delta_power == 0 && factors.empty(); }
  std::size_t canonical_length() const { return factors.size(); }
  std::string to_string() const;
};

NormalForm normal_form(const BraidWord& w);
BraidWord word_of(const NormalForm& nf);
bool braids_equal(const BraidWord& a, const BraidWord& b);

// Crossings the simple braid of p can start with / finish with.
std::vector<int> starting_crossings(const Permutation& p);
std::vector<int> finishing_crossings(const Permutation& p);

// Markov destabilization, applied `count` times: each round removes the sole
// positive occurrence of the top generator and drops to one fewer strand.
// Throws if the top generator's occurrences are not a single positive letter,
// even after normal-form rewriting.
BraidWord destabilize(const BraidWord& w, int count);

}  // namespace petalforge
