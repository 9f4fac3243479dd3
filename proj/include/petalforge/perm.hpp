#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace petalforge {

// Permutations of {1..n} in one-line image notation: [3,1,4,2] sends 1->3, 2->1, ...
// Composition is right-factor-first everywhere: compose(a, b)(i) = a(b(i)).
class Permutation {
public:
  static constexpr int kMaxDegree = 64;

  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  // The order-reversing permutation i -> n+1-i.
  static Permutation reversal(int n);
  // The n-cycle i -> i+1 (n -> 1).
  static Permutation cycle(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  bool operator==(const Permutation& o) const { return image_ == o.image_; }
  bool operator!=(const Permutation& o) const { return image_ != o.image_; }

  std::string to_string() const;
  static Permutation parse(std::string_view text);

private:
  std::vector<int> image_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, int k);

// Sorted list of pairs (i, j), i < j, whose order the permutation reverses.
class InversionSet {
public:
  InversionSet(int degree, std::vector<std::pair<int, int>> pairs);

  int degree() const { return degree_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool contains(const std::pair<int, int>& p) const;
  // True if every inversion of `other` is also present here.
  bool contains_all(const InversionSet& other) const;
  bool operator==(const InversionSet& o) const {
    return degree_ == o.degree_ && pairs_ == o.pairs_;
  }

private:
  int degree_;
  std::vector<std::pair<int, int>> pairs_;
};

InversionSet inversion_set(const Permutation& p);
// contains_inversions(a, b): inversions of a form a superset of inversions of b.
bool contains_inversions(const Permutation& a, const Permutation& b);

// The named family of permutations attached to the torus knot T(r, s),
// all living in S_s except pi0 which lives in S_{s - floor(s/r)}.
struct TorusFamily {
  int r = 0;
  int s = 0;
  Permutation pi1, pi2, pi3, pi4, pi5, pi6, pi0;
};

TorusFamily torus_family(int r, int s);

}  // namespace petalforge
