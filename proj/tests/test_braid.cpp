#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "petalforge/braid.hpp"

using namespace petalforge;

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> all;
  do {
    all.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return all;
}

BraidWord random_word(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution flip(0.5);
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) {
    int l = gen(rng);
    letters.push_back(flip(rng) ? l : -l);
  }
  return BraidWord(strands, std::move(letters));
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("word validation and text round trip") {
  CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(65, {}), std::invalid_argument);
  CHECK_NOTHROW(BraidWord(1, {}));

  BraidWord w(4, {1, 2, -1, 3});
  CHECK(w.to_string() == "1 2 -1 3");
  CHECK(BraidWord::parse(4, "1 2 -1 3") == w);
  CHECK(BraidWord::parse(4, w.to_string()) == w);
  CHECK(BraidWord::parse(4, "  1   2  -1 3 ") == w);
  CHECK(BraidWord::parse(3, "") == BraidWord::empty(3));
  CHECK(BraidWord::empty(3).to_string() == "");
  CHECK_THROWS_AS(BraidWord::parse(4, "1 x"), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::parse(3, "1 3"), std::invalid_argument);
}

TEST_CASE("underlying permutation follows composition order") {
  // In the word "1 2" the letter 2 acts first.
  CHECK(underlying_permutation(BraidWord(3, {1, 2})) == Permutation({2, 3, 1}));
  CHECK(underlying_permutation(BraidWord(3, {2, 1})) == Permutation({3, 1, 2}));
  CHECK(underlying_permutation(BraidWord(3, {1, -1})).is_identity());
}

TEST_CASE("simple braids lift permutations") {
  for (const auto& p : symmetric_group(4)) {
    BraidWord w = simple_braid(p);
    CHECK(w.length() == inversion_set(p).size());
    CHECK(underlying_permutation(w) == p);
    for (int l : w.letters()) CHECK(l > 0);
  }
  CHECK(simple_braid(Permutation::identity(5)) == BraidWord::empty(5));
  CHECK(cycle_braid(4) == BraidWord(4, {1, 2, 3}));
  CHECK(underlying_permutation(half_twist(5)) == Permutation::reversal(5));
  CHECK(half_twist(5).length() == 10);
}

TEST_CASE("product, inverse, conjugate, exponent sum") {
  BraidWord a(3, {1, 2});
  BraidWord b(3, {-2, 1});
  CHECK(product(a, b) == BraidWord(3, {1, 2, -2, 1}));
  CHECK(inverse(a) == BraidWord(3, {-2, -1}));
  CHECK(conjugate(a, b) == BraidWord(3, {-2, 1, 1, 2, -1, 2}));
  CHECK(exponent_sum(b) == 0);
  CHECK(exponent_sum(product(a, inverse(a))) == 0);
  CHECK_THROWS_AS(product(a, BraidWord::empty(4)), std::invalid_argument);
  CHECK(free_reduce(BraidWord(3, {1, 2, -2, -1, 2})) == BraidWord(3, {2}));
  CHECK(free_reduce(product(a, inverse(a))) == BraidWord::empty(3));
}

TEST_CASE("normal form of basic words") {
  CHECK(normal_form(BraidWord::empty(3)).is_trivial());

  NormalForm half = normal_form(half_twist(4));
  CHECK(half.delta_power == 1);
  CHECK(half.factors.empty());

  NormalForm neg = normal_form(BraidWord(2, {-1}));
  CHECK(neg.delta_power == -1);
  CHECK(neg.factors.empty());

  NormalForm cube = normal_form(BraidWord(2, {1, 1, 1}));
  CHECK(cube.delta_power == 3);
  CHECK(cube.factors.empty());

  NormalForm single = normal_form(BraidWord(3, {1}));
  CHECK(single.delta_power == 0);
  CHECK(single.factors.size() == 1);
  CHECK(single.factors[0] == Permutation({2, 1, 3}));
}

TEST_CASE("braid relations hold under equality") {
  CHECK(braids_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK(braids_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK(!braids_equal(BraidWord(3, {1}), BraidWord(3, {2})));
  CHECK(!braids_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
  CHECK(braids_equal(BraidWord(3, {1, -1}), BraidWord::empty(3)));
  CHECK_THROWS_AS(braids_equal(BraidWord::empty(3), BraidWord::empty(4)),
                  std::invalid_argument);
}

TEST_CASE("normal form is a certified rewriting") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int strands = 2 + static_cast<int>(rng() % 4);
    BraidWord w = random_word(rng, strands, 1 + static_cast<int>(rng() % 14));
    NormalForm nf = normal_form(w);
    const Permutation w0 = Permutation::reversal(strands);

    for (const auto& f : nf.factors) {
      CHECK(!f.is_identity());
      CHECK(f != w0);
    }
    for (std::size_t t = 0; t + 1 < nf.factors.size(); ++t) {
      CHECK(is_subset(starting_crossings(nf.factors[t + 1]),
                      finishing_crossings(nf.factors[t])));
    }
    BraidWord back = word_of(nf);
    CHECK(underlying_permutation(back) == underlying_permutation(w));
    CHECK(exponent_sum(back) == exponent_sum(w));
    CHECK(normal_form(back) == nf);
    CHECK(braids_equal(back, w));
  }
}

TEST_CASE("full twist is central") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    BraidWord w = random_word(rng, strands, 8);
    BraidWord twist = product(half_twist(strands), half_twist(strands));
    CHECK(braids_equal(product(twist, w), product(w, twist)));
  }
}

TEST_CASE("simple braid merge rule") {
  // br(a) br(b) collapses to br(ab) exactly when ab keeps all inversions of b.
  for (const auto& a : symmetric_group(3)) {
    for (const auto& b : symmetric_group(3)) {
      const Permutation ab = compose(a, b);
      const bool additive = contains_inversions(ab, b);
      CHECK(braids_equal(product(simple_braid(a), simple_braid(b)), simple_braid(ab)) ==
            additive);
    }
  }
}

TEST_CASE("complementary simple braids assemble the half twist") {
  const Permutation w0 = Permutation::reversal(4);
  for (const auto& a : symmetric_group(4)) {
    BraidWord lhs =
        product(simple_braid(inverse(a)), simple_braid(compose(a, w0)));
    CHECK(braids_equal(lhs, half_twist(4)));
  }
}

TEST_CASE("destabilization removes free top strands") {
  BraidWord w(3, {1, 2});
  BraidWord once = destabilize(w, 1);
  CHECK(once == BraidWord(2, {1}));
  CHECK(destabilize(w, 2) == BraidWord::empty(1));

  // sigma_2 sigma_1 sigma_2^-1 rewrites to sigma_1^-1 sigma_2 sigma_1, whose
  // single positive top occurrence only shows up after normal-form assistance.
  CHECK(destabilize(BraidWord(3, {2, 1, -2}), 1) == BraidWord::empty(2));
  CHECK_THROWS_WITH_AS(destabilize(BraidWord(3, {2, 2, 1}), 1),
                       doctest::Contains("generator 2"), std::invalid_argument);
  CHECK_THROWS_AS(destabilize(BraidWord(3, {-2, 1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(destabilize(BraidWord::empty(1), 1), std::invalid_argument);

  // The top letter may sit anywhere in the word.
  CHECK(destabilize(BraidWord(3, {1, 2, 1}), 1) == BraidWord(2, {1, 1}));

  // Free reduction happens before counting occurrences.
  CHECK(destabilize(BraidWord(3, {2, -2, 1, 2}), 1) == BraidWord(2, {1}));

  // Normal-form assistance: sigma_2 sigma_1 sigma_2 rewrites to the canonical
  // half-twist word, exposing a single top occurrence.
  CHECK(destabilize(BraidWord(3, {2, 1, 2}), 1) == BraidWord(2, {1, 1}));
}
