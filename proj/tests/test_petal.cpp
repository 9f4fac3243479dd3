#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "petalforge/invariants.hpp"
#include "petalforge/petal.hpp"

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

// The braid whose closure petal_from_pair(p1, p2) projects to.
BraidWord pair_braid(const Permutation& p1, const Permutation& p2) {
  BraidWord w = cycle_braid(p1.degree());
  w = product(w, inverse(simple_braid(p1)));
  w = product(w, inverse(simple_braid(inverse(p1))));
  w = product(w, simple_braid(inverse(p2)));
  return product(w, simple_braid(p2));
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("petal permutation validation") {
  PetalPermutation ok{{3, 1, 4, 2, 5}};
  CHECK_NOTHROW(ok.validate());
  PetalPermutation trivial{{1, 2, 3}};
  CHECK_NOTHROW(trivial.validate());
  CHECK(ok.petals() == 5);
  PetalPermutation even{{2, 1, 3, 4}};
  CHECK_THROWS_AS(even.validate(), std::invalid_argument);
  PetalPermutation single{{1}};
  CHECK_THROWS_AS(single.validate(), std::invalid_argument);
  PetalPermutation repeated{{1, 1, 3}};
  CHECK_THROWS_AS(repeated.validate(), std::invalid_argument);
  PetalPermutation out_of_range{{0, 1, 2}};
  CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);
}

TEST_CASE("petal text format") {
  PetalPermutation p{{3, 1, 4, 2, 5}};
  CHECK(p.to_string() == "(3 1 4 2 5)");
  CHECK(PetalPermutation::parse("(3 1 4 2 5)").heights == p.heights);
  CHECK(PetalPermutation::parse(" ( 3 1 4 2 5 ) ").heights == p.heights);
  CHECK_THROWS_AS(PetalPermutation::parse("3 1 4 2 5"), std::invalid_argument);
  CHECK_THROWS_AS(PetalPermutation::parse("(3 1 4 2"), std::invalid_argument);
  CHECK_THROWS_AS(PetalPermutation::parse("(3 1 x 2 5)"), std::invalid_argument);
  CHECK_THROWS_AS(PetalPermutation::parse("(2 1 3 4)"), std::invalid_argument);
}

TEST_CASE("star braids of distinguished permutations") {
  // The identity gives the inverse half twist, the reversal the half twist.
  CHECK(braids_equal(star_braid(StarSpec(Permutation::identity(3))),
                     inverse(half_twist(3))));
  CHECK(braids_equal(star_braid(StarSpec(Permutation::reversal(3))), half_twist(3)));
  CHECK(braids_equal(star_braid(StarSpec(Permutation({2, 1}))), BraidWord(2, {1})));
}

TEST_CASE("star representability round trip over small symmetric groups") {
  for (int n : {1, 2, 3, 4}) {
    for (const Permutation& p : symmetric_group(n)) {
      BraidWord w = star_braid(StarSpec(p));
      auto spec = is_star_representable(w);
      REQUIRE(spec.has_value());
      CHECK(spec->strands == n);
      CHECK(braids_equal(star_braid(*spec), w));
    }
  }
}

TEST_CASE("non-star braids are rejected") {
  CHECK(!is_star_representable(BraidWord(2, {1, 1})).has_value());
  CHECK(!is_star_representable(BraidWord(2, {-1, -1})).has_value());
  CHECK(!is_star_representable(BraidWord::empty(3)).has_value());
  CHECK(!is_star_representable(BraidWord(3, {1, 2})).has_value());
  CHECK(!is_star_representable(product(half_twist(3), half_twist(3))).has_value());
}

TEST_CASE("petal heights from a permutation pair") {
  PetalPermutation tref =
      petal_from_pair(Permutation::identity(2), Permutation({2, 1}));
  CHECK(tref.heights == std::vector<int>{3, 1, 4, 2, 5});
  PetalPermutation unknot =
      petal_from_pair(Permutation::identity(2), Permutation::identity(2));
  CHECK(unknot.heights == std::vector<int>{3, 2, 4, 1, 5});
  CHECK(petal_from_pair(Permutation::identity(3), Permutation::identity(3)).petals() ==
        7);
  CHECK_THROWS_AS(
      petal_from_pair(Permutation::identity(2), Permutation::identity(3)),
      std::invalid_argument);
}

TEST_CASE("petal projection produces a valid complete diagram") {
  for (const auto& heights : {std::vector<int>{1, 2, 3}, {3, 1, 4, 2, 5},
                              {5, 2, 6, 3, 7, 1, 8, 4, 9}}) {
    PetalPermutation p{heights};
    PDCode pd = petal_to_pd(p);
    const int l = p.petals();
    CHECK(pd.crossing_count() == l * (l - 1) / 2);
    CHECK_NOTHROW(pd.validate());
  }
  // The trefoil petal projects to the positive closure: writhe +4.
  CHECK(writhe(petal_to_pd(PetalPermutation{{3, 1, 4, 2, 5}})) == 4);
}

TEST_CASE("petal projection matches the pair braid on all of S3 x S3") {
  for (const Permutation& p1 : symmetric_group(3)) {
    for (const Permutation& p2 : symmetric_group(3)) {
      LaurentPolynomial via_braid = alexander_from_braid(pair_braid(p1, p2));
      LaurentPolynomial via_pd =
          alexander_from_pd(petal_to_pd(petal_from_pair(p1, p2)));
      CAPTURE(p1.to_string());
      CAPTURE(p2.to_string());
      CHECK(via_braid == via_pd);
    }
  }
}

TEST_CASE("svg rendering") {
  PetalPermutation p{{3, 1, 4, 2, 5}};
  std::string svg = render_svg(p);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<path ") == 5);
  CHECK(count_occurrences(svg, "<line ") == 5);
  CHECK(count_occurrences(svg, "<text ") == 5);
  // One pass sits at the middle height, drawn in its own color.
  CHECK(count_occurrences(svg, "#1565c0") == 2);
  CHECK(svg.find(">5</text>") != std::string::npos);
  PetalPermutation bad{{1, 2}};
  CHECK_THROWS_AS(render_svg(bad), std::invalid_argument);
}
