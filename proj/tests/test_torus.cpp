#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "petalforge/invariants.hpp"
#include "petalforge/torus.hpp"

using namespace petalforge;

namespace {

int cycle_count(const Permutation& p) {
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  int cycles = 0;
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i) - 1]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j) - 1]; j = p(j))
      seen[static_cast<std::size_t>(j) - 1] = 1;
  }
  return cycles;
}

}  // namespace

TEST_CASE("torus braid is a positive knot braid of the right size") {
  for (auto [r, s] : {std::pair{2, 3}, {3, 5}, {3, 7}, {4, 9}, {5, 8}}) {
    CAPTURE(r);
    CAPTURE(s);
    BraidWord w = torus_braid(r, s);
    CHECK(w.strands() == s);
    CHECK(static_cast<int>(w.length()) == r * (s - 1));
    CHECK(exponent_sum(w) == r * (s - 1));
    for (int letter : w.letters()) CHECK(letter > 0);
    CHECK(cycle_count(underlying_permutation(w)) == 1);
  }
}

TEST_CASE("transformation chain structure") {
  PipelineTrace t = transformation_chain(2, 5);
  REQUIRE(t.stages.size() == 12);  // conjugate, chain-1..9, two destabilizations
  CHECK(t.stages[0].label == "conjugate");
  for (int i = 1; i <= 9; ++i)
    CHECK(t.stages[static_cast<std::size_t>(i)].label ==
          "chain-" + std::to_string(i));
  CHECK(t.stages[10].label == "destabilize-1");
  CHECK(t.stages[11].label == "destabilize-2");
  for (int i = 0; i <= 9; ++i)
    CHECK(t.stages[static_cast<std::size_t>(i)].word.strands() == 5);
  CHECK(t.stages[10].word.strands() == 4);
  CHECK(t.stages[11].word.strands() == 3);

  REQUIRE(t.certificates.size() == 13);
  CHECK(t.certificates[0].kind == "conjugation");
  std::multiset<std::string> kinds;
  for (const auto& c : t.certificates) kinds.insert(c.kind);
  CHECK(kinds.count("conjugation") == 1);
  CHECK(kinds.count("inversion-containment") == 7);
  CHECK(kinds.count("relabeling") == 2);
  CHECK(kinds.count("destabilization") == 2);
  CHECK(kinds.count("reduced-form") == 1);
}

TEST_CASE("chain certificates and invariants hold for every small pair") {
  for (auto [r, s] :
       {std::pair{2, 3}, {3, 4}, {2, 5}, {3, 5}, {4, 5}, {5, 6}, {3, 7}, {5, 7}}) {
    CAPTURE(r);
    CAPTURE(s);
    PipelineTrace t = transformation_chain(r, s);
    CHECK(t.all_ok());
    CHECK(t.alexander_matched);
    CHECK(t.alexander == torus_alexander(r, s));
    // The exponent sum is conserved through the rewrite and drops by one per
    // destabilization round.
    const int base = r * (s - 1);
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
      int expected = base;
      if (t.stages[i].label.rfind("destabilize-", 0) == 0)
        expected -= std::stoi(t.stages[i].label.substr(12));
      CHECK(exponent_sum(t.stages[i].word) == expected);
    }
    CHECK(exponent_sum(t.stages.back().word) == base - s / r);
  }
}

TEST_CASE("deep chain also certifies through the diagram route") {
  PipelineTrace t = transformation_chain(3, 5, true);
  CHECK(t.all_ok());
  CHECK(t.alexander_matched);
}

TEST_CASE("reduced braid agrees with the chain and the closed form") {
  for (auto [r, s] : {std::pair{2, 3}, {3, 5}, {2, 7}, {4, 7}}) {
    CAPTURE(r);
    CAPTURE(s);
    const int m = s - s / r;
    BraidWord reduced = reduced_torus_braid(r, s);
    CHECK(reduced.strands() == m);
    PipelineTrace t = transformation_chain(r, s);
    CHECK(braids_equal(reduced, t.stages.back().word));
    TorusFamily f = torus_family(r, s);
    BraidWord star = product(cycle_braid(m), product(simple_braid(inverse(f.pi0)),
                                                     simple_braid(f.pi0)));
    CHECK(braids_equal(reduced, star));
    CHECK(alexander_from_braid(reduced) == torus_alexander(r, s));
  }
}

TEST_CASE("torus petal diagrams") {
  CHECK(torus_petal(2, 3).to_string() == "(3 1 4 2 5)");
  CHECK(torus_petal(3, 5).to_string() == "(5 2 6 3 7 1 8 4 9)");
  CHECK(torus_petal(3, 7).to_string() == "(6 3 7 2 8 4 9 1 10 5 11)");
  for (auto [r, s] : {std::pair{2, 3}, {3, 5}, {4, 7}, {5, 8}, {2, 9}}) {
    PetalPermutation p = torus_petal(r, s);
    CHECK(p.petals() == 2 * s - 2 * (s / r) + 1);
    CHECK_NOTHROW(p.validate());
  }
}

TEST_CASE("petal number status") {
  PetalNumberStatus tref = petal_number_status(2, 3);
  CHECK(tref.r == 2);
  CHECK(tref.s == 3);
  CHECK(tref.upper_bound == 5);
  CHECK(tref.exact);

  PetalNumberStatus swapped = petal_number_status(3, 2);
  CHECK(swapped.r == 2);
  CHECK(swapped.s == 3);
  CHECK(swapped.upper_bound == 5);

  CHECK(petal_number_status(3, 5).exact);
  CHECK(petal_number_status(3, 5).upper_bound == 9);
  CHECK(!petal_number_status(2, 5).exact);
  CHECK(petal_number_status(2, 5).upper_bound == 7);
  CHECK(!petal_number_status(2, 7).exact);
  CHECK(petal_number_status(2, 7).upper_bound == 9);
  CHECK(petal_number_status(5, 12).upper_bound == 2 * 12 - 2 * 2 + 1);
  CHECK_THROWS_AS(petal_number_status(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(petal_number_status(3, 3), std::invalid_argument);
}

TEST_CASE("trace serialization") {
  PipelineTrace t = transformation_chain(2, 3);
  nlohmann::json j = trace_to_json(t);
  std::set<std::string> top;
  for (auto it = j.begin(); it != j.end(); ++it) top.insert(it.key());
  CHECK(top == std::set<std::string>{"r", "s", "stages", "certificates", "petal",
                                     "invariants"});
  CHECK(j["r"] == 2);
  CHECK(j["s"] == 3);
  REQUIRE(j["stages"].is_array());
  CHECK(j["stages"].size() == t.stages.size());
  for (const auto& st : j["stages"]) {
    CHECK(st.contains("label"));
    CHECK(st.contains("strands"));
    CHECK(st.contains("word"));
  }
  CHECK(j["stages"][0]["label"] == "conjugate");
  CHECK(j["stages"][0]["strands"] == 3);
  for (const auto& c : j["certificates"]) {
    CHECK(c.contains("from"));
    CHECK(c.contains("to"));
    CHECK(c.contains("kind"));
    CHECK(c["ok"] == true);
  }
  CHECK(j["petal"]["heights"] == nlohmann::json({3, 1, 4, 2, 5}));
  CHECK(j["invariants"]["matched"] == true);
  CHECK(j["invariants"]["alexander"] == "1 - t + t^2");
}
