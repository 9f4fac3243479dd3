#include "petalforge/torus.hpp"

#include <stdexcept>

#include "petalforge/invariants.hpp"

namespace petalforge {

bool PipelineTrace::all_ok() const {
  for (const auto& c : certificates)
    if (!c.ok) return false;
  return true;
}

BraidWord torus_braid(int r, int s) {
  TorusFamily f = torus_family(r, s);
  return product(simple_braid(f.pi1), simple_braid(f.pi2));
}

PipelineTrace transformation_chain(int r, int s, bool deep) {
  const TorusFamily f = torus_family(r, s);
  const int m = s - s / r;

  const Permutation p1i = inverse(f.pi1);
  const Permutation p3i = inverse(f.pi3);
  const Permutation p5i = inverse(f.pi5);
  const Permutation p6i = inverse(f.pi6);
  const Permutation p4r = power(f.pi4, r);

  // Block permutations appearing in the rewrite, named by their factors.
  const Permutation q = compose(f.pi4, p3i);        // pi4 pi3^-1
  const Permutation q2 = compose(p3i, p4r);         // pi3^-1 pi4^r
  const Permutation a35 = compose(p3i, f.pi5);      // pi3^-1 pi5
  const Permutation a51 = compose(p5i, f.pi1);      // pi5^-1 pi1
  const Permutation a15 = compose(f.pi1, p5i);      // pi1 pi5^-1
  const Permutation a52 = compose(p5i, f.pi2);      // pi5^-1 pi2
  const Permutation a16 = compose(f.pi1, f.pi6);    // pi1 pi6
  const Permutation big = compose(a35, a16);        // pi3^-1 pi5 pi1 pi6
  const Permutation mid = compose(a52, compose(inverse(p4r), f.pi3));
  const Permutation m153 = compose(p1i, compose(p5i, f.pi3));
  const Permutation fin = compose(p6i, m153);       // pi6^-1 pi1^-1 pi5^-1 pi3

  const BraidWord delta_s = cycle_braid(s);
  auto br = [](const Permutation& p) { return simple_braid(p); };
  auto chain = [](std::initializer_list<BraidWord> blocks) {
    BraidWord acc = BraidWord::empty(blocks.begin()->strands());
    for (const auto& b : blocks) acc = product(acc, b);
    return acc;
  };

  PipelineTrace trace;
  trace.r = r;
  trace.s = s;
  auto add_stage = [&](const std::string& label, BraidWord w) {
    trace.stages.push_back(PipelineStage{label, std::move(w)});
  };

  add_stage("conjugate", chain({delta_s, br(p3i), br(f.pi1), br(f.pi2), inverse(br(q))}));
  add_stage("chain-1",
            chain({delta_s, br(a35), br(p5i), br(f.pi1), br(f.pi2), inverse(br(q))}));
  add_stage("chain-2", chain({delta_s, br(a35), br(a51), br(f.pi2), inverse(br(q))}));
  add_stage("chain-3", chain({delta_s, br(a35), br(a15), br(f.pi2), inverse(br(q2))}));
  add_stage("chain-4",
            chain({delta_s, br(a35), br(f.pi1), br(p5i), br(f.pi2), inverse(br(q2))}));
  add_stage("chain-5", chain({delta_s, br(a35), br(f.pi1), br(a52), inverse(br(q2))}));
  add_stage("chain-6",
            chain({delta_s, br(a35), br(a16), br(p6i), br(a52), inverse(br(q2))}));
  add_stage("chain-7", chain({delta_s, br(big), br(p6i), br(mid)}));
  add_stage("chain-8", chain({delta_s, br(big), br(p6i), br(m153)}));
  add_stage("chain-9", chain({delta_s, br(big), br(fin)}));

  auto word = [&](int i) -> const BraidWord& {
    return trace.stages[static_cast<std::size_t>(i)].word;
  };
  auto step = [&](int from, int to, const std::string& kind, bool claims) {
    bool ok = claims && braids_equal(word(from), word(to));
    trace.certificates.push_back(Certificate{from, to, kind, ok});
  };

  trace.certificates.push_back(Certificate{
      0, 0, "conjugation",
      braids_equal(word(0), conjugate(torus_braid(r, s), br(q)))});
  step(0, 1, "inversion-containment", contains_inversions(p3i, p5i));
  step(1, 2, "inversion-containment", contains_inversions(a51, f.pi1));
  step(2, 3, "relabeling", a51 == a15 && q == q2);
  step(3, 4, "inversion-containment", contains_inversions(a15, p5i));
  step(4, 5, "inversion-containment", contains_inversions(a52, f.pi2));
  step(5, 6, "inversion-containment", contains_inversions(f.pi1, p6i));
  step(6, 7, "inversion-containment",
       contains_inversions(big, a16) && contains_inversions(a52, q2));
  step(7, 8, "relabeling", mid == m153);
  step(8, 9, "inversion-containment", contains_inversions(fin, m153));

  BraidWord cur = word(9);
  for (int round = 1; round <= s / r; ++round) {
    const int before = exponent_sum(cur);
    BraidWord next = destabilize(cur, 1);
    const int idx = static_cast<int>(trace.stages.size());
    const bool ok = exponent_sum(next) == before - 1;
    add_stage("destabilize-" + std::to_string(round), next);
    trace.certificates.push_back(Certificate{idx - 1, idx, "destabilization", ok});
    cur = std::move(next);
  }
  const BraidWord reduced =
      chain({cycle_braid(m), br(inverse(f.pi0)), br(f.pi0)});
  const int last = static_cast<int>(trace.stages.size()) - 1;
  trace.certificates.push_back(
      Certificate{last, last, "reduced-form", braids_equal(cur, reduced)});

  trace.petal = petal_from_pair(Permutation::identity(m), f.pi0);

  const LaurentPolynomial expected = torus_alexander(r, s);
  trace.alexander = alexander_from_braid(cur);
  trace.alexander_matched = equal_up_to_units(trace.alexander, expected);
  if (deep) {
    const int crossings = trace.petal.petals() * (trace.petal.petals() - 1) / 2;
    if (crossings <= invariant_caps().pd_route_crossings) {
      LaurentPolynomial via_pd = alexander_from_pd(petal_to_pd(trace.petal));
      trace.alexander_matched =
          trace.alexander_matched && equal_up_to_units(via_pd, expected);
    }
  }
  return trace;
}

BraidWord reduced_torus_braid(int r, int s) {
  const TorusFamily f = torus_family(r, s);
  const Permutation p3i = inverse(f.pi3);
  const Permutation big = compose(p3i, compose(f.pi5, compose(f.pi1, f.pi6)));
  const Permutation fin =
      compose(inverse(f.pi6), compose(inverse(f.pi1), compose(inverse(f.pi5), f.pi3)));
  BraidWord w = product(cycle_braid(s), product(simple_braid(big), simple_braid(fin)));
  return destabilize(w, s / r);
}

PetalPermutation torus_petal(int r, int s) {
  const TorusFamily f = torus_family(r, s);
  const int m = s - s / r;
  return petal_from_pair(Permutation::identity(m), f.pi0);
}

PetalNumberStatus petal_number_status(int r, int s) {
  if (r > s) std::swap(r, s);
  torus_family(r, s);  // validates the parameter range
  PetalNumberStatus status;
  status.r = r;
  status.s = s;
  status.upper_bound = 2 * s - 2 * (s / r) + 1;
  status.exact = r < s && s < 2 * r;
  return status;
}

nlohmann::json trace_to_json(const PipelineTrace& trace) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& st : trace.stages) {
    stages.push_back({{"label", st.label},
                      {"strands", st.word.strands()},
                      {"word", st.word.to_string()}});
  }
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : trace.certificates) {
    certs.push_back({{"from", c.from}, {"to", c.to}, {"kind", c.kind}, {"ok", c.ok}});
  }
  return nlohmann::json{
      {"r", trace.r},
      {"s", trace.s},
      {"stages", stages},
      {"certificates", certs},
      {"petal", {{"heights", trace.petal.heights}}},
      {"invariants",
       {{"alexander", trace.alexander.to_string()}, {"matched", trace.alexander_matched}}}};
}

}  // namespace petalforge
