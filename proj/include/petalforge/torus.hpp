#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "petalforge/braid.hpp"
#include "petalforge/laurent.hpp"
#include "petalforge/petal.hpp"
#include "petalforge/perm.hpp"

namespace petalforge {

struct PipelineStage {
  std::string label;
  BraidWord word;
};

struct Certificate {
  int from = 0;
  int to = 0;
  std::string kind;
  bool ok = false;
};

// Full record of the rewrite taking the torus braid down to its reduced form
// and petal diagram: braid words stage by stage, a checked certificate for
// every step, and the invariant cross-check on the result.
struct PipelineTrace {
  int r = 0;
  int s = 0;
  std::vector<PipelineStage> stages;
  std::vector<Certificate> certificates;
  PetalPermutation petal;
  LaurentPolynomial alexander;
  bool alexander_matched = false;

  bool all_ok() const;
};

// br(pi1) br(pi2) on s strands; its closure is the torus knot T(r, s).
BraidWord torus_braid(int r, int s);

// Runs the whole pipeline. Stage 0 is the conjugated torus braid, stages 1-9
// the block rewrites, then one stage per destabilization round. With deep set,
// the Alexander cross-check additionally goes through the petal diagram route
// whenever the crossing count is within the configured cap.
PipelineTrace transformation_chain(int r, int s, bool deep = false);

// The destabilized braid on s - floor(s/r) strands.
BraidWord reduced_torus_braid(int r, int s);

// Petal diagram of T(r, s) with 2s - 2*floor(s/r) + 1 petals.
PetalPermutation torus_petal(int r, int s);

struct PetalNumberStatus {
  int r = 0;  // normalized so that r < s
  int s = 0;
  int upper_bound = 0;
  bool exact = false;  // bound is attained exactly when r < s < 2r
};

// Swaps parameters if needed so r < s, then reports the petal number bound.
PetalNumberStatus petal_number_status(int r, int s);

nlohmann::json trace_to_json(const PipelineTrace& trace);

}  // namespace petalforge
