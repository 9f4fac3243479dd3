#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace petalforge {

// Planar diagram code of an oriented knot diagram. Edges are numbered 1..2C
// along the orientation. Each crossing lists its four edge ends
// counterclockwise starting from the incoming under-strand edge, so the tuple
// is (under-in, side, under-out, side) with under-out the successor of
// under-in.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int edge_count() const { return 2 * crossing_count(); }

  // Checks label range, that every edge occurs exactly twice, and that the
  // under/over successor structure is consistent. Throws on violation.
  void validate() const;

  // One "X a b c d" line per crossing, newline-terminated.
  std::string to_string() const;
  static PDCode parse(std::string_view text);
};

// Sign of crossing k: +1 when the over-strand crosses left-to-right seen from
// the under-strand direction, read off the successor relation of the over pair.
int crossing_sign(const PDCode& pd, int k);
int writhe(const PDCode& pd);

}  // namespace petalforge
