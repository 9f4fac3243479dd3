#include "petalforge/pd.hpp"

#include <sstream>
#include <stdexcept>

namespace petalforge {

namespace {

int successor(int edge, int total) { return edge % total + 1; }

}  // namespace

void PDCode::validate() const {
  const int total = edge_count();
  std::vector<int> seen(static_cast<std::size_t>(total) + 1, 0);
  for (const auto& x : crossings) {
    for (int e : x) {
      if (e < 1 || e > total) {
        throw std::invalid_argument("edge label " + std::to_string(e) +
                                    " outside 1.." + std::to_string(total));
      }
      ++seen[static_cast<std::size_t>(e)];
    }
  }
  for (int e = 1; e <= total; ++e) {
    if (seen[static_cast<std::size_t>(e)] != 2) {
      throw std::invalid_argument("edge " + std::to_string(e) + " occurs " +
                                  std::to_string(seen[static_cast<std::size_t>(e)]) +
                                  " times, expected 2");
    }
  }
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const auto& [a, b, c, d] = crossings[k];
    if (successor(a, total) != c) {
      throw std::invalid_argument("crossing " + std::to_string(k) +
                                  ": under-out is not the successor of under-in");
    }
    const bool over_bd = successor(b, total) == d;
    const bool over_db = successor(d, total) == b;
    if (over_bd == over_db) {
      throw std::invalid_argument("crossing " + std::to_string(k) +
                                  ": over pair has no unique direction");
    }
  }
}

std::string PDCode::to_string() const {
  std::string out;
  for (const auto& [a, b, c, d] : crossings) {
    out += "X " + std::to_string(a) + ' ' + std::to_string(b) + ' ' +
           std::to_string(c) + ' ' + std::to_string(d) + '\n';
  }
  return out;
}

PDCode PDCode::parse(std::string_view text) {
  PDCode pd;
  std::stringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank line
    if (head != "X") {
      throw std::invalid_argument("malformed crossing line: " + line);
    }
    std::array<int, 4> x{};
    for (int& v : x) {
      if (!(ls >> v)) {
        throw std::invalid_argument("malformed crossing line: " + line);
      }
    }
    std::string rest;
    if (ls >> rest) {
      throw std::invalid_argument("trailing tokens in crossing line: " + line);
    }
    pd.crossings.push_back(x);
  }
  return pd;
}

int crossing_sign(const PDCode& pd, int k) {
  const int total = pd.edge_count();
  const auto& [a, b, c, d] = pd.crossings[static_cast<std::size_t>(k)];
  (void)a;
  (void)c;
  if (successor(d, total) == b) return 1;
  if (successor(b, total) == d) return -1;
  throw std::invalid_argument("crossing " + std::to_string(k) +
                              ": over pair has no unique direction");
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (int k = 0; k < pd.crossing_count(); ++k) w += crossing_sign(pd, k);
  return w;
}

}  // namespace petalforge
