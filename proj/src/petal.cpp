#include "petalforge/petal.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace petalforge {

void PetalPermutation::validate() const {
  const int l = petals();
  if (l < 3 || l % 2 == 0) {
    throw std::invalid_argument("petal count must be odd and at least 3, got " +
                                std::to_string(l));
  }
  std::vector<char> seen(static_cast<std::size_t>(l), 0);
  for (int h : heights) {
    if (h < 1 || h > l || seen[static_cast<std::size_t>(h) - 1]) {
      throw std::invalid_argument("heights are not a permutation of 1.." +
                                  std::to_string(l));
    }
    seen[static_cast<std::size_t>(h) - 1] = 1;
  }
}

std::string PetalPermutation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(heights[i]);
  }
  out += ')';
  return out;
}

PetalPermutation PetalPermutation::parse(std::string_view text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed.size() < 2 || trimmed.front() != '(' || trimmed.back() != ')') {
    throw std::invalid_argument("malformed petal literal: " + std::string(text));
  }
  PetalPermutation p;
  std::stringstream ss(trimmed.substr(1, trimmed.size() - 2));
  int v;
  while (ss >> v) p.heights.push_back(v);
  if (!ss.eof()) {
    throw std::invalid_argument("malformed petal literal: " + std::string(text));
  }
  p.validate();
  return p;
}

BraidWord star_braid(const StarSpec& spec) {
  const Permutation& p = spec.perm;
  return product(product(inverse(half_twist(p.degree())), simple_braid(inverse(p))),
                 simple_braid(p));
}

std::optional<StarSpec> is_star_representable(const BraidWord& w) {
  const int n = w.strands();
  NormalForm nf = normal_form(w);
  std::optional<StarSpec> candidate;
  if (n == 1 && nf.is_trivial()) {
    candidate.emplace(Permutation::identity(1));
  } else if (nf.delta_power == -1 && nf.factors.empty()) {
    candidate.emplace(Permutation::identity(n));
  } else if (nf.delta_power == 1 && nf.factors.empty()) {
    candidate.emplace(Permutation::reversal(n));
  } else if (nf.delta_power == -1 && nf.factors.size() == 2 &&
             nf.factors[0] == inverse(nf.factors[1])) {
    candidate.emplace(nf.factors[1]);
  }
  if (candidate && !braids_equal(star_braid(*candidate), w)) return std::nullopt;
  return candidate;
}

PetalPermutation petal_from_pair(const Permutation& p1, const Permutation& p2) {
  if (p1.degree() != p2.degree()) {
    throw std::invalid_argument("petal pair needs equal degrees, got " +
                                std::to_string(p1.degree()) + " and " +
                                std::to_string(p2.degree()));
  }
  const int n = p1.degree();
  PetalPermutation petal;
  petal.heights.assign(static_cast<std::size_t>(2 * n + 1), 0);
  petal.heights[0] = n + 1;
  for (int j = 1; j <= n; ++j) {
    petal.heights[static_cast<std::size_t>(2 * j) - 1] = n + 1 - p2(j);
    petal.heights[static_cast<std::size_t>(2 * j)] = n + 1 + p1(j);
  }
  petal.validate();
  return petal;
}

namespace {

using Rat = boost::multiprecision::cpp_rational;

struct Vec {
  Rat x, y;
};

Rat cross(const Vec& u, const Vec& v) { return Rat(u.x * v.y - u.y * v.x); }

}  // namespace

PDCode petal_to_pd(const PetalPermutation& p) {
  p.validate();
  const int l = p.petals();
  const int edges = l * (l - 1);  // 2 * crossings

  // Chord directions on a rational grid: slot j sits at angle -j*pi/l (slots
  // advance clockwise, which makes the diagram's handedness agree with the
  // positive braid closure), encoded via a rounded half-angle tangent so every
  // direction is exact and the cyclic slot order intact.
  std::vector<Vec> slot(static_cast<std::size_t>(2 * l));
  const long long scale = 1 << 20;
  Rat prev_tan(-1);
  for (int j = 0; j < l; ++j) {
    const double alpha = std::numbers::pi * j / (2.0 * l);
    Rat t(static_cast<long long>(std::llround(std::tan(alpha) * static_cast<double>(scale))),
          scale);
    if (t <= prev_tan) throw std::logic_error("direction grid is not strictly increasing");
    prev_tan = t;
    Vec v{1 - t * t, -(2 * t)};
    slot[static_cast<std::size_t>(j)] = v;
    slot[static_cast<std::size_t>(j + l)] = Vec{-v.x, -v.y};
  }

  // Pass k enters at slot k(l+1) mod 2l and runs through the center to the
  // opposite slot; a tiny per-pass sideways offset splits the multi-crossing
  // into simple crossings without reordering anything else.
  std::vector<Vec> dir(static_cast<std::size_t>(l)), base(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) {
    const int e = k * (l + 1) % (2 * l);
    const Vec& u = slot[static_cast<std::size_t>(e)];
    dir[static_cast<std::size_t>(k)] = Vec{-u.x, -u.y};
    const Vec n{u.y, -u.x};  // 90 degrees counterclockwise from dir
    const Rat off(k + 1, 1024);
    base[static_cast<std::size_t>(k)] = Vec{off * n.x, off * n.y};
  }

  struct Hit {
    Rat along;
    int other;
  };
  std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) {
    for (int k = j + 1; k < l; ++k) {
      const Vec& tj = dir[static_cast<std::size_t>(j)];
      const Vec& tk = dir[static_cast<std::size_t>(k)];
      const Rat den = cross(tj, tk);
      if (den == 0) throw std::logic_error("parallel passes in petal projection");
      const Vec diff{base[static_cast<std::size_t>(k)].x - base[static_cast<std::size_t>(j)].x,
                     base[static_cast<std::size_t>(k)].y - base[static_cast<std::size_t>(j)].y};
      hits[static_cast<std::size_t>(j)].push_back(Hit{Rat(cross(diff, tk) / den), k});
      hits[static_cast<std::size_t>(k)].push_back(Hit{Rat(cross(diff, tj) / den), j});
    }
  }
  std::map<std::pair<int, int>, int> visit;
  int v = 0;
  for (int k = 0; k < l; ++k) {
    auto& row = hits[static_cast<std::size_t>(k)];
    std::sort(row.begin(), row.end(),
              [](const Hit& a, const Hit& b) { return a.along < b.along; });
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      if (row[i].along == row[i + 1].along) {
        throw std::logic_error("concurrent crossings on one pass");
      }
    }
    for (const Hit& h : row) visit[{k, h.other}] = v++;
  }

  PDCode pd;
  std::vector<int> expected_sign;
  for (int j = 0; j < l; ++j) {
    for (int k = j + 1; k < l; ++k) {
      const bool j_under = p.heights[static_cast<std::size_t>(j)] <
                           p.heights[static_cast<std::size_t>(k)];
      const int under = j_under ? j : k;
      const int over = j_under ? k : j;
      const int vu = visit.at({under, over});
      const int vo = visit.at({over, under});
      const Vec& tu = dir[static_cast<std::size_t>(under)];
      const Vec& to = dir[static_cast<std::size_t>(over)];
      const int a = vu + 1;
      const int c = (vu + 1) % edges + 1;
      int b, d;
      if (cross(tu, to) > 0) {
        b = vo + 1;
        d = (vo + 1) % edges + 1;
      } else {
        b = (vo + 1) % edges + 1;
        d = vo + 1;
      }
      pd.crossings.push_back({a, b, c, d});
      expected_sign.push_back(cross(to, tu) > 0 ? 1 : -1);
    }
  }
  pd.validate();
  for (int k = 0; k < pd.crossing_count(); ++k) {
    if (crossing_sign(pd, k) != expected_sign[static_cast<std::size_t>(k)]) {
      throw std::logic_error("crossing sign disagrees with chord geometry");
    }
  }
  return pd;
}

std::string render_svg(const PetalPermutation& p) {
  p.validate();
  const int l = p.petals();
  const double radius = 100.0;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-140 -140 280 280\" "
         "width=\"560\" height=\"560\">\n";
  out << "  <rect x=\"-140\" y=\"-140\" width=\"280\" height=\"280\" fill=\"white\"/>\n";

  auto point = [&](int slot_index, double scale_factor) {
    const double angle = std::numbers::pi * slot_index / l;
    return std::pair<double, double>(radius * scale_factor * std::cos(angle),
                                     -radius * scale_factor * std::sin(angle));
  };
  const int mid = (l + 1) / 2;

  // Petal loops between consecutive passes.
  for (int k = 0; k < l; ++k) {
    const int exit_slot = (k * (l + 1) + l) % (2 * l);
    const auto from = point(exit_slot, 1.0);
    const auto to = point(exit_slot + 1, 1.0);
    const auto ctrl = point(exit_slot, 1.62);
    const auto ctrl2 = point(exit_slot + 1, 1.62);
    out << "  <path d=\"M " << from.first << ' ' << from.second << " C " << ctrl.first
        << ' ' << ctrl.second << ' ' << ctrl2.first << ' ' << ctrl2.second << ' '
        << to.first << ' ' << to.second << "\" fill=\"none\" stroke=\"#9e9e9e\" "
        << "stroke-width=\"1.5\"/>\n";
  }
  // Passes through the center, colored by the height bands of the
  // construction: below the middle, the middle itself, above the middle.
  for (int k = 0; k < l; ++k) {
    const int h = p.heights[static_cast<std::size_t>(k)];
    const char* color = h < mid ? "#c62828" : (h == mid ? "#1565c0" : "#212121");
    const int entry_slot = k * (l + 1) % (2 * l);
    const auto from = point(entry_slot, 1.0);
    const auto to = point(entry_slot + l, 1.0);
    out << "  <line x1=\"" << from.first << "\" y1=\"" << from.second << "\" x2=\""
        << to.first << "\" y2=\"" << to.second << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    const auto label = point(entry_slot, 1.14);
    out << "  <text x=\"" << label.first << "\" y=\"" << label.second
        << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"" << color << "\">" << h
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace petalforge
