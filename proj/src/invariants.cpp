#include "petalforge/invariants.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace petalforge {

namespace {

int knot_components(const BraidWord& w) {
  Permutation p = underlying_permutation(w);
  std::vector<char> visited(static_cast<std::size_t>(p.degree()) + 1, 0);
  int cycles = 0;
  for (int i = 1; i <= p.degree(); ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !visited[static_cast<std::size_t>(j)]; j = p(j))
      visited[static_cast<std::size_t>(j)] = 1;
  }
  return cycles;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

InvariantCaps invariant_caps() {
  InvariantCaps caps;
  if (const char* env = std::getenv("PETALFORGE_CAP")) {
    try {
      int v = std::stoi(env);
      if (v < 1) throw std::invalid_argument("non-positive");
      caps.kauffman_crossings = v;
      caps.pd_route_crossings = v;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("PETALFORGE_CAP is not a positive integer: ") + env);
    }
  }
  return caps;
}

PolyMatrix reduced_burau(const BraidWord& w) {
  const int n = w.strands();
  PolyMatrix acc = PolyMatrix::identity(n - 1);
  const LaurentPolynomial one = LaurentPolynomial::one();
  const LaurentPolynomial t = LaurentPolynomial::term(1, 1);
  const LaurentPolynomial tinv = LaurentPolynomial::term(1, -1);
  for (int l : w.letters()) {
    const int i = std::abs(l);
    PolyMatrix g = PolyMatrix::identity(n - 1);
    if (l > 0) {
      if (i <= n - 2) {
        g.at(i - 1, i - 1) = one - t;
        g.at(i - 1, i) = t;
        g.at(i, i - 1) = one;
        g.at(i, i) = LaurentPolynomial::zero();
      } else {
        for (int j = 0; j < n - 2; ++j) g.at(j, i - 1) = -one;
        g.at(i - 1, i - 1) = -t;
      }
    } else {
      if (i <= n - 2) {
        g.at(i - 1, i - 1) = LaurentPolynomial::zero();
        g.at(i - 1, i) = one;
        g.at(i, i - 1) = tinv;
        g.at(i, i) = one - tinv;
      } else {
        for (int j = 0; j < n - 2; ++j) g.at(j, i - 1) = -tinv;
        g.at(i - 1, i - 1) = -tinv;
      }
    }
    acc = multiply(acc, g);
  }
  return acc;
}

LaurentPolynomial alexander_from_braid(const BraidWord& w) {
  if (knot_components(w) != 1) {
    throw std::invalid_argument("braid closure has " +
                                std::to_string(knot_components(w)) +
                                " components; need a knot");
  }
  const int n = w.strands();
  if (n == 1) return LaurentPolynomial::one();
  PolyMatrix m = subtract(reduced_burau(w), PolyMatrix::identity(n - 1));
  LaurentPolynomial det = determinant(m);
  LaurentPolynomial cyclo = LaurentPolynomial::zero();
  for (int k = 0; k < n; ++k) cyclo = cyclo + LaurentPolynomial::term(1, k);
  auto q = det.divided_exact(cyclo);
  if (!q) {
    throw std::logic_error("Burau determinant not divisible by 1+t+...+t^(n-1)");
  }
  return normalized_poly(*q);
}

LaurentPolynomial alexander_from_pd(const PDCode& pd) {
  pd.validate();
  const int c = pd.crossing_count();
  if (c == 0) return LaurentPolynomial::one();

  // Arcs: runs of edges joined wherever the strand passes over.
  UnionFind uf(pd.edge_count() + 1);
  for (const auto& [a, b, cc, d] : pd.crossings) {
    (void)a;
    (void)cc;
    uf.unite(b, d);
  }
  std::vector<int> arc_id(static_cast<std::size_t>(pd.edge_count()) + 1, -1);
  int arcs = 0;
  for (int e = 1; e <= pd.edge_count(); ++e) {
    int root = uf.find(e);
    if (arc_id[static_cast<std::size_t>(root)] < 0)
      arc_id[static_cast<std::size_t>(root)] = arcs++;
    arc_id[static_cast<std::size_t>(e)] = arc_id[static_cast<std::size_t>(root)];
  }
  if (arcs != c) {
    throw std::invalid_argument("diagram has " + std::to_string(arcs) + " arcs for " +
                                std::to_string(c) + " crossings; need a knot diagram");
  }

  const LaurentPolynomial one = LaurentPolynomial::one();
  const LaurentPolynomial t = LaurentPolynomial::term(1, 1);
  const LaurentPolynomial tinv = LaurentPolynomial::term(1, -1);
  PolyMatrix m(c, c);
  for (int k = 0; k < c; ++k) {
    const auto& [a, b, cc, d] = pd.crossings[static_cast<std::size_t>(k)];
    const int over = arc_id[static_cast<std::size_t>(b)];
    const int in = arc_id[static_cast<std::size_t>(a)];
    const int out = arc_id[static_cast<std::size_t>(cc)];
    (void)d;
    if (crossing_sign(pd, k) > 0) {
      m.at(k, over) = m.at(k, over) + (one - t);
      m.at(k, in) = m.at(k, in) + t;
    } else {
      m.at(k, over) = m.at(k, over) + (one - tinv);
      m.at(k, in) = m.at(k, in) + tinv;
    }
    m.at(k, out) = m.at(k, out) - one;
  }
  LaurentPolynomial det = determinant(m.without(c - 1, c - 1));
  return normalized_poly(det);
}

LaurentPolynomial torus_alexander(int r, int s) {
  if (r < 1 || s < 1 || std::gcd(r, s) != 1) {
    throw std::invalid_argument("torus Alexander needs coprime positive parameters, got r=" +
                                std::to_string(r) + " s=" + std::to_string(s));
  }
  auto power_minus_one = [](int e) {
    return LaurentPolynomial::term(1, e) - LaurentPolynomial::one();
  };
  LaurentPolynomial num = power_minus_one(r * s) * power_minus_one(1);
  LaurentPolynomial den = power_minus_one(r) * power_minus_one(s);
  auto q = num.divided_exact(den);
  if (!q) throw std::logic_error("torus Alexander closed form failed to divide");
  return normalized_poly(*q);
}

LaurentPolynomial bracket_state_sum(const PDCode& pd, int crossing_cap) {
  pd.validate();
  const int c = pd.crossing_count();
  if (c > crossing_cap) {
    throw std::runtime_error("refusing bracket state sum on " + std::to_string(c) +
                             " crossings (cap " + std::to_string(crossing_cap) + ")");
  }
  if (c == 0) return LaurentPolynomial::one();
  if (c >= 31) throw std::runtime_error("bracket state sum limited to 30 crossings");

  // Histogram of states by (number of B-smoothings, number of loops).
  std::vector<std::vector<long long>> hist(
      static_cast<std::size_t>(c) + 1,
      std::vector<long long>(static_cast<std::size_t>(c) + 2, 0));
  const std::uint32_t states = 1u << c;
  for (std::uint32_t state = 0; state < states; ++state) {
    UnionFind uf(pd.edge_count() + 1);
    int nb = 0;
    for (int k = 0; k < c; ++k) {
      const auto& [a, b, cc, d] = pd.crossings[static_cast<std::size_t>(k)];
      if (state >> k & 1u) {
        ++nb;
        uf.unite(a, d);
        uf.unite(b, cc);
      } else {
        uf.unite(a, b);
        uf.unite(cc, d);
      }
    }
    int loops = 0;
    for (int e = 1; e <= pd.edge_count(); ++e)
      if (uf.find(e) == e) ++loops;
    ++hist[static_cast<std::size_t>(nb)][static_cast<std::size_t>(loops)];
  }

  const LaurentPolynomial delta =
      -(LaurentPolynomial::term(1, 2) + LaurentPolynomial::term(1, -2));
  std::vector<LaurentPolynomial> delta_pow(static_cast<std::size_t>(c) + 2);
  delta_pow[0] = LaurentPolynomial::one();
  for (std::size_t i = 1; i < delta_pow.size(); ++i)
    delta_pow[i] = delta_pow[i - 1] * delta;

  LaurentPolynomial out;
  for (int nb = 0; nb <= c; ++nb)
    for (int loops = 1; loops <= c + 1; ++loops) {
      long long count = hist[static_cast<std::size_t>(nb)][static_cast<std::size_t>(loops)];
      if (!count) continue;
      out = out + LaurentPolynomial::term(count, c - 2 * nb) *
                      delta_pow[static_cast<std::size_t>(loops - 1)];
    }
  return out;
}

LaurentPolynomial kauffman_bracket(const PDCode& pd, int crossing_cap) {
  LaurentPolynomial bracket = bracket_state_sum(pd, crossing_cap);
  const int w = writhe(pd);
  LaurentPolynomial v = bracket.shifted(-3 * w);
  if (w % 2 != 0) v = -v;
  // The closure of the writhe correction lands in A-exponents divisible by 4.
  LaurentPolynomial jones;
  if (!v.is_zero()) {
    for (int e = v.lowest_exponent(); e <= v.highest_exponent(); ++e) {
      BigInt coeff = v.coeff(e);
      if (coeff == 0) continue;
      if (e % 4 != 0) {
        throw std::logic_error("bracket exponent " + std::to_string(e) +
                               " not divisible by 4; diagram is not a knot");
      }
      jones = jones + LaurentPolynomial::term(coeff, -e / 4);
    }
  }
  return jones;
}

LaurentPolynomial kauffman_bracket(const PDCode& pd) {
  return kauffman_bracket(pd, invariant_caps().kauffman_crossings);
}

}  // namespace petalforge
