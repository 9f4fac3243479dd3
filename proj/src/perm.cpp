#include "petalforge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace petalforge {

namespace {

void check_degree(int n) {
  if (n < 1 || n > Permutation::kMaxDegree) {
    throw std::invalid_argument("permutation degree " + std::to_string(n) +
                                " out of range [1, " +
                                std::to_string(Permutation::kMaxDegree) + "]");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  check_degree(static_cast<int>(image_.size()));
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v) - 1]) {
      throw std::invalid_argument("not a permutation image: " + to_string());
    }
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::reversal(int n) {
  check_degree(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i) - 1] = n + 1 - i;
  return Permutation(std::move(img));
}

Permutation Permutation::cycle(int n) {
  check_degree(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i) - 1] = i % n + 1;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  out += ']';
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() < 3 || compact.front() != '[' || compact.back() != ']') {
    throw std::invalid_argument("malformed permutation literal: " + std::string(text));
  }
  std::vector<int> img;
  std::stringstream ss(compact.substr(1, compact.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed permutation entry: " + tok);
    }
    if (pos != tok.size()) {
      throw std::invalid_argument("malformed permutation entry: " + tok);
    }
    img.push_back(v);
  }
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("composing permutations of degrees " +
                                std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()));
  }
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) img[static_cast<std::size_t>(i) - 1] = a(b(i));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) img[static_cast<std::size_t>(p(i)) - 1] = i;
  return Permutation(std::move(img));
}

Permutation power(const Permutation& p, int k) {
  Permutation base = k < 0 ? inverse(p) : p;
  int reps = k < 0 ? -k : k;
  Permutation acc = Permutation::identity(p.degree());
  for (int i = 0; i < reps; ++i) acc = compose(acc, base);
  return acc;
}

InversionSet::InversionSet(int degree, std::vector<std::pair<int, int>> pairs)
    : degree_(degree), pairs_(std::move(pairs)) {
  for (const auto& [i, j] : pairs_) {
    if (i < 1 || j <= i || j > degree_) {
      throw std::invalid_argument("bad inversion pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
  }
  if (!std::is_sorted(pairs_.begin(), pairs_.end())) {
    std::sort(pairs_.begin(), pairs_.end());
  }
}

bool InversionSet::contains(const std::pair<int, int>& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool InversionSet::contains_all(const InversionSet& other) const {
  return std::includes(pairs_.begin(), pairs_.end(), other.pairs_.begin(),
                       other.pairs_.end());
}

InversionSet inversion_set(const Permutation& p) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= p.degree(); ++i)
    for (int j = i + 1; j <= p.degree(); ++j)
      if (p(i) > p(j)) pairs.emplace_back(i, j);
  return InversionSet(p.degree(), std::move(pairs));
}

bool contains_inversions(const Permutation& a, const Permutation& b) {
  return inversion_set(a).contains_all(inversion_set(b));
}

TorusFamily torus_family(int r, int s) {
  if (!(1 < r && r < s && s <= Permutation::kMaxDegree)) {
    throw std::invalid_argument("torus family needs 1 < r < s <= " +
                                std::to_string(Permutation::kMaxDegree) + ", got r=" +
                                std::to_string(r) + " s=" + std::to_string(s));
  }
  if (std::gcd(r, s) != 1) {
    throw std::invalid_argument("torus family needs coprime parameters, got r=" +
                                std::to_string(r) + " s=" + std::to_string(s));
  }

  const std::size_t us = static_cast<std::size_t>(s);
  std::vector<int> i1(us), i2(us), i3(us);
  for (int i = 1; i <= s; ++i) {
    i1[static_cast<std::size_t>(i) - 1] = i <= r ? r + 1 - i : i;
    i2[static_cast<std::size_t>(i) - 1] = i <= s - r ? i + r : s + 1 - i;
    int v = (r * i) % s;
    i3[static_cast<std::size_t>(i) - 1] = v == 0 ? s : v;
  }
  Permutation pi1{std::move(i1)}, pi2{std::move(i2)}, pi3{std::move(i3)};
  Permutation pi4 = Permutation::cycle(s);
  Permutation pi3inv = inverse(pi3);

  // pi5 fixes {1..r} and sorts the tail by the order pi3^-1 induces on it.
  // pi6 reorders the head block so that i -> pi3^-1(pi1(pi6(i))) is strictly
  // decreasing there; that makes every head pair an inversion of
  // pi3^-1 pi5 pi1 pi6, which the simple-braid merges below depend on.
  std::vector<int> i5inv(us), i6inv(us);
  for (int i = 1; i <= s; ++i) {
    if (i <= r) {
      int rank = 0;
      for (int j = 1; j <= r; ++j)
        if (pi3inv(j) >= pi3inv(r + 1 - i)) ++rank;
      i6inv[static_cast<std::size_t>(i) - 1] = rank;
      i5inv[static_cast<std::size_t>(i) - 1] = i;
    } else {
      int rank = 0;
      for (int j = r + 1; j <= s; ++j)
        if (pi3inv(j) <= pi3inv(i)) ++rank;
      i5inv[static_cast<std::size_t>(i) - 1] = r + rank;
      i6inv[static_cast<std::size_t>(i) - 1] = i;
    }
  }
  Permutation pi5 = inverse(Permutation(std::move(i5inv)));
  Permutation pi6 = inverse(Permutation(std::move(i6inv)));

  const int m = s - s / r;
  Permutation whole =
      compose(inverse(pi6), compose(inverse(pi1), compose(inverse(pi5), pi3)));
  std::vector<int> i0(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    int v = whole(i);
    if (v > m) {
      throw std::logic_error("reduced permutation does not preserve {1.." +
                             std::to_string(m) + "}");
    }
    i0[static_cast<std::size_t>(i) - 1] = v;
  }
  Permutation pi0{std::move(i0)};

  return TorusFamily{r, s, pi1, pi2, pi3, pi4, pi5, pi6, pi0};
}

}  // namespace petalforge
