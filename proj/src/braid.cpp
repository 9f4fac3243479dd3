#include "petalforge/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace petalforge {

namespace {

void check_strands(int n) {
  if (n < 1 || n > BraidWord::kMaxStrands) {
    throw std::invalid_argument("strand count " + std::to_string(n) +
                                " out of range [1, " +
                                std::to_string(BraidWord::kMaxStrands) + "]");
  }
}

// Swap of i, i+1 applied after p (acts on positions of the image).
Permutation append_swap(const Permutation& p, int i) {
  std::vector<int> img = p.image();
  std::swap(img[static_cast<std::size_t>(i) - 1], img[static_cast<std::size_t>(i)]);
  return Permutation(std::move(img));
}

// Swap of i, i+1 applied before p (acts on the values of the image).
Permutation prepend_swap(int i, const Permutation& p) {
  std::vector<int> img = p.image();
  for (int& v : img) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(img));
}

Permutation flip(const Permutation& p) {
  Permutation w0 = Permutation::reversal(p.degree());
  return compose(w0, compose(p, w0));
}

bool is_finishing(const Permutation& p, int i) { return p(i) > p(i + 1); }

bool is_starting(const Permutation& p, int i) {
  // i starts p exactly when value i+1 precedes value i in the image.
  for (int v : p.image()) {
    if (v == i) return false;
    if (v == i + 1) return true;
  }
  return false;
}

// Move crossings from the head of b to the tail of a until the pair is
// left-weighted. Returns true if anything moved.
bool make_left_weighted(Permutation& a, Permutation& b) {
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < b.degree(); ++i) {
      if (is_starting(b, i) && !is_finishing(a, i)) {
        a = append_swap(a, i);
        b = prepend_swap(i, b);
        moved = true;
        changed = true;
        break;
      }
    }
  }
  return changed;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands_);
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw std::invalid_argument("letter " + std::to_string(l) +
                                  " invalid on " + std::to_string(strands_) +
                                  " strands");
    }
  }
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<int> letters;
  std::stringstream ss{std::string(text)};
  std::string tok;
  while (ss >> tok) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed braid letter: " + tok);
    }
    if (pos != tok.size()) {
      throw std::invalid_argument("malformed braid letter: " + tok);
    }
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord simple_braid(const Permutation& p) {
  std::vector<int> img = p.image();
  const int n = p.degree();
  std::vector<int> collected;
  bool descent = true;
  while (descent) {
    descent = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (img[static_cast<std::size_t>(i)] > img[static_cast<std::size_t>(i) + 1]) {
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i) + 1]);
        collected.push_back(i + 1);
        descent = true;
        break;
      }
    }
  }
  std::reverse(collected.begin(), collected.end());
  return BraidWord(n, std::move(collected));
}

BraidWord half_twist(int n) { return simple_braid(Permutation::reversal(n)); }

BraidWord cycle_braid(int n) { return simple_braid(Permutation::cycle(n)); }

Permutation underlying_permutation(const BraidWord& w) {
  Permutation acc = Permutation::identity(w.strands());
  for (int l : w.letters()) acc = append_swap(acc, std::abs(l));
  return acc;
}

BraidWord product(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("braid product needs equal strand counts, got " +
                                std::to_string(a.strands()) + " and " +
                                std::to_string(b.strands()));
  }
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& c) {
  return product(product(c, w), inverse(c));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int l : w.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

std::vector<int> starting_crossings(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.degree(); ++i)
    if (is_starting(p, i)) out.push_back(i);
  return out;
}

std::vector<int> finishing_crossings(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.degree(); ++i)
    if (is_finishing(p, i)) out.push_back(i);
  return out;
}

std::string NormalForm::to_string() const {
  std::string out = "D^" + std::to_string(delta_power);
  for (const auto& f : factors) {
    out += ' ';
    out += f.to_string();
  }
  return out;
}

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  const Permutation w0 = Permutation::reversal(n);
  NormalForm nf;
  nf.strands = n;
  nf.delta_power = 0;

  for (int l : w.letters()) {
    if (l > 0) {
      nf.factors.push_back(append_swap(Permutation::identity(n), l));
    } else {
      nf.delta_power -= 1;
      for (auto& f : nf.factors) f = flip(f);
      Permutation y = append_swap(w0, -l);
      if (!y.is_identity()) nf.factors.push_back(y);
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
      if (make_left_weighted(nf.factors[j], nf.factors[j + 1])) changed = true;
    }
    for (std::size_t j = nf.factors.size(); j-- > 0;) {
      if (nf.factors[j].is_identity()) {
        nf.factors.erase(nf.factors.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }

  while (!nf.factors.empty() && n >= 2 && nf.factors.front() == w0) {
    nf.factors.erase(nf.factors.begin());
    nf.delta_power += 1;
  }
  return nf;
}

BraidWord word_of(const NormalForm& nf) {
  BraidWord acc = BraidWord::empty(nf.strands);
  if (nf.delta_power != 0) {
    BraidWord d = half_twist(nf.strands);
    if (nf.delta_power < 0) d = inverse(d);
    for (int i = std::abs(nf.delta_power); i > 0; --i) acc = product(acc, d);
  }
  for (const auto& f : nf.factors) acc = product(acc, simple_braid(f));
  return acc;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("comparing braids on different strand counts");
  }
  return normal_form(a) == normal_form(b);
}

BraidWord destabilize(const BraidWord& w, int count) {
  if (count < 0) throw std::invalid_argument("destabilization count must be >= 0");
  BraidWord cur = free_reduce(w);
  for (int round = 0; round < count; ++round) {
    const int n = cur.strands();
    const int top = n - 1;
    if (top < 1) {
      throw std::invalid_argument("cannot destabilize a braid on 1 strand");
    }
    auto locate = [&](const BraidWord& word) -> int {
      int pos = -1, hits = 0;
      const auto& ls = word.letters();
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (std::abs(ls[i]) == top) {
          ++hits;
          pos = ls[i] > 0 ? static_cast<int>(i) : -1;
        }
      }
      return hits == 1 ? pos : -1;
    };
    int pos = locate(cur);
    if (pos < 0) {
      cur = free_reduce(word_of(normal_form(cur)));
      pos = locate(cur);
    }
    if (pos < 0) {
      throw std::invalid_argument(
          "strand " + std::to_string(n) +
          " is not free to remove: generator " + std::to_string(top) +
          " does not occur exactly once positively");
    }
    std::vector<int> letters = cur.letters();
    letters.erase(letters.begin() + pos);
    cur = free_reduce(BraidWord(n - 1, std::move(letters)));
  }
  return cur;
}

}  // namespace petalforge
