#include "petalforge/laurent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace petalforge {

void LaurentPolynomial::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  coeffs_.resize(tail - lead);
  low_ += static_cast<int>(lead);
}

LaurentPolynomial LaurentPolynomial::term(BigInt coeff, int exp) {
  LaurentPolynomial p;
  if (coeff != 0) {
    p.low_ = exp;
    p.coeffs_.push_back(std::move(coeff));
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_pairs(std::vector<std::pair<int, BigInt>> pairs) {
  LaurentPolynomial p;
  for (auto& [exp, c] : pairs) p = p + term(std::move(c), exp);
  return p;
}

int LaurentPolynomial::lowest_exponent() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no exponent bounds");
  return low_;
}

int LaurentPolynomial::highest_exponent() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no exponent bounds");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt LaurentPolynomial::coeff(int exp) const {
  if (exp < low_ || exp >= low_ + static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exp - low_)];
}

const BigInt& LaurentPolynomial::leading_coeff() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_);
  int hi = std::max(low_ + static_cast<int>(coeffs_.size()),
                    o.low_ + static_cast<int>(o.coeffs_.size()));
  LaurentPolynomial p;
  p.low_ = lo;
  p.coeffs_.assign(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    p.coeffs_[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    p.coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  p.trim();
  return p;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  LaurentPolynomial p;
  p.low_ = low_ + o.low_;
  p.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      p.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  p.trim();
  return p;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  LaurentPolynomial p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -(low_ + static_cast<int>(coeffs_.size()) - 1);
  return p;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divided_exact(
    const LaurentPolynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return zero();
  // Work with plain polynomials and restore the exponent offset at the end.
  LaurentPolynomial rem = shifted(-low_);
  LaurentPolynomial den = d.shifted(-d.low_);
  const int shift = low_ - d.low_;
  LaurentPolynomial quot;
  while (!rem.is_zero() && rem.highest_exponent() >= den.highest_exponent()) {
    BigInt lead = rem.leading_coeff() / den.leading_coeff();
    if (lead * den.leading_coeff() != rem.leading_coeff()) return std::nullopt;
    int e = rem.highest_exponent() - den.highest_exponent();
    LaurentPolynomial t = term(lead, e);
    quot = quot + t;
    rem = rem - t * den;
    if (!rem.is_zero() && rem.highest_exponent() >= den.highest_exponent() + e) {
      return std::nullopt;  // no progress; degree did not drop
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(shift);
}

BigInt LaurentPolynomial::evaluated_at(const BigInt& x) const {
  if (is_zero()) return 0;
  if (low_ < 0) throw std::logic_error("evaluating a Laurent polynomial with negative exponents");
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  for (int i = 0; i < low_; ++i) acc *= x;
  return acc;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    int exp = low_ + static_cast<int>(i);
    if (mag != 1 || exp == 0) out += mag.str();
    if (exp != 0) {
      if (mag != 1) out += '*';
      out += 't';
      if (exp != 1) out += '^' + std::to_string(exp);
    }
  }
  return out;
}

nlohmann::json LaurentPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const BigInt& c = coeffs_[i];
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min()) {
      throw std::overflow_error("polynomial coefficient out of JSON integer range");
    }
    arr.push_back({low_ + static_cast<int>(i), c.convert_to<long long>()});
  }
  return arr;
}

LaurentPolynomial normalized_poly(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial q = p.shifted(-p.lowest_exponent());
  if (q.leading_coeff() < 0) q = -q;
  return q;
}

bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  LaurentPolynomial x = a.shifted(-a.lowest_exponent());
  LaurentPolynomial y = b.shifted(-b.lowest_exponent());
  return x == y || x == -y;
}

bool is_palindromic(const LaurentPolynomial& p) {
  return equal_up_to_units(p, p.mirrored());
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPolynomial::one();
  return m;
}

PolyMatrix PolyMatrix::without(int row, int col) const {
  PolyMatrix m(rows - 1, cols - 1);
  for (int i = 0, mi = 0; i < rows; ++i) {
    if (i == row) continue;
    for (int j = 0, mj = 0; j < cols; ++j) {
      if (j == col) continue;
      m.at(mi, mj) = at(i, j);
      ++mj;
    }
    ++mi;
  }
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in multiply");
  PolyMatrix m(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero()) continue;
        m.at(i, j) = m.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  return m;
}

PolyMatrix subtract(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix shape mismatch in subtract");
  PolyMatrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    m.entries[i] = a.entries[i] - b.entries[i];
  return m;
}

namespace {

// Plain integer polynomials (dense from exponent 0) for the elimination core.
using Poly = std::vector<BigInt>;  // empty = zero, back() != 0

void ptrim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  ptrim(r);
  return r;
}

Poly psub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ptrim(r);
  return r;
}

// Exact division; throws if a remainder appears (elimination guarantees none).
Poly pdiv_exact(Poly num, const Poly& den) {
  if (den.empty()) throw std::logic_error("fraction-free pivot vanished");
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::logic_error("inexact division in elimination");
  Poly q(num.size() - den.size() + 1);
  for (std::size_t qi = q.size(); qi-- > 0;) {
    BigInt& top = num[qi + den.size() - 1];
    if (top == 0) continue;
    BigInt c = top / den.back();
    if (c * den.back() != top) throw std::logic_error("inexact division in elimination");
    q[qi] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
  }
  ptrim(num);
  if (!num.empty()) throw std::logic_error("inexact division in elimination");
  return q;
}

std::size_t pterms(const Poly& p) {
  std::size_t t = 0;
  for (const auto& c : p)
    if (c != 0) ++t;
  return t;
}

}  // namespace

LaurentPolynomial determinant(const PolyMatrix& mat) {
  if (mat.rows != mat.cols) throw std::invalid_argument("determinant of non-square matrix");
  const int n = mat.rows;
  if (n == 0) return LaurentPolynomial::one();

  // Clear negative exponents row by row; every row scaling by t^e multiplies
  // the determinant by t^e, undone at the end.
  int shift_back = 0;
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n),
                                   std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    int row_low = 0;
    bool any = false;
    for (int j = 0; j < n; ++j) {
      const auto& e = mat.at(i, j);
      if (e.is_zero()) continue;
      row_low = any ? std::min(row_low, e.lowest_exponent()) : e.lowest_exponent();
      any = true;
    }
    if (!any) return LaurentPolynomial::zero();
    shift_back += row_low;
    for (int j = 0; j < n; ++j) {
      const auto& e = mat.at(i, j);
      if (e.is_zero()) continue;
      Poly p(static_cast<std::size_t>(e.highest_exponent() - row_low) + 1);
      for (int k = e.lowest_exponent(); k <= e.highest_exponent(); ++k)
        p[static_cast<std::size_t>(k - row_low)] = e.coeff(k);
      ptrim(p);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(p);
    }
  }

  int sign = 1;
  Poly prev{BigInt(1)};
  for (int k = 0; k < n - 1; ++k) {
    // Full pivoting on the smallest nonzero entry keeps intermediate growth down.
    int pi = -1, pj = -1;
    std::size_t best_deg = 0, best_terms = 0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        const Poly& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (e.empty()) continue;
        std::size_t deg = e.size(), terms = pterms(e);
        if (pi < 0 || deg < best_deg || (deg == best_deg && terms < best_terms)) {
          pi = i;
          pj = j;
          best_deg = deg;
          best_terms = terms;
        }
      }
    if (pi < 0) return LaurentPolynomial::zero();
    if (pi != k) {
      std::swap(m[static_cast<std::size_t>(pi)], m[static_cast<std::size_t>(k)]);
      sign = -sign;
    }
    if (pj != k) {
      for (int i = 0; i < n; ++i)
        std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)],
                  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
      sign = -sign;
    }
    const Poly pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      const Poly& mik = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      for (int j = k + 1; j < n; ++j) {
        Poly& mij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        Poly num = psub(pmul(mij, pivot),
                        pmul(mik, m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
        mij = num.empty() ? Poly{} : pdiv_exact(std::move(num), prev);
      }
    }
    prev = pivot;
  }

  const Poly& d = m[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1];
  LaurentPolynomial out;
  for (std::size_t i = 0; i < d.size(); ++i)
    out = out + LaurentPolynomial::term(sign > 0 ? d[i] : -d[i], static_cast<int>(i));
  return out.shifted(shift_back);
}

}  // namespace petalforge
