#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace petalforge {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable t, exact arithmetic throughout.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial one() { return term(1, 0); }
  static LaurentPolynomial term(BigInt coeff, int exp);
  static LaurentPolynomial from_pairs(std::vector<std::pair<int, BigInt>> pairs);

  bool is_zero() const { return coeffs_.empty(); }
  // Exponent bounds; only meaningful on nonzero polynomials.
  int lowest_exponent() const;
  int highest_exponent() const;
  int span() const { return highest_exponent() - lowest_exponent(); }
  BigInt coeff(int exp) const;
  const BigInt& leading_coeff() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial& o) const {
    return low_ == o.low_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  // Multiply by t^k.
  LaurentPolynomial shifted(int k) const;
  // Substitute t -> 1/t.
  LaurentPolynomial mirrored() const;
  // Exact quotient, or nullopt if the division leaves a remainder.
  std::optional<LaurentPolynomial> divided_exact(const LaurentPolynomial& d) const;
  BigInt evaluated_at(const BigInt& x) const;

  // Ascending terms joined with signs, e.g. "1 - t + t^2"; zero prints "0".
  std::string to_string() const;
  // Array of [exponent, coefficient] pairs, ascending.
  nlohmann::json to_json() const;

private:
  int low_ = 0;
  std::vector<BigInt> coeffs_;  // coeff of t^(low_+i); empty means zero, ends nonzero
  void trim();
};

// Shift the lowest exponent to zero and make the top coefficient positive.
LaurentPolynomial normalized_poly(const LaurentPolynomial& p);
// Equality up to multiplication by +-t^k.
bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b);
// True when p equals +-t^k * p(1/t).
bool is_palindromic(const LaurentPolynomial& p);

struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<LaurentPolynomial> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(int r, int c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}
  static PolyMatrix identity(int n);

  LaurentPolynomial& at(int i, int j) {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(j)];
  }
  const LaurentPolynomial& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(j)];
  }
  // Copy with one row and one column removed.
  PolyMatrix without(int row, int col) const;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix subtract(const PolyMatrix& a, const PolyMatrix& b);
// Exact determinant via fraction-free (Bareiss) elimination with full pivoting.
LaurentPolynomial determinant(const PolyMatrix& m);

}  // namespace petalforge
