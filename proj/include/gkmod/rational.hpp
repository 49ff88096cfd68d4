#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gkmod {

using Rational = mpq_class;
using RVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Decimal notation is rejected so that every
/// value crossing the text boundary stays exact.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (always canonical).
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);
std::int64_t to_int64(const Rational& x);  // throws unless integral and in range
Rational floor(const Rational& x);

/// A rational r with r >= sqrt(x), for x >= 0. Used where only an upper
/// bound on a Euclidean length is needed.
Rational sqrt_upper_bound(const Rational& x);

Rational dot(const RVector& a, const RVector& b);

/// num/den in canonical form. mpq_class(num, den) alone does not reduce,
/// and non-canonical values compare incorrectly.
Rational frac(const mpz_class& num, const mpz_class& den);

/// Dense rational matrix, row-major.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RVector row(std::size_t i) const;
  RMatrix transpose() const;
  RVector apply(const RVector& x) const;

  /// Gauss-Jordan inverse; throws ValidationError when singular.
  RMatrix inverse() const;
  std::size_t rank() const;

  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace gkmod
