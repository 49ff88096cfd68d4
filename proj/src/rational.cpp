#include "gkmod/rational.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "gkmod/errors.hpp"

namespace gkmod {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw ParseError("not an exact rational (expected p or p/q): '" + std::string(text) + "'");
  }
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational out;
  out.get_num() = mpz_class(n, 10);
  if (den.empty()) {
    out.get_den() = 1;
  } else {
    out.get_den() = mpz_class(std::string(den), 10);
    if (out.get_den() == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw ValidationError("expected an integer, got " + to_string(x));
  const mpz_class& n = x.get_num();
  if (!n.fits_slong_p()) throw CapExceeded("integer out of 64-bit range: " + to_string(x));
  return static_cast<std::int64_t>(n.get_si());
}

Rational floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return Rational(q);
}

Rational sqrt_upper_bound(const Rational& x) {
  if (x < 0) throw ValidationError("sqrt_upper_bound of a negative number");
  // sqrt(n/d) = sqrt(n d)/d, exact when n d is a perfect square.
  mpz_class nd = x.get_num() * x.get_den();
  mpz_class s = sqrt(nd);
  if (s * s != nd) s += 1;
  return frac(s, x.get_den());
}

Rational frac(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVector>& rows, std::size_t cols) {
  RMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("matrix row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RVector RMatrix::row(std::size_t i) const {
  return RVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RVector RMatrix::apply(const RVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector length mismatch");
  RVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RMatrix RMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RMatrix a = *this;
  RMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw ValidationError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t RMatrix::rank() const {
  RMatrix a = *this;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = r;
    while (pivot < rows_ && a(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace gkmod
