#pragma once

// Exact scalars, dense square matrices and univariate polynomials over Q.
// Every sign decision downstream goes through these types; no floating point
// is used except in the explicit to_double() conversions.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polynet {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q" and "-p/q" with arbitrary-length integers.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  /// Always "p/q", including integers ("3/1"), so exactness is visible in output.
  std::string to_string() const;
  /// "p" for integers, "p/q" otherwise.
  std::string to_short_string() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_{0};
};

using RatVector = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational squared_distance(std::span<const Rational> a, std::span<const Rational> b);
Rational sum(std::span<const Rational> values);

/// Dense n x n matrix, row-major.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t order);
  RatMatrix(std::size_t order, std::vector<Rational> row_major);
  static RatMatrix identity(std::size_t order);
  /// Builds from nested rows; throws DimensionError unless square.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t order() const { return order_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }

  RatVector column(std::size_t col) const;
  RatVector row(std::size_t r) const;
  void set_column(std::size_t col, std::span<const Rational> values);

  RatVector operator*(std::span<const Rational> v) const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
};

/// Exact product; throws DimensionError on order mismatch.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return mat_mul(a, b); }

/// Polynomial with ascending coefficients and no trailing zeros (zero poly is empty).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t power) const;
  /// Coefficient of the lowest-degree nonzero term; zero for the zero polynomial.
  Rational lowest_term() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  std::string to_string() const;

 private:
  std::vector<Rational> coefficients_;
};

Rational poly_eval(const RatPoly& p, const Rational& x);

/// Least-degree interpolant through the points (Newton divided differences).
/// Throws ValidationError on duplicate abscissae.
RatPoly poly_interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace polynet
