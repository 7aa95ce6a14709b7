#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

namespace qsym::spectra {

using Real = boost::multiprecision::cpp_bin_float_50;

/// Real value carried exactly as a rational while possible and always as a
/// 50-digit float. Square roots stay exact only for perfect-square rationals.
class Number {
 public:
  Number() : q_(mpq_class(0)), r_(0) {}
  Number(long v) : q_(mpq_class(v)), r_(v) {}  // NOLINT(google-explicit-constructor)
  Number(const mpq_class& q);                  // NOLINT(google-explicit-constructor)
  static Number from_real(const Real& r) { return Number(std::nullopt, r); }
  static Number rational(long num, long den) { return Number(mpq_class(num, den)); }
  /// Accepts "3", "-1/4", "0.125", "2.5e-3"; decimals are read exactly.
  static Number parse(const std::string& text);

  bool exact() const { return q_.has_value(); }
  const mpq_class& rational() const { return *q_; }
  const Real& real() const { return r_; }
  double to_double() const { return static_cast<double>(r_); }
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Number operator-() const;
  Number& operator+=(const Number& o);
  Number& operator-=(const Number& o);
  Number& operator*=(const Number& o);
  Number& operator/=(const Number& o);
  friend Number operator+(Number a, const Number& b) { return a += b; }
  friend Number operator-(Number a, const Number& b) { return a -= b; }
  friend Number operator*(Number a, const Number& b) { return a *= b; }
  friend Number operator/(Number a, const Number& b) { return a /= b; }

  friend bool operator<(const Number& a, const Number& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Number& a, const Number& b) { return (a - b).sign() > 0; }

  /// "p/q" when exact, otherwise empty.
  std::string exact_string() const;
  /// Decimal with the given number of significant digits.
  std::string decimal(int digits = 15) const;

 private:
  Number(std::optional<mpq_class> q, Real r) : q_(std::move(q)), r_(std::move(r)) {}

  std::optional<mpq_class> q_;
  Real r_;
};

/// Nonnegative square root; negative input throws DomainError.
Number sqrt(const Number& x);
Number abs(const Number& x);

/// |a - b| / max(|a|, |b|), or |a - b| when both vanish; 0 when both are exact and equal.
Real relative_difference(const Number& a, const Number& b);

}  // namespace qsym::spectra
