#pragma once

#include <string>

#include "qsym/exact/ratfunc.hpp"

namespace qsym::exact {

/// Element a + b*r of Q(i)(x_1..x_N, params)[r] / (r^2 - s).
class RadExt {
 public:
  RadExt() = default;
  explicit RadExt(RatFunc a, RatFunc b = {});

  static RadExt constant(const Ring& ring, GScalar c);
  static RadExt poly(const Ring& ring, Poly p);
  static RadExt coord(const Ring& ring, int axis) { return poly(ring, Poly::coord(axis)); }
  /// The radical r itself; requires a ring with has_radical().
  static RadExt radical(const Ring& ring);

  const RatFunc& rational_part() const { return a_; }
  const RatFunc& radical_part() const { return b_; }
  const Ring* ring() const { return a_.ring() != nullptr ? a_.ring() : b_.ring(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  RadExt& operator+=(const RadExt& o);
  RadExt& operator-=(const RadExt& o);
  friend RadExt operator+(RadExt p, const RadExt& q) { return p += q; }
  friend RadExt operator-(RadExt p, const RadExt& q) { return p -= q; }
  friend RadExt operator*(const RadExt& p, const RadExt& q);
  friend RadExt operator*(RadExt p, const GScalar& c);
  friend RadExt operator*(const GScalar& c, RadExt p) { return std::move(p) * c; }
  RadExt operator-() const { return RadExt(-a_, -b_); }

  /// (a - b r) / (a^2 - b^2 s); throws ZeroDivisor when the norm vanishes.
  RadExt inverse() const;
  /// d/dx_axis with dr/dx_i = x_i r / s.
  RadExt diff(int axis) const;

  /// a^2 - b^2 s.
  RatFunc norm() const;

  friend bool operator==(const RadExt& p, const RadExt& q) { return p.a_ == q.a_ && p.b_ == q.b_; }
  friend bool operator!=(const RadExt& p, const RadExt& q) { return !(p == q); }

  std::string to_string() const;

 private:
  friend class RadSum;
  RatFunc a_;
  RatFunc b_;
};

/// Accumulates products of RadExt values with a single normalization at the end.
class RadSum {
 public:
  explicit RadSum(const Ring* ring) : ring_(ring), a_(ring), b_(ring) {}
  void add(const RadExt& v);
  /// += c * p * q
  void add_product(const RadExt& p, const RadExt& q, const GScalar& c);
  RadExt finish();

 private:
  const Ring* ring_;
  RatSum a_;
  RatSum b_;
};

}  // namespace qsym::exact
