#pragma once

#include <string>
#include <vector>

#include "qsym/exact/ring.hpp"

namespace qsym::exact {

/// Rational function num / prod(atom_k ^ den_k) over a Ring.
///
/// Canonical form: the numerator is not divisible by any atom that appears in
/// the denominator, and zero has an empty denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Ring& ring, Poly num = {}, DenExp den = {});

  /// Skips normalization; used for intermediate sums.
  static RatFunc raw(const Ring& ring, Poly num, DenExp den);
  /// 1 / atom_k^e.
  static RatFunc inverse_atom(const Ring& ring, int k, int e = 1);
  /// 1 / p for a polynomial p (registers new atoms as needed).
  static RatFunc reciprocal(const Ring& ring, const Poly& p);

  const Ring* ring() const { return ring_; }
  const Poly& num() const { return num_; }
  const DenExp& den() const { return den_; }
  bool has_denominator() const;
  Poly denominator_poly() const;

  bool is_zero() const { return num_.is_zero(); }

  RatFunc& normalize();

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(RatFunc a, const GScalar& c) {
    a.num_ *= c;
    if (a.num_.is_zero()) a.den_ = {};
    return a;
  }
  RatFunc operator-() const;
  /// Unnormalized product (denominators add).
  static RatFunc mul_raw(const RatFunc& a, const RatFunc& b);
  RatFunc times_poly(const Poly& p) const;

  /// d/dx_axis (zero-based axis).
  RatFunc diff(int axis) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  const Ring* ring_ = nullptr;
  Poly num_;
  DenExp den_{};
};

/// Sums many unnormalized rational functions with one common denominator.
class RatSum {
 public:
  explicit RatSum(const Ring* ring) : ring_(ring) {}
  void add(const RatFunc& f);
  void add(RatFunc&& f);
  bool empty() const { return parts_.empty(); }
  RatFunc finish();

 private:
  const Ring* ring_;
  std::vector<RatFunc> parts_;
};

}  // namespace qsym::exact
