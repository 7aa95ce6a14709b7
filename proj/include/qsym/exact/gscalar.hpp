#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace qsym::exact {

/// Gaussian rational re + i*im with arbitrary-precision parts.
class GScalar {
 public:
  GScalar() = default;
  GScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit GScalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GScalar i() { return GScalar(mpq_class(0), mpq_class(1)); }
  static GScalar rational(long num, long den) { return GScalar(mpq_class(num, den)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GScalar conj() const { return GScalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GScalar& operator+=(const GScalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GScalar& operator-=(const GScalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GScalar& operator*=(const GScalar& o);
  GScalar& operator/=(const GScalar& o);

  /// this += a*b without temporaries for the common real case.
  void add_product(const GScalar& a, const GScalar& b);

  friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
  friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }
  friend GScalar operator*(GScalar a, const GScalar& b) { return a *= b; }
  friend GScalar operator/(GScalar a, const GScalar& b) { return a /= b; }
  GScalar operator-() const { return GScalar(-re_, -im_); }

  friend bool operator==(const GScalar& a, const GScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GScalar& a, const GScalar& b) { return !(a == b); }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace qsym::exact
