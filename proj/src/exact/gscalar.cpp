#include "qsym/exact/gscalar.hpp"

#include <functional>
#include <stdexcept>

#include "qsym/exact/errors.hpp"

namespace qsym::exact {

GScalar& GScalar::operator*=(const GScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GScalar& GScalar::operator/=(const GScalar& o) {
  if (o.is_zero()) throw ZeroDivisor("division of Gaussian rational by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

void GScalar::add_product(const GScalar& a, const GScalar& b) {
  if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ += t;
    return;
  }
  *this += a * b;
}

std::size_t GScalar::hash() const {
  const std::hash<std::string> h;
  return h(re_.get_str()) ^ (h(im_.get_str()) << 1);
}

std::string GScalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*i";
  return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "*i)";
}

}  // namespace qsym::exact
