#include "qsym/exact/radext.hpp"

#include "qsym/exact/errors.hpp"

namespace qsym::exact {

RadExt::RadExt(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b)) {}

RadExt RadExt::constant(const Ring& ring, GScalar c) { return RadExt(RatFunc(ring, Poly(std::move(c)))); }

RadExt RadExt::poly(const Ring& ring, Poly p) { return RadExt(RatFunc(ring, std::move(p))); }

RadExt RadExt::radical(const Ring& ring) {
  if (!ring.has_radical()) throw InvalidArgument("ring has no radical element");
  return RadExt(RatFunc(ring), RatFunc(ring, Poly(1)));
}

RadExt& RadExt::operator+=(const RadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RadExt& RadExt::operator-=(const RadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RadExt operator*(const RadExt& p, const RadExt& q) {
  const Ring* ring = p.ring() != nullptr ? p.ring() : q.ring();
  if (ring == nullptr) return {};
  RadSum sum(ring);
  sum.add_product(p, q, GScalar(1));
  return sum.finish();
}

RadExt operator*(RadExt p, const GScalar& c) {
  p.a_ = p.a_ * c;
  p.b_ = p.b_ * c;
  return p;
}

RatFunc RadExt::norm() const {
  const Ring* r = ring();
  if (r == nullptr) return {};
  RatFunc n = a_ * a_;
  if (!b_.is_zero()) n -= (b_ * b_).times_poly(r->radicand());
  return n;
}

RadExt RadExt::inverse() const {
  const Ring* r = ring();
  if (r == nullptr || is_zero()) throw ZeroDivisor("inverse of zero");
  const RatFunc n = norm();
  if (n.is_zero()) throw ZeroDivisor("radical-extension element has vanishing norm a^2 - b^2 s");
  // 1/n = den(n) / num(n)
  RatFunc inv_n = RatFunc::reciprocal(*r, n.num());
  inv_n = inv_n.times_poly(n.denominator_poly());
  return RadExt(a_ * inv_n, -(b_ * inv_n));
}

RadExt RadExt::diff(int axis) const {
  const Ring* r = ring();
  if (r == nullptr) return {};
  if (axis < 0 || axis >= r->dim()) throw InvalidArgument("axis out of range");
  RatFunc da = a_.diff(axis);
  if (b_.is_zero()) return RadExt(std::move(da), RatFunc(*r));
  // d(b r) = b' r + b x_i r / s
  RatFunc db = b_.diff(axis) + b_ * RatFunc::inverse_atom(*r, 0).times_poly(Poly::coord(axis));
  return RadExt(std::move(da), std::move(db));
}

std::string RadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  if (a_.is_zero()) return "[" + b_.to_string() + "]*r";
  return a_.to_string() + " + [" + b_.to_string() + "]*r";
}

void RadSum::add(const RadExt& v) {
  a_.add(v.a_);
  b_.add(v.b_);
}

void RadSum::add_product(const RadExt& p, const RadExt& q, const GScalar& c) {
  auto scaled = [&c](RatFunc f) { return c.is_one() ? f : f * c; };
  if (!p.a_.is_zero() && !q.a_.is_zero()) a_.add(scaled(RatFunc::mul_raw(p.a_, q.a_)));
  if (!p.b_.is_zero() && !q.b_.is_zero()) {
    RatFunc bb = RatFunc::mul_raw(p.b_, q.b_);
    a_.add(scaled(RatFunc::raw(*ring_, bb.num() * ring_->radicand(), bb.den())));
  }
  if (!p.a_.is_zero() && !q.b_.is_zero()) b_.add(scaled(RatFunc::mul_raw(p.a_, q.b_)));
  if (!p.b_.is_zero() && !q.a_.is_zero()) b_.add(scaled(RatFunc::mul_raw(p.b_, q.a_)));
}

RadExt RadSum::finish() {
  RatFunc a = a_.finish();
  RatFunc b = b_.finish();
  if (a.ring() == nullptr) a = RatFunc(*ring_);
  if (b.ring() == nullptr) b = RatFunc(*ring_);
  return RadExt(std::move(a), std::move(b));
}

}  // namespace qsym::exact
