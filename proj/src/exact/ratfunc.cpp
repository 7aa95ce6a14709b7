#include "qsym/exact/ratfunc.hpp"

#include <algorithm>

#include "qsym/exact/errors.hpp"

namespace qsym::exact {

namespace {

const Ring* pick_ring(const Ring* a, const Ring* b) {
  if (a != nullptr && b != nullptr && a != b) throw InvalidArgument("mixing values from different rings");
  return a != nullptr ? a : b;
}

// num * prod atom_k^(target_k - den_k)
Poly lift(const Ring& ring, const Poly& num, const DenExp& den, const DenExp& target) {
  Poly out = num;
  for (int k = 0; k < kMaxAtoms; ++k) {
    const int e = target[static_cast<std::size_t>(k)] - den[static_cast<std::size_t>(k)];
    if (e > 0) out = out * ring.atom_power(k, e);
  }
  return out;
}

DenExp max_den(const DenExp& a, const DenExp& b) {
  DenExp m{};
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

}  // namespace

RatFunc::RatFunc(const Ring& ring, Poly num, DenExp den) : ring_(&ring), num_(std::move(num)), den_(den) {
  normalize();
}

RatFunc RatFunc::raw(const Ring& ring, Poly num, DenExp den) {
  RatFunc f;
  f.ring_ = &ring;
  f.num_ = std::move(num);
  f.den_ = den;
  return f;
}

RatFunc RatFunc::inverse_atom(const Ring& ring, int k, int e) {
  DenExp den{};
  den[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e);
  return raw(ring, Poly(1), den);
}

RatFunc RatFunc::reciprocal(const Ring& ring, const Poly& p) {
  const auto f = ring.factor_over_atoms(p);
  return raw(ring, Poly(GScalar(1) / f.scalar), f.exps);
}

bool RatFunc::has_denominator() const {
  return std::any_of(den_.begin(), den_.end(), [](std::uint8_t e) { return e != 0; });
}

Poly RatFunc::denominator_poly() const {
  Poly d(1);
  if (ring_ == nullptr) return d;
  for (int k = 0; k < kMaxAtoms; ++k) {
    if (den_[static_cast<std::size_t>(k)] > 0) d = d * ring_->atom_power(k, den_[static_cast<std::size_t>(k)]);
  }
  return d;
}

RatFunc& RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = {};
    return *this;
  }
  if (ring_ == nullptr) return *this;
  for (int k = 0; k < kMaxAtoms; ++k) {
    auto& e = den_[static_cast<std::size_t>(k)];
    while (e > 0) {
      auto q = num_.divide_exact(ring_->atom(k));
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  return *this;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  ring_ = pick_ring(ring_, o.ring_);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    const DenExp m = max_den(den_, o.den_);
    num_ = lift(*ring_, num_, den_, m) + lift(*ring_, o.num_, o.den_, m);
    den_ = m;
  }
  return normalize();
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

RatFunc RatFunc::mul_raw(const RatFunc& a, const RatFunc& b) {
  RatFunc f;
  f.ring_ = pick_ring(a.ring_, b.ring_);
  if (a.num_.is_zero() || b.num_.is_zero()) return f;
  f.num_ = a.num_ * b.num_;
  for (std::size_t k = 0; k < f.den_.size(); ++k) {
    const int e = a.den_[k] + b.den_[k];
    if (e > 255) throw ResourceCapExceeded("denominator exponent cap");
    f.den_[k] = static_cast<std::uint8_t>(e);
  }
  return f;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc f = RatFunc::mul_raw(a, b);
  if (a.has_denominator() || b.has_denominator()) return f.normalize();
  return f;
}

RatFunc RatFunc::times_poly(const Poly& p) const {
  RatFunc f = *this;
  f.num_ = f.num_ * p;
  if (f.num_.is_zero()) f.den_ = {};
  return f.normalize();
}

RatFunc RatFunc::diff(int axis) const {
  if (ring_ == nullptr || num_.is_zero()) return RatFunc{};
  const int slot = coord_slot(axis);
  std::vector<int> active;
  for (int k = 0; k < kMaxAtoms; ++k) {
    if (den_[static_cast<std::size_t>(k)] > 0 && !ring_->atom_diff(k, axis).is_zero()) active.push_back(k);
  }
  Poly dnum = num_.diff(slot);
  if (active.empty()) return RatFunc(*ring_, std::move(dnum), den_);

  // d(P / prod a^e) = (P' prod a - P sum e_k a_k' prod_{j!=k} a_j) / prod a^(e+1)
  Poly all(1);
  for (int k : active) all = all * ring_->atom(k);
  Poly out = dnum * all;
  for (int k : active) {
    Poly others(1);
    for (int j : active) {
      if (j != k) others = others * ring_->atom(j);
    }
    out -= num_ * ring_->atom_diff(k, axis) * others * GScalar(den_[static_cast<std::size_t>(k)]);
  }
  DenExp den = den_;
  for (int k : active) {
    if (den[static_cast<std::size_t>(k)] == 255) throw ResourceCapExceeded("denominator exponent cap");
    ++den[static_cast<std::size_t>(k)];
  }
  return RatFunc(*ring_, std::move(out), den);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return a.num_.is_zero() && b.num_.is_zero();
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string RatFunc::to_string() const {
  if (!has_denominator()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + denominator_poly().to_string() + ")";
}

void RatSum::add(const RatFunc& f) {
  if (!f.is_zero()) parts_.push_back(f);
}

void RatSum::add(RatFunc&& f) {
  if (!f.is_zero()) parts_.push_back(std::move(f));
}

RatFunc RatSum::finish() {
  if (parts_.empty()) return RatFunc{};
  DenExp m{};
  for (const auto& p : parts_) m = max_den(m, p.den());
  std::vector<Term> terms;
  for (const auto& p : parts_) {
    Poly lifted = p.den() == m ? p.num() : lift(*ring_, p.num(), p.den(), m);
    for (const auto& t : lifted.terms()) terms.push_back(t);
  }
  parts_.clear();
  return RatFunc(*ring_, Poly::from_terms(std::move(terms)), m);
}

}  // namespace qsym::exact
