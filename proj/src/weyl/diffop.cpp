#include "qsym/weyl/diffop.hpp"

#include <unordered_map>

#include "qsym/exact/errors.hpp"

namespace qsym::weyl {

using exact::RadSum;

Limits& limits() {
  static Limits l;
  return l;
}

DerivIndex DerivIndex::axis(int a, int power) { return DerivIndex{}.with(a, power); }

DerivIndex DerivIndex::with(int axis, int power) const {
  if (axis < 0 || axis >= 8) throw InvalidArgument("derivative axis out of range");
  if (power < 0 || power > 127) throw ResourceCapExceeded("derivative power out of range");
  const int shift = 8 * axis;
  return from_bits((bits_ & ~(0xFFull << shift)) | (static_cast<std::uint64_t>(power) << shift));
}

int DerivIndex::order() const {
  std::uint64_t v = (bits_ & 0x00FF00FF00FF00FFull) + ((bits_ >> 8) & 0x00FF00FF00FF00FFull);
  return static_cast<int>((v * 0x0001000100010001ull) >> 48);
}

DerivIndex DerivIndex::operator+(const DerivIndex& o) const {
  const std::uint64_t b = bits_ + o.bits_;
  if ((b & 0x8080808080808080ull) != 0) throw ResourceCapExceeded("derivative order overflow");
  return from_bits(b);
}

bool DerivIndex::dominates(const DerivIndex& o) const {
  constexpr std::uint64_t high = 0x8080808080808080ull;
  return (((bits_ | high) - o.bits_) & high) == high;
}

std::string DerivIndex::to_string(int dim) const {
  std::string out;
  for (int a = 0; a < dim; ++a) {
    const int e = get(a);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "d" + std::to_string(a + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

DiffOp DiffOp::multiplication(RadExt c) {
  if (c.ring() == nullptr) return {};
  DiffOp p(*c.ring());
  p.add_term(DerivIndex{}, c);
  return p;
}

DiffOp DiffOp::partial(const Ring& ring, int axis, int power) {
  if (axis < 0 || axis >= ring.dim()) throw InvalidArgument("axis out of range");
  DiffOp p(ring);
  p.add_term(DerivIndex::axis(axis, power), RadExt::constant(ring, GScalar(1)));
  return p;
}

DiffOp DiffOp::momentum(const Ring& ring, int axis) {
  if (axis < 0 || axis >= ring.dim()) throw InvalidArgument("axis out of range");
  DiffOp p(ring);
  p.add_term(DerivIndex::axis(axis), RadExt::poly(ring, Poly(-GScalar::i(), exact::Monomial::var(exact::Var::hbar))));
  return p;
}

std::size_t DiffOp::coefficient_size() const {
  std::size_t n = 0;
  for (const auto& [alpha, c] : terms_) n += c.rational_part().num().size() + c.radical_part().num().size();
  return n;
}

int DiffOp::order() const { return terms_.empty() ? -1 : terms_.rbegin()->first.order(); }

RadExt DiffOp::coefficient(const DerivIndex& alpha) const {
  auto it = terms_.find(alpha);
  if (it != terms_.end()) return it->second;
  return ring_ != nullptr ? RadExt::constant(*ring_, GScalar(0)) : RadExt{};
}

void DiffOp::add_term(const DerivIndex& alpha, const RadExt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
const Ring* pick(const Ring* a, const Ring* b) {
  if (a != nullptr && b != nullptr && a != b) throw InvalidArgument("operators over different rings");
  return a != nullptr ? a : b;
}
}  // namespace

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  ring_ = pick(ring_, o.ring_);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  ring_ = pick(ring_, o.ring_);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp p(*this);
  for (auto& [alpha, c] : p.terms_) c = -c;
  return p;
}

DiffOp operator*(const GScalar& c, const DiffOp& p) {
  DiffOp out;
  out.ring_ = p.ring_;
  if (c.is_zero()) return out;
  for (const auto& [alpha, coef] : p.terms_) out.terms_.emplace(alpha, coef * c);
  return out;
}

DiffOp operator*(const RadExt& c, const DiffOp& p) {
  DiffOp out;
  out.ring_ = pick(p.ring_, c.ring());
  if (c.is_zero()) return out;
  for (const auto& [alpha, coef] : p.terms_) out.add_term(alpha, c * coef);
  return out;
}

namespace {

// Memoized mixed partial derivatives of one coefficient.
class DerivativeCache {
 public:
  explicit DerivativeCache(const RadExt& f) { cache_.emplace(0, f); }

  const RadExt& get(const DerivIndex& gamma) {
    auto it = cache_.find(gamma.bits());
    if (it != cache_.end()) return it->second;
    int axis = 0;
    while (gamma.get(axis) == 0) ++axis;
    const RadExt lower = get(gamma.with(axis, gamma.get(axis) - 1));
    RadExt d = lower.diff(axis);
    return cache_.emplace(gamma.bits(), std::move(d)).first->second;
  }

 private:
  std::unordered_map<std::uint64_t, RadExt> cache_;
};

long binomial(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// All gamma with gamma <= alpha componentwise.
std::vector<DerivIndex> sub_indices(const DerivIndex& alpha, int dim) {
  std::vector<DerivIndex> out{DerivIndex{}};
  for (int a = 0; a < dim; ++a) {
    const int top = alpha.get(a);
    if (top == 0) continue;
    std::vector<DerivIndex> next;
    next.reserve(out.size() * static_cast<std::size_t>(top + 1));
    for (const auto& g : out) {
      for (int e = 0; e <= top; ++e) next.push_back(g.with(a, e));
    }
    out = std::move(next);
  }
  return out;
}

void check_size(const RadExt& c) {
  const std::size_t n = c.rational_part().num().size() + c.radical_part().num().size();
  if (n > limits().max_coefficient_terms) {
    throw ResourceCapExceeded("operator coefficient exceeds " + std::to_string(limits().max_coefficient_terms) +
                              " terms");
  }
}

}  // namespace

DiffOp operator*(const DiffOp& p, const DiffOp& q) {
  DiffOp out;
  out.ring_ = pick(p.ring_, q.ring_);
  if (p.terms_.empty() || q.terms_.empty()) return out;
  if (p.order() + q.order() > limits().max_order) {
    throw ResourceCapExceeded("operator order " + std::to_string(p.order() + q.order()) + " exceeds cap " +
                              std::to_string(limits().max_order));
  }
  const Ring* ring = out.ring_;
  const int dim = ring->dim();

  std::map<DerivIndex, RadSum> acc;
  std::vector<DerivativeCache> caches;
  caches.reserve(q.terms_.size());
  for (const auto& [beta, d] : q.terms_) caches.emplace_back(d);

  for (const auto& [alpha, c] : p.terms_) {
    const auto gammas = sub_indices(alpha, dim);
    std::size_t qi = 0;
    for (const auto& [beta, d] : q.terms_) {
      auto& cache = caches[qi++];
      for (const auto& gamma : gammas) {
        long mult = 1;
        for (int a = 0; a < dim; ++a) mult *= binomial(alpha.get(a), gamma.get(a));
        const RadExt& dg = cache.get(gamma);
        if (dg.is_zero()) continue;
        const DerivIndex target = (alpha - gamma) + beta;
        auto it = acc.try_emplace(target, ring).first;
        it->second.add_product(c, dg, GScalar(mult));
      }
    }
  }
  for (auto& [alpha, sum] : acc) {
    RadExt c = sum.finish();
    if (c.is_zero()) continue;
    check_size(c);
    out.terms_.emplace(alpha, std::move(c));
  }
  return out;
}

RadExt DiffOp::apply(const RadExt& f) const {
  if (terms_.empty()) return ring_ != nullptr ? RadExt::constant(*ring_, GScalar(0)) : RadExt{};
  DerivativeCache cache(f);
  RadSum sum(ring_);
  for (const auto& [alpha, c] : terms_) sum.add_product(c, cache.get(alpha), GScalar(1));
  return sum.finish();
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  }
  return true;
}

std::vector<std::string> DiffOp::describe(std::size_t max_terms) const {
  std::vector<std::string> out;
  const int dim = ring_ != nullptr ? ring_->dim() : 0;
  for (const auto& [alpha, c] : terms_) {
    if (out.size() >= max_terms) break;
    out.push_back("[" + c.to_string() + "] " + alpha.to_string(dim));
  }
  return out;
}

DiffOp compose(const DiffOp& p, const DiffOp& q) { return p * q; }

DiffOp commutator(const DiffOp& p, const DiffOp& q) { return p * q - q * p; }

DiffOp anticommutator(const DiffOp& p, const DiffOp& q) { return p * q + q * p; }

bool is_zero(const DiffOp& p) { return p.is_zero(); }

}  // namespace qsym::weyl
