#include "qsym/exact/monomial.hpp"

#include "qsym/exact/errors.hpp"

namespace qsym::exact {

namespace {
constexpr std::uint64_t kHighBits = 0x8080808080808080ull;
}

std::string var_name(int slot) {
  static const std::array<const char*, 9> named = {"hbar", "c0", "c1", "c2", "omega", "H", "J2", "Jb", "Kb"};
  if (slot < static_cast<int>(named.size())) return named[static_cast<std::size_t>(slot)];
  return "x" + std::to_string(slot - static_cast<int>(Var::x1) + 1);
}

Monomial Monomial::var(int slot, int power) {
  return Monomial{}.with_exponent(slot, power);
}

Monomial Monomial::with_exponent(int slot, int power) const {
  if (slot < 0 || slot >= kNumVars) throw InvalidArgument("monomial slot out of range");
  if (power < 0 || power > kMaxExponent) throw ResourceCapExceeded("monomial exponent out of range");
  Monomial m = *this;
  const int shift = (7 - (slot & 7)) * 8;
  std::uint64_t& w = slot < 8 ? m.hi_ : m.lo_;
  w = (w & ~(0xFFull << shift)) | (static_cast<std::uint64_t>(power) << shift);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.hi_ = hi_ + o.hi_;
  m.lo_ = lo_ + o.lo_;
  // Each byte holds at most 127, so the sum cannot carry across bytes.
  if (((m.hi_ | m.lo_) & kHighBits) != 0) throw ResourceCapExceeded("monomial exponent exceeds cap");
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  // o - this without borrow iff every byte of this <= byte of o.
  const std::uint64_t dh = (o.hi_ | kHighBits) - hi_;
  const std::uint64_t dl = (o.lo_ | kHighBits) - lo_;
  return (dh & kHighBits) == kHighBits && (dl & kHighBits) == kHighBits;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial m;
  m.hi_ = o.hi_ - hi_;
  m.lo_ = o.lo_ - lo_;
  return m;
}

bool Monomial::only_in(std::uint32_t mask) const {
  for (int s = 0; s < kNumVars; ++s) {
    if (exponent(s) != 0 && ((mask >> s) & 1u) == 0) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int s = 0; s < kNumVars; ++s) {
    const int e = exponent(s);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(s);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace qsym::exact
