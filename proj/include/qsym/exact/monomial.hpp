#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace qsym::exact {

/// Variable slots shared by every polynomial in the library.
///
/// Parameters and central symbols live in fixed slots so a polynomial in the
/// parameters can be used unchanged as an operator coefficient or as the
/// coefficient of a central expression.
enum class Var : std::uint8_t {
  hbar = 0,
  c0 = 1,
  c1 = 2,
  c2 = 3,
  omega = 4,
  H = 5,   // central: Hamiltonian
  J2 = 6,  // central: J^2 (KC, so(N-1) Casimir)
  Jb = 7,  // central: J_(2) (DSO first block)
  Kb = 8,  // central: K_(2) (DSO second block)
  x1 = 9,
};

inline constexpr int kNumVars = 16;
inline constexpr int kMaxDim = kNumVars - static_cast<int>(Var::x1);
inline constexpr int kMaxExponent = 127;

/// Slot of the coordinate x_{axis+1} (axis is zero based).
constexpr int coord_slot(int axis) { return static_cast<int>(Var::x1) + axis; }
constexpr int slot(Var v) { return static_cast<int>(v); }

std::string var_name(int slot);

/// Exponent vector over the 16 variable slots, packed into two words so that
/// lexicographic comparison is an unsigned integer comparison.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial var(int slot, int power = 1);
  static Monomial var(Var v, int power = 1) { return var(slot(v), power); }

  int exponent(int slot) const {
    const std::uint64_t w = slot < 8 ? hi_ : lo_;
    const int shift = (7 - (slot & 7)) * 8;
    return static_cast<int>((w >> shift) & 0xFFu);
  }
  int exponent(Var v) const { return exponent(slot(v)); }
  Monomial with_exponent(int slot, int power) const;

  int degree() const { return hsum(hi_) + hsum(lo_); }
  bool is_one() const { return hi_ == 0 && lo_ == 0; }

  /// Product; throws ResourceCapExceeded if an exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Quotient o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;

  /// True if every nonzero exponent sits in a slot marked in `mask` (bit k = slot k).
  bool only_in(std::uint32_t mask) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.hi_ == b.hi_ && a.lo_ == b.lo_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Graded-lexicographic order, slot 0 most significant.
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    if (a.hi_ != b.hi_) return a.hi_ < b.hi_;
    return a.lo_ < b.lo_;
  }

  std::size_t hash() const {
    std::uint64_t h = hi_ * 0x9E3779B97F4A7C15ull;
    h ^= lo_ + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

  std::string to_string() const;

 private:
  static int hsum(std::uint64_t w) {
    std::uint64_t v = (w & 0x00FF00FF00FF00FFull) + ((w >> 8) & 0x00FF00FF00FF00FFull);
    return static_cast<int>((v * 0x0001000100010001ull) >> 48);
  }

  std::uint64_t hi_ = 0;  // slots 0..7
  std::uint64_t lo_ = 0;  // slots 8..15
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qsym::exact
