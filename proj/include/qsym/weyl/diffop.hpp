#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsym/exact/radext.hpp"

namespace qsym::weyl {

using exact::GScalar;
using exact::Poly;
using exact::RadExt;
using exact::Ring;

/// Multi-index alpha of a derivative monomial d^alpha = d_1^a1 ... d_N^aN.
class DerivIndex {
 public:
  constexpr DerivIndex() = default;
  static DerivIndex axis(int a, int power = 1);

  int get(int axis) const { return static_cast<int>((bits_ >> (8 * axis)) & 0xFFu); }
  DerivIndex with(int axis, int power) const;
  int order() const;
  bool is_zero() const { return bits_ == 0; }

  DerivIndex operator+(const DerivIndex& o) const;
  /// Componentwise difference; requires o <= this.
  DerivIndex operator-(const DerivIndex& o) const { return from_bits(bits_ - o.bits_); }
  bool dominates(const DerivIndex& o) const;  // o <= this componentwise

  friend bool operator==(const DerivIndex& a, const DerivIndex& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const DerivIndex& a, const DerivIndex& b) {
    const int oa = a.order();
    const int ob = b.order();
    return oa != ob ? oa < ob : a.bits_ < b.bits_;
  }

  std::uint64_t bits() const { return bits_; }
  std::string to_string(int dim) const;

 private:
  static DerivIndex from_bits(std::uint64_t b) {
    DerivIndex d;
    d.bits_ = b;
    return d;
  }
  std::uint64_t bits_ = 0;
};

/// Hard caps on intermediate sizes; exceeding one throws ResourceCapExceeded.
struct Limits {
  int max_order = 12;
  std::size_t max_coefficient_terms = 4'000'000;
};

/// Process-wide caps used by composition (configurable by the CLI).
Limits& limits();

/// Differential operator sum_alpha c_alpha(x, r) d^alpha in normal order
/// (coefficients to the left of derivatives).
class DiffOp {
 public:
  using TermMap = std::map<DerivIndex, RadExt>;

  DiffOp() = default;
  explicit DiffOp(const Ring& ring) : ring_(&ring) {}

  static DiffOp identity(const Ring& ring) { return multiplication(RadExt::constant(ring, GScalar(1))); }
  static DiffOp multiplication(RadExt c);
  static DiffOp partial(const Ring& ring, int axis, int power = 1);
  /// p_axis = -i hbar d_axis
  static DiffOp momentum(const Ring& ring, int axis);

  const Ring* ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  /// Total number of polynomial terms across all coefficients.
  std::size_t coefficient_size() const;
  int order() const;
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of d^alpha (zero if absent).
  RadExt coefficient(const DerivIndex& alpha) const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;
  friend DiffOp operator*(const GScalar& c, const DiffOp& p);
  /// Left multiplication by a function.
  friend DiffOp operator*(const RadExt& c, const DiffOp& p);
  /// Operator composition (normal-ordered product).
  friend DiffOp operator*(const DiffOp& p, const DiffOp& q);

  /// Applies the operator to a function of (x, r).
  RadExt apply(const RadExt& f) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b);
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  /// Human-readable listing of up to `max_terms` terms.
  std::vector<std::string> describe(std::size_t max_terms) const;

 private:
  void add_term(const DerivIndex& alpha, const RadExt& c);
  const Ring* ring_ = nullptr;
  TermMap terms_;
};

DiffOp compose(const DiffOp& p, const DiffOp& q);
DiffOp commutator(const DiffOp& p, const DiffOp& q);
DiffOp anticommutator(const DiffOp& p, const DiffOp& q);
bool is_zero(const DiffOp& p);

}  // namespace qsym::weyl
