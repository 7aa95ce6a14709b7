#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <mutex>
#include <vector>

#include "qsym/exact/poly.hpp"

namespace qsym::exact {

inline constexpr int kMaxAtoms = 8;

/// Denominator exponents over the ring's registered atoms.
using DenExp = std::array<std::uint8_t, kMaxAtoms>;

/// Coefficient ring context: dimension N, the radicand s = x_1^2 + ... + x_N^2,
/// and the table of denominator atoms.
///
/// Denominators of rational functions are products of powers of atoms. Atoms
/// are monic and assumed pairwise coprime, which makes the "numerator not
/// divisible by any atom present in the denominator" form unique. The atom
/// table only grows; registered atoms are never removed, so references stay
/// valid for the lifetime of the ring. Values hold a raw pointer to their ring,
/// so the ring must outlive them.
class Ring {
 public:
  /// `radical` enables the element r with r^2 = s.
  Ring(int dim, bool radical);
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  int dim() const { return dim_; }
  bool has_radical() const { return radical_; }
  /// s = x_1^2 + ... + x_N^2 (also atom 0).
  const Poly& radicand() const { return atoms_.front().poly; }
  /// Bit mask of the coordinate slots x_1..x_N.
  std::uint32_t coord_mask() const { return coord_mask_; }

  int atom_count() const;
  const Poly& atom(int k) const { return atoms_[static_cast<std::size_t>(k)].poly; }
  /// d(atom_k)/dx_axis.
  const Poly& atom_diff(int k, int axis) const {
    return atoms_[static_cast<std::size_t>(k)].diffs[static_cast<std::size_t>(axis)];
  }
  /// atom_k^e, cached.
  const Poly& atom_power(int k, int e) const;

  /// Registers a denominator factor; existing atoms are divided out first.
  /// Returns the scalar and atom exponents such that p = scalar * prod atom^exp.
  struct Factored {
    GScalar scalar;
    DenExp exps{};
  };
  Factored factor_over_atoms(const Poly& p) const;

  /// Registers `p` (made monic) as an atom if not present; returns its index.
  int register_atom(Poly p) const;

 private:
  struct Atom {
    Poly poly;
    std::vector<Poly> diffs;
    mutable std::deque<Poly> powers;  // powers[e] = poly^e; deque keeps references stable
  };

  int dim_;
  bool radical_;
  std::uint32_t coord_mask_ = 0;
  mutable std::deque<Atom> atoms_;
  mutable std::recursive_mutex mutex_;
};

}  // namespace qsym::exact
