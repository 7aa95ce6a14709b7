#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsym/exact/gscalar.hpp"
#include "qsym/exact/monomial.hpp"

namespace qsym::exact {

struct Term {
  Monomial mono;
  GScalar coeff;
};

/// Multivariate polynomial over the Gaussian rationals.
///
/// Terms are kept sorted in strictly decreasing graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(GScalar c);
  Poly(GScalar c, Monomial m);

  static Poly var(int slot, int power = 1) { return Poly(GScalar(1), Monomial::var(slot, power)); }
  static Poly var(Var v, int power = 1) { return var(slot(v), power); }
  static Poly coord(int axis, int power = 1) { return var(coord_slot(axis), power); }
  /// Builds from arbitrary (possibly unsorted, duplicated) terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value (zero if absent).
  GScalar constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  int degree_in(int slot) const;
  bool depends_on(int slot) const { return degree_in(slot) > 0; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const GScalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GScalar& c) { return a *= c; }
  friend Poly operator*(const GScalar& c, Poly a) { return a *= c; }
  Poly operator-() const;

  Poly times_monomial(const Monomial& m, const GScalar& c) const;
  Poly pow(int e) const;

  /// Partial derivative with respect to a variable slot.
  Poly diff(int slot) const;

  /// Exact quotient if `divisor` divides this polynomial, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// Substitutes polynomials for selected slots (slots absent from the map are kept).
  Poly substitute(const std::function<std::optional<Poly>(int slot)>& image) const;

  /// Makes the leading coefficient 1; returns the factor that was divided out.
  GScalar make_monic();

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qsym::exact
