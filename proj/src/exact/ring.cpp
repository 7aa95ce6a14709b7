#include "qsym/exact/ring.hpp"

#include "qsym/exact/errors.hpp"

namespace qsym::exact {

Ring::Ring(int dim, bool radical) : dim_(dim), radical_(radical) {
  if (dim < 1 || dim > kMaxDim) throw InvalidArgument("ring dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  for (int a = 0; a < dim; ++a) coord_mask_ |= 1u << coord_slot(a);
  Poly s;
  for (int a = 0; a < dim; ++a) s += Poly::coord(a, 2);
  register_atom(std::move(s));
}

int Ring::atom_count() const {
  std::lock_guard lock(mutex_);
  return static_cast<int>(atoms_.size());
}

const Poly& Ring::atom_power(int k, int e) const {
  std::lock_guard lock(mutex_);
  auto& powers = atoms_[static_cast<std::size_t>(k)].powers;
  while (static_cast<int>(powers.size()) <= e) {
    powers.push_back(powers.back() * atoms_[static_cast<std::size_t>(k)].poly);
  }
  return powers[static_cast<std::size_t>(e)];
}

int Ring::register_atom(Poly p) const {
  if (p.is_zero()) throw ZeroDivisor("cannot register zero as a denominator atom");
  if (p.is_constant()) throw InvalidArgument("constant denominator atom");
  p.make_monic();
  std::lock_guard lock(mutex_);
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k].poly == p) return static_cast<int>(k);
  }
  if (static_cast<int>(atoms_.size()) >= kMaxAtoms) throw ResourceCapExceeded("too many denominator atoms");
  Atom atom;
  atom.diffs.reserve(static_cast<std::size_t>(dim_));
  for (int a = 0; a < dim_; ++a) atom.diffs.push_back(p.diff(coord_slot(a)));
  atom.powers = {Poly(1), p};
  atom.poly = std::move(p);
  atoms_.push_back(std::move(atom));
  return static_cast<int>(atoms_.size()) - 1;
}

Ring::Factored Ring::factor_over_atoms(const Poly& p) const {
  if (p.is_zero()) throw ZeroDivisor("factoring the zero polynomial");
  Factored out;
  Poly rest = p;
  const int count = atom_count();
  for (int k = 0; k < count; ++k) {
    while (true) {
      auto q = rest.divide_exact(atom(k));
      if (!q) break;
      rest = std::move(*q);
      if (out.exps[static_cast<std::size_t>(k)] == 255) throw ResourceCapExceeded("atom multiplicity cap");
      ++out.exps[static_cast<std::size_t>(k)];
    }
  }
  if (rest.is_constant()) {
    out.scalar = rest.constant_term();
    return out;
  }
  out.scalar = rest.make_monic();
  const int idx = register_atom(std::move(rest));
  ++out.exps[static_cast<std::size_t>(idx)];
  return out;
}

}  // namespace qsym::exact
