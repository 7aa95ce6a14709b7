#include "qsym/model/model.hpp"

#include "qsym/exact/errors.hpp"

namespace qsym::model {

using exact::GScalar;
using exact::Monomial;
using exact::RatFunc;
using exact::Var;

std::string to_string(Kind k) { return k == Kind::KC ? "kc" : "dso"; }

Kind parse_kind(const std::string& s) {
  if (s == "kc") return Kind::KC;
  if (s == "dso") return Kind::DSO;
  throw InvalidArgument("unknown model '" + s + "' (expected kc or dso)");
}

void ModelParams::validate() const {
  if (dim > exact::kMaxDim) throw InvalidArgument("dimension exceeds " + std::to_string(exact::kMaxDim));
  if (kind == Kind::KC) {
    if (dim < 3) throw InvalidArgument("KC model requires N >= 3");
  } else {
    if (dim < 2) throw InvalidArgument("DSO model requires N >= 2");
    if (split < 1 || split > dim - 1) throw InvalidArgument("DSO split n must satisfy 1 <= n <= N-1");
  }
}

std::string ModelParams::label() const {
  if (kind == Kind::KC) return "kc N=" + std::to_string(dim);
  return "dso N=" + std::to_string(dim) + " n=" + std::to_string(split);
}

namespace {

Poly block_radicand(int first, int last) {
  Poly s;
  for (int a = first; a <= last; ++a) s += Poly::coord(a - 1, 2);
  return s;
}

RadExt scalar(const Ring& ring, long num, long den = 1) {
  return RadExt::constant(ring, GScalar::rational(num, den));
}

}  // namespace

Model::Model(ModelParams params) : params_(params) {
  params_.validate();
  ring_ = std::make_unique<Ring>(params_.dim, params_.kind == Kind::KC);
  if (params_.kind == Kind::KC) {
    ring_->register_atom(block_radicand(1, params_.dim - 1));
  } else {
    ring_->register_atom(block_radicand(1, params_.split));
    ring_->register_atom(block_radicand(params_.split + 1, params_.dim));
  }
}

void Model::check_axis(int axis) const {
  if (axis < 1 || axis > params_.dim) {
    throw InvalidArgument("axis " + std::to_string(axis) + " out of range 1.." + std::to_string(params_.dim));
  }
}

RadExt Model::coord(int axis) const {
  check_axis(axis);
  return RadExt::coord(*ring_, axis - 1);
}

RadExt Model::radius() const { return RadExt::radical(*ring_); }

RadExt Model::param(Var v) const { return RadExt::poly(*ring_, Poly::var(v)); }

RadExt Model::chi1() const {
  if (params_.kind != Kind::KC) throw InvalidArgument("chi1 belongs to the KC model");
  const RadExt r = radius();
  return (r * (r + coord(params_.dim))).inverse();
}

RadExt Model::chi2() const {
  if (params_.kind != Kind::KC) throw InvalidArgument("chi2 belongs to the KC model");
  const RadExt r = radius();
  return (r * (r - coord(params_.dim))).inverse();
}

RadExt Model::phi1() const {
  if (params_.kind != Kind::DSO) throw InvalidArgument("phi1 belongs to the DSO model");
  return RadExt(RatFunc::reciprocal(*ring_, block_radicand(1, params_.split)));
}

RadExt Model::phi2() const {
  if (params_.kind != Kind::DSO) throw InvalidArgument("phi2 belongs to the DSO model");
  return RadExt(RatFunc::reciprocal(*ring_, block_radicand(params_.split + 1, params_.dim)));
}

DiffOp Model::momentum(int axis) const {
  check_axis(axis);
  return DiffOp::momentum(*ring_, axis - 1);
}

DiffOp Model::angular(int i, int j) const {
  check_axis(i);
  check_axis(j);
  return coord(i) * momentum(j) - coord(j) * momentum(i);
}

DiffOp Model::angular_casimir(int first, int last) const {
  DiffOp sum(*ring_);
  for (int i = first; i <= last; ++i) {
    for (int j = i + 1; j <= last; ++j) {
      const DiffOp l = angular(i, j);
      sum += l * l;
    }
  }
  return sum;
}

const DiffOp& Model::hamiltonian() const {
  if (!h_) h_ = build_hamiltonian();
  return *h_;
}

DiffOp Model::build_hamiltonian() const {
  DiffOp kinetic(*ring_);
  for (int a = 1; a <= params_.dim; ++a) {
    const DiffOp p = momentum(a);
    kinetic += p * p;
  }
  DiffOp h = GScalar::rational(1, 2) * kinetic;
  RadExt potential;
  if (params_.kind == Kind::KC) {
    potential = -(param(Var::c0) * radius().inverse()) + param(Var::c1) * chi1() + param(Var::c2) * chi2();
  } else {
    const RadExt w2 = param(Var::omega) * param(Var::omega);
    potential = scalar(*ring_, 1, 2) * w2 * RadExt::poly(*ring_, ring_->radicand()) + param(Var::c1) * phi1() +
                param(Var::c2) * phi2();
  }
  return h + DiffOp::multiplication(potential);
}

DiffOp Model::hamiltonian_block(int block) const {
  if (params_.kind != Kind::DSO) throw InvalidArgument("Hamiltonian blocks belong to the DSO model");
  if (block != 1 && block != 2) throw InvalidArgument("block must be 1 or 2");
  const int first = block == 1 ? 1 : params_.split + 1;
  const int last = block == 1 ? params_.split : params_.dim;
  DiffOp kinetic(*ring_);
  for (int a = first; a <= last; ++a) {
    const DiffOp p = momentum(a);
    kinetic += p * p;
  }
  const RadExt w2 = param(Var::omega) * param(Var::omega);
  const RadExt radial = RadExt::poly(*ring_, block_radicand(first, last));
  const RadExt singular = block == 1 ? param(Var::c1) * phi1() : param(Var::c2) * phi2();
  return GScalar::rational(1, 2) * kinetic + DiffOp::multiplication(scalar(*ring_, 1, 2) * w2 * radial + singular);
}

DiffOp Model::J2() const {
  if (params_.kind != Kind::KC) throw InvalidArgument("J^2 belongs to the KC model");
  return angular_casimir(1, params_.dim - 1);
}

DiffOp Model::J2_block() const {
  if (params_.kind != Kind::DSO) throw InvalidArgument("J_(2) belongs to the DSO model");
  return angular_casimir(1, params_.split);
}

DiffOp Model::K2_block() const {
  if (params_.kind != Kind::DSO) throw InvalidArgument("K_(2) belongs to the DSO model");
  return angular_casimir(params_.split + 1, params_.dim);
}

DiffOp Model::runge_lenz(int j) const {
  if (params_.kind != Kind::KC) throw InvalidArgument("the Runge-Lenz vector belongs to the KC model");
  check_axis(j);
  DiffOp sum(*ring_);
  for (int i = 1; i <= params_.dim; ++i) {
    if (i == j) continue;
    const DiffOp p = momentum(i);
    sum += angular(j, i) * p - p * angular(i, j);
  }
  const RadExt coulomb = param(Var::c0) * coord(j) * radius().inverse();
  return GScalar::rational(1, 2) * sum - DiffOp::multiplication(coulomb);
}

const DiffOp& Model::A() const {
  if (!a_) a_ = build_A();
  return *a_;
}

const DiffOp& Model::B() const {
  if (!b_) b_ = build_B();
  return *b_;
}

DiffOp Model::build_A() const {
  const int n = params_.dim;
  if (params_.kind == Kind::KC) {
    const RadExt s = RadExt::poly(*ring_, ring_->radicand());
    const RadExt pot = scalar(*ring_, 2) * s * (param(Var::c1) * chi1() + param(Var::c2) * chi2());
    return angular_casimir(1, n) + DiffOp::multiplication(pot);
  }
  // -(hbar^2/4) { sum x_i^2 d_j^2 - sum x_i x_j d_i d_j - (N-1) sum x_i d_i } + potential part
  DiffOp braces(*ring_);
  const RadExt s = RadExt::poly(*ring_, ring_->radicand());
  for (int j = 1; j <= n; ++j) braces += s * DiffOp::partial(*ring_, j - 1, 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      braces -= (coord(i) * coord(j)) * (DiffOp::partial(*ring_, i - 1) * DiffOp::partial(*ring_, j - 1));
    }
  }
  for (int i = 1; i <= n; ++i) {
    braces -= (scalar(*ring_, n - 1) * coord(i)) * DiffOp::partial(*ring_, i - 1);
  }
  const RadExt hbar2 = param(Var::hbar) * param(Var::hbar);
  const RadExt s1 = RadExt::poly(*ring_, block_radicand(1, params_.split));
  const RadExt s2 = RadExt::poly(*ring_, block_radicand(params_.split + 1, n));
  const RadExt pot = scalar(*ring_, 1, 2) * (param(Var::c1) * phi1() + param(Var::c2) * phi2()) * (s1 + s2);
  return (scalar(*ring_, -1, 4) * hbar2) * braces + DiffOp::multiplication(pot);
}

DiffOp Model::build_B() const {
  const int n = params_.dim;
  if (params_.kind == Kind::KC) {
    const RadExt r = radius();
    const RadExt xn = coord(n);
    const RadExt pot = param(Var::c1) * (r - xn) * chi1() - param(Var::c2) * (r + xn) * chi2();
    return DiffOp::multiplication(pot) - runge_lenz(n);
  }
  DiffOp kinetic(*ring_);
  for (int a = 1; a <= n; ++a) {
    const DiffOp p = momentum(a);
    if (a <= params_.split) {
      kinetic += p * p;
    } else {
      kinetic -= p * p;
    }
  }
  const RadExt w2 = param(Var::omega) * param(Var::omega);
  const RadExt s1 = RadExt::poly(*ring_, block_radicand(1, params_.split));
  const RadExt s2 = RadExt::poly(*ring_, block_radicand(params_.split + 1, n));
  const RadExt pot =
      scalar(*ring_, 1, 2) * w2 * (s1 - s2) + param(Var::c1) * phi1() - param(Var::c2) * phi2();
  return GScalar::rational(1, 2) * kinetic + DiffOp::multiplication(pot);
}

std::vector<std::vector<std::pair<int, int>>> Model::lie_sectors() const {
  auto pairs = [](int first, int last) {
    std::vector<std::pair<int, int>> out;
    for (int i = first; i <= last; ++i) {
      for (int j = i + 1; j <= last; ++j) out.emplace_back(i, j);
    }
    return out;
  };
  if (params_.kind == Kind::KC) return {pairs(1, params_.dim - 1)};
  return {pairs(1, params_.split), pairs(params_.split + 1, params_.dim)};
}

}  // namespace qsym::model
