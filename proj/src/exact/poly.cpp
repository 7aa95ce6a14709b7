#include "qsym/exact/poly.hpp"

#include <algorithm>
#include <map>

#include "qsym/exact/errors.hpp"

namespace qsym::exact {

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); }

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, GScalar(c)});
}

Poly::Poly(GScalar c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)});
}

Poly::Poly(GScalar c, Monomial m) {
  if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

GScalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return GScalar(0);
}

int Poly::degree_in(int slot) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(slot));
  return d;
}

namespace {

// Merges a and sign*b into a fresh sorted term list.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono == b[j].mono) {
      GScalar c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    } else if (grlex_less(b[j].mono, a[i].mono)) {
      out.push_back(a[i++]);
    } else {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const GScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const GScalar& c) const {
  Poly p;
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);

  struct Product {
    Monomial mono;
    std::uint32_t ia;
    std::uint32_t ib;
  };
  std::vector<Product> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (std::uint32_t i = 0; i < a.terms_.size(); ++i) {
    for (std::uint32_t j = 0; j < b.terms_.size(); ++j) {
      prods.push_back({a.terms_[i].mono * b.terms_[j].mono, i, j});
    }
  }
  std::sort(prods.begin(), prods.end(),
            [](const Product& x, const Product& y) { return grlex_less(y.mono, x.mono); });

  Poly out;
  std::size_t k = 0;
  while (k < prods.size()) {
    GScalar acc;
    const Monomial m = prods[k].mono;
    for (; k < prods.size() && prods[k].mono == m; ++k) {
      acc.add_product(a.terms_[prods[k].ia].coeff, b.terms_[prods[k].ib].coeff);
    }
    if (!acc.is_zero()) out.terms_.push_back({m, std::move(acc)});
  }
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative polynomial power");
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::diff(int slot) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const int e = t.mono.exponent(slot);
    if (e == 0) continue;
    out.push_back({t.mono.with_exponent(slot, e - 1), t.coeff * GScalar(e)});
  }
  // Lowering the same exponent in every surviving term preserves grlex order.
  Poly p;
  p.terms_ = std::move(out);
  return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw ZeroDivisor("polynomial division by zero");
  if (terms_.empty()) return Poly{};
  if (divisor.terms_.size() == 1) {
    const auto& d = divisor.terms_[0];
    Poly q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back({d.mono.quotient_of(t.mono), t.coeff / d.coeff});
    }
    return q;
  }

  const Term& lead = divisor.terms_.front();
  std::map<Monomial, GScalar, MonoGreater> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    const Monomial qm = lead.mono.quotient_of(it->first);
    GScalar qc = it->second / lead.coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const Term& d = divisor.terms_[k];
      const Monomial m = qm * d.mono;
      auto [pos, inserted] = rem.try_emplace(m);
      pos->second -= qc * d.coeff;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  Poly q;
  q.terms_ = std::move(quotient);  // generated in decreasing order
  return q;
}

Poly Poly::substitute(const std::function<std::optional<Poly>(int slot)>& image) const {
  std::array<std::optional<Poly>, kNumVars> images;
  std::uint32_t mask = 0;
  for (int s = 0; s < kNumVars; ++s) {
    images[static_cast<std::size_t>(s)] = image(s);
    if (images[static_cast<std::size_t>(s)]) mask |= 1u << s;
  }
  Poly out;
  for (const auto& t : terms_) {
    Monomial kept = t.mono;
    Poly factor(t.coeff);
    for (int s = 0; s < kNumVars; ++s) {
      const int e = t.mono.exponent(s);
      if (e == 0 || ((mask >> s) & 1u) == 0) continue;
      kept = kept.with_exponent(s, 0);
      factor = factor * images[static_cast<std::size_t>(s)]->pow(e);
    }
    out += factor.times_monomial(kept, GScalar(1));
  }
  return out;
}

GScalar Poly::make_monic() {
  if (terms_.empty()) return GScalar(1);
  GScalar lc = terms_.front().coeff;
  if (lc.is_one()) return lc;
  for (auto& t : terms_) t.coeff /= lc;
  return lc;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += t.coeff.to_string();
    } else if (t.coeff.is_one()) {
      out += t.mono.to_string();
    } else {
      out += t.coeff.to_string() + "*" + t.mono.to_string();
    }
  }
  return out;
}

}  // namespace qsym::exact
