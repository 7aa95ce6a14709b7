#include "qsym/spectra/number.hpp"

#include <algorithm>
#include <cctype>

#include "qsym/exact/errors.hpp"

namespace qsym::spectra {

namespace {

Real to_real(const mpq_class& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

std::optional<mpz_class> exact_root(const mpz_class& z) {
  if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

mpq_class parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw InvalidArgument("not a number: '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw InvalidArgument("not a number: '" + text + "'");
    const std::string exponent = text.substr(pos + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: '" + text + "'");
    }
    if (used != exponent.size() || e > 1000 || e < -1000) throw InvalidArgument("not a number: '" + text + "'");
    scale += e;
  }
  mpq_class q{mpz_class(digits, 10)};  // base 0 would read "0125" as octal
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    q /= ten_pow;
  } else {
    q *= ten_pow;
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Number::Number(const mpq_class& q) : q_(q), r_(to_real(q)) {}

Number Number::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Number(parse_decimal(text));
  const mpq_class num = parse_decimal(text.substr(0, slash));
  const mpq_class den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  return Number(mpq_class(num / den));
}

int Number::sign() const {
  if (q_) return sgn(*q_);
  return r_ > 0 ? 1 : (r_ < 0 ? -1 : 0);
}

Number Number::operator-() const {
  if (q_) return Number(mpq_class(-*q_));
  return Number(std::nullopt, -r_);
}

Number& Number::operator+=(const Number& o) {
  if (q_ && o.q_) return *this = Number(mpq_class(*q_ + *o.q_));
  q_.reset();
  r_ += o.r_;
  return *this;
}

Number& Number::operator-=(const Number& o) { return *this += -o; }

Number& Number::operator*=(const Number& o) {
  if (q_ && o.q_) return *this = Number(mpq_class(*q_ * *o.q_));
  // An exact zero annihilates a float.
  if ((q_ && *q_ == 0) || (o.q_ && *o.q_ == 0)) return *this = Number(0);
  q_.reset();
  r_ *= o.r_;
  return *this;
}

Number& Number::operator/=(const Number& o) {
  if (o.is_zero()) throw ZeroDivisor("division by zero");
  if (q_ && o.q_) return *this = Number(mpq_class(*q_ / *o.q_));
  if (q_ && *q_ == 0) return *this;
  q_.reset();
  r_ /= o.r_;
  return *this;
}

std::string Number::exact_string() const {
  if (!q_) return {};
  return q_->get_str();
}

std::string Number::decimal(int digits) const {
  if (is_zero()) return "0";
  return r_.str(digits);
}

Number sqrt(const Number& x) {
  if (x.sign() < 0) throw DomainError("square root of negative value " + x.decimal());
  if (x.exact()) {
    const auto num = exact_root(x.rational().get_num());
    const auto den = exact_root(x.rational().get_den());
    if (num && den) return Number(mpq_class(*num, *den));
  }
  return Number::from_real(boost::multiprecision::sqrt(x.real()));
}

Number abs(const Number& x) { return x.sign() < 0 ? -x : x; }

Real relative_difference(const Number& a, const Number& b) {
  const Number diff = a - b;
  if (diff.exact() && diff.is_zero()) return Real(0);
  const Real scale = std::max(boost::multiprecision::abs(a.real()), boost::multiprecision::abs(b.real()));
  const Real d = boost::multiprecision::abs(diff.real());
  return scale == 0 ? d : d / scale;
}

}  // namespace qsym::spectra
