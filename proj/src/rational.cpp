#include "sharptree/rational.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <cmath>
#include <ostream>

#include "sharptree/errors.hpp"

namespace sharptree {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class digits_to_mpz(std::string_view s) { return mpz_class(std::string(s), 10); }

mpq_class magnitude(const mpq_class& q) {
  mpq_class out;
  mpq_abs(out.get_mpq_t(), q.get_mpq_t());
  return out;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw ParseError("zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto fail = [&] { return ParseError("bad rational '" + std::string(text) + "'"); };

  mpq_class q;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d = digits_to_mpz(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(digits_to_mpz(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : digits_to_mpz(whole);
    const mpz_class f = frac.empty() ? mpz_class(0) : digits_to_mpz(frac);
    q = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(body)) throw fail();
    q = mpq_class(digits_to_mpz(body));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; step to the neighbour away from zero
  // when it is strictly closer (or equally close with an even mantissa).
  const double truncated = value_.get_d();
  if (sign() == 0 || !std::isfinite(truncated)) return truncated;
  const double away = std::nextafter(truncated, sign() > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return truncated;
  const mpq_class gap_truncated = magnitude(value_ - mpq_class(truncated));
  const mpq_class gap_away = magnitude(mpq_class(away) - value_);
  const int c = cmp(gap_away, gap_truncated);
  if (c < 0) return away;
  if (c > 0) return truncated;
  return (std::bit_cast<std::uint64_t>(truncated) & 1U) == 0 ? truncated : away;
}

Rational Rational::abs() const { return Rational(magnitude(value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sharptree
