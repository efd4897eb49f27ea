#include "knot/poly.hpp"

#include "knot/error.hpp"

#include <sstream>

namespace knot {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int quarter_exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(quarter_exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::power(int whole_power) { return monomial(1, whole_power * kQuarter); }

Integer LaurentPoly::coefficient(int quarter_exponent) const {
  auto it = terms_.find(quarter_exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::has_integral_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e % kQuarter != 0) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(int quarter_shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + quarter_shift, c);
  return out;
}

void LaurentPoly::add_term(int quarter_exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(quarter_exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

std::string LaurentPoly::debug_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ", ";
    first = false;
    os << e << ':' << c;
  }
  os << '}';
  return os.str();
}

LaurentPoly poly_arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Subtract: return p - q;
    case ArithOp::Multiply: return p * q;
  }
  return {};
}

LaurentPoly poly_substitute(const LaurentPoly& p, Substitution rule) {
  if (rule.quarter_scale == 0 || (rule.sign != 1 && rule.sign != -1))
    throw std::invalid_argument("substitution needs sign +-1 and a nonzero scale");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    const long long scaled = static_cast<long long>(e) * rule.quarter_scale;
    if (scaled % kQuarter != 0)
      throw KnotError(ErrorKind::NonRepresentableExponent,
                      "exponent " + std::to_string(e) + "/4 does not scale to a quarter multiple");
    Integer coeff = c;
    if (rule.sign == -1) {
      if (e % kQuarter != 0)
        throw KnotError(ErrorKind::NonIntegralSignPower,
                        "cannot raise -1 to the fractional power " + std::to_string(e) + "/4");
      if ((e / kQuarter) % 2 != 0) coeff = -coeff;
    }
    out += LaurentPoly::monomial(coeff, static_cast<int>(scaled / kQuarter));
  }
  return out;
}

std::optional<DotWitness> poly_dot_equals(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    if (p.is_zero() && q.is_zero()) return DotWitness{};
    return std::nullopt;
  }
  if (p.term_count() != q.term_count()) return std::nullopt;
  const int shift = p.min_exponent() - q.min_exponent();
  if (shift % kQuarter != 0) return std::nullopt;
  int sign;
  if (p.trailing_coefficient() == q.trailing_coefficient())
    sign = 1;
  else if (p.trailing_coefficient() == -q.trailing_coefficient())
    sign = -1;
  else
    return std::nullopt;
  LaurentPoly candidate = q.shifted(shift);
  if (sign < 0) candidate = -candidate;
  if (candidate != p) return std::nullopt;
  return DotWitness{sign, shift / kQuarter};
}

LaurentPoly dot_canonical(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out = p.shifted(-p.min_exponent());
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

Rational poly_evaluate(const LaurentPoly& p, const Rational& value) {
  if (!p.has_integral_exponents())
    throw KnotError(ErrorKind::NonIntegralExponent, "evaluation needs whole exponents");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    const int n = e / kQuarter;
    if (n < 0 && value == 0) throw std::domain_error("evaluating a negative power at zero");
    Rational term = 1;
    const Rational base = n < 0 ? Rational(1) / value : value;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) term *= base;
    total += Rational(c) * term;
  }
  return total;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw KnotError(ErrorKind::InexactDivision, "division by zero polynomial");
  if (p.is_zero()) return {};
  if (q.term_count() == 1) {
    const auto& [qe, qc] = *q.terms().begin();
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
      if (c % qc != 0) throw KnotError(ErrorKind::InexactDivision, "coefficient not divisible");
      out += LaurentPoly::monomial(c / qc, e - qe);
    }
    return out;
  }
  // Long division from the top; an exact quotient lives in
  // [p.min - q.min, p.max - q.max].
  const int lowest = p.min_exponent() - q.min_exponent();
  LaurentPoly remainder = p;
  LaurentPoly quotient;
  const int q_top = q.max_exponent();
  const Integer& q_lead = q.leading_coefficient();
  while (!remainder.is_zero()) {
    const int e = remainder.max_exponent() - q_top;
    if (e < lowest) throw KnotError(ErrorKind::InexactDivision, "nonzero remainder");
    const Integer& lead = remainder.leading_coefficient();
    if (lead % q_lead != 0) throw KnotError(ErrorKind::InexactDivision, "coefficient not divisible");
    LaurentPoly term = LaurentPoly::monomial(lead / q_lead, e);
    quotient += term;
    remainder -= term * q;
  }
  return quotient;
}

}  // namespace knot
