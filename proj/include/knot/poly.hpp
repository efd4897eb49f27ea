#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

namespace knot {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponents are stored as integer counts of quarter units: a stored
/// exponent e stands for v^(e/4). Whole powers are multiples of 4.
inline constexpr int kQuarter = 4;

/*
  Single-variable Laurent polynomial with integer coefficients.

  The term map never holds a zero coefficient, so two polynomials are
  equal exactly when their maps are equal. The variable carries no name;
  rendering picks one.
*/
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  /// coeff * v^(quarter_exponent/4)
  static LaurentPoly monomial(const Integer& coeff, int quarter_exponent);
  /// v^power for a whole power.
  static LaurentPoly power(int whole_power);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Lowest / highest stored exponent in quarter units. Undefined for zero.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  const Integer& leading_coefficient() const { return terms_.rbegin()->second; }
  const Integer& trailing_coefficient() const { return terms_.begin()->second; }

  Integer coefficient(int quarter_exponent) const;
  bool has_integral_exponents() const;

  /// Multiplies by v^(quarter_shift/4).
  LaurentPoly shifted(int quarter_shift) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Integer power, n >= 0.
  LaurentPoly pow(unsigned n) const;

  /// Debug form "{e:c, ...}" in quarter units; user-facing text lives in render.hpp.
  std::string debug_string() const;

 private:
  void add_term(int quarter_exponent, const Integer& coeff);
  Terms terms_;
};

enum class ArithOp { Add, Subtract, Multiply };

LaurentPoly poly_arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op);

/// Monomial substitution v -> sign * v^(quarter_scale/4).
struct Substitution {
  int sign = 1;           // +1 or -1
  int quarter_scale = 4;  // nonzero; 4 is the identity
};

/// Throws NonIntegralSignPower when sign is -1 and a term has a
/// non-integral exponent, NonRepresentableExponent when a scaled exponent
/// is not a multiple of a quarter.
LaurentPoly poly_substitute(const LaurentPoly& p, Substitution rule);

/// Witness for p = sign * v^shift * q with a whole shift.
struct DotWitness {
  int sign = 1;
  int shift = 0;  // whole units
  friend bool operator==(const DotWitness&, const DotWitness&) = default;
};

std::optional<DotWitness> poly_dot_equals(const LaurentPoly& p, const LaurentPoly& q);

/// Representative of the dot-class: lowest exponent 0, positive leading
/// coefficient. Zero maps to zero.
LaurentPoly dot_canonical(const LaurentPoly& p);

/// Exact evaluation; requires integral exponents and a nonzero value when
/// negative exponents are present.
Rational poly_evaluate(const LaurentPoly& p, const Rational& value);

/// Exact quotient p / q in the Laurent ring. Throws InexactDivision when q
/// does not divide p (or q is zero).
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace knot
