#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cbb/polynomial.hpp"
#include "cbb/rational.hpp"
#include "cbb/term_order.hpp"
#include "cbb/variables.hpp"

namespace cbb {

/// Element of k[U]: a rational polynomial in the parameters.
using ParamPoly = QPoly;

/// A point of parameter space; one rational per parameter.
struct Specialization {
  std::vector<Rational> point;

  std::size_t size() const { return point.size(); }
  friend bool operator==(const Specialization&, const Specialization&) = default;
  friend auto operator<=>(const Specialization&, const Specialization&) = default;
};

std::string to_string(const Specialization& sigma);

// --- k[U] content machinery -------------------------------------------------

/// gcd over Q[U], normalized to lex-leading coefficient 1 (gcd(0, 0) = 0).
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);
ParamPoly poly_lcm(const ParamPoly& a, const ParamPoly& b);
/// a / b; throws DomainError unless b divides a exactly.
ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b);
/// Lex-leading coefficient (first parameter most significant).
Rational lex_leading_coefficient(const ParamPoly& p);
/// p scaled to lex-leading coefficient 1.
ParamPoly make_monic(const ParamPoly& p);

// --- k(U) -------------------------------------------------------------------

/// Element of k(U), kept as num/den with gcd(num, den) = 1 and den an
/// integer-coefficient primitive polynomial with positive lex-leading
/// coefficient. That makes the representation unique.
class ParamFraction {
 public:
  explicit ParamFraction(VarsPtr params);
  ParamFraction(const Rational& c, VarsPtr params);
  explicit ParamFraction(ParamPoly numerator);
  ParamFraction(ParamPoly numerator, ParamPoly denominator);

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  const VarsPtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational evaluate(const Specialization& sigma) const;
  ParamFraction inverse() const;

  friend ParamFraction operator+(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator-(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator*(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator/(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator-(const ParamFraction& a);
  friend bool operator==(const ParamFraction& a, const ParamFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Normalized {};
  ParamFraction(ParamPoly num, ParamPoly den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

inline bool is_zero(const ParamFraction& f) { return f.is_zero(); }

/// Polynomial in the main variables with coefficients in k[U].
using PPoly = Polynomial<ParamPoly>;
/// Polynomial in the main variables with coefficients in k(U).
using FPoly = Polynomial<ParamFraction>;

Rational evaluate(const ParamPoly& p, const Specialization& sigma);

/// k[X ++ U] -> k[U][X].
PPoly split_params(const QPoly& flat, const Ring& ring);
/// k[U][X] -> k[X ++ U].
QPoly flatten_params(const PPoly& p, const Ring& ring);
/// k[U][X] -> k(U)[X].
FPoly lift_to_fractions(const PPoly& p);
/// True when p has no main-variable dependence (p lies in k[U]).
bool is_parameter_only(const QPoly& flat, const Ring& ring);

/// The specialization homomorphism: every coefficient evaluated at sigma.
QPoly specialize_params(const PPoly& p, const Specialization& sigma);
QPoly specialize_params(const FPoly& p, const Specialization& sigma);
/// On a flat k[X ++ U] polynomial; the result lives over the main variables.
QPoly specialize_params(const QPoly& flat, const Ring& ring, const Specialization& sigma);

/// Clears k[U] denominators and divides by the (monic) k[U]-content, then
/// fixes the sign so that the coefficient at `sign_reference` (default: the
/// lex-greatest monomial of p) has positive lex-leading coefficient.
/// The result is p times a nonzero element of k(U).
PPoly primitive_param_form(const FPoly& p, const std::optional<Monomial>& sign_reference = {});

}  // namespace cbb
