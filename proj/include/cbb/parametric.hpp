#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cbb/border_basis.hpp"
#include "cbb/groebner.hpp"
#include "cbb/param_poly.hpp"

namespace cbb {

/// A set of specializations: finitely many points, or everything except
/// finitely many points. Point lists are kept sorted and duplicate-free.
class Condition {
 public:
  enum class Kind { Points, Complement };

  static Condition points(std::vector<Specialization> pts);
  static Condition complement(std::vector<Specialization> excluded);

  Kind kind() const { return kind_; }
  bool is_points() const { return kind_ == Kind::Points; }
  /// The listed points (members, or excluded ones for a complement).
  const std::vector<Specialization>& listed() const { return points_; }
  bool contains(const Specialization& sigma) const;

  friend bool operator==(const Condition&, const Condition&) = default;

 private:
  Condition(Kind kind, std::vector<Specialization> pts);
  Kind kind_;
  std::vector<Specialization> points_;
};

enum class Color { Red, Green };

struct ColoredPolynomial {
  FPoly body;
  std::map<Monomial, Color> colors;
  Specialization sigma;
};

/// Red where the coefficient survives sigma, Green where it vanishes;
/// nullopt when every term is Green.
std::optional<ColoredPolynomial> color_polynomial(const FPoly& p, const Specialization& sigma);

/// Liveness under a point: a coefficient counts iff it is nonzero there.
struct LiveAt {
  const Specialization* sigma;
  bool operator()(const ParamFraction& c) const { return !c.evaluate(*sigma).is_zero(); }
  bool operator()(const ParamPoly& c) const { return !evaluate(c, *sigma).is_zero(); }
};

/// All rational points of a zero-dimensional ideal of k[U]. Throws
/// NonRationalPoint when some point has an irrational coordinate and
/// NotZeroDimensional when the variety is infinite. Sorted ascending.
std::vector<Specialization> rational_variety(const std::vector<ParamPoly>& Gp, const VarsPtr& params);

/// Rational roots of a univariate polynomial given densely (c[i] is the
/// coefficient of t^i), ascending and without repetition. `cofactor`
/// receives the polynomial left after removing every rational linear factor.
std::vector<Rational> rational_roots(const std::vector<Rational>& coefficients,
                                     std::vector<Rational>* cofactor = nullptr);

/// Reduced Groebner basis over k(U) whose zero tests are made at sigma:
/// sigma applied to it is the reduced Groebner basis of sigma(<Fp>).
std::vector<FPoly> conditional_groebner_basis(const std::vector<FPoly>& Fp,
                                              const Specialization& sigma, const TermOrder& ord);

using ConditionalBorderBasis = BasicBorderBasis<ParamFraction>;
using ParamBorderBasis = BasicBorderBasis<ParamPoly>;

/// Border basis over k(U) that specializes at sigma to the border basis of
/// sigma(<Fp>) for the standard monomials of ord. Terms vanishing at sigma
/// may remain outside O.
ConditionalBorderBasis conditional_border_basis(const std::vector<FPoly>& Fp,
                                                const Specialization& sigma, const TermOrder& ord);

/// Clears denominators and contents element-wise, keeping marks.
ParamBorderBasis to_scalar_basis(const ConditionalBorderBasis& B);

}  // namespace cbb
