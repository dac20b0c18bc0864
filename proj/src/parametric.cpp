#include "cbb/parametric.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "cbb/errors.hpp"

namespace cbb {

Condition::Condition(Kind kind, std::vector<Specialization> pts) : kind_(kind), points_(std::move(pts)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Condition Condition::points(std::vector<Specialization> pts) {
  return Condition(Kind::Points, std::move(pts));
}

Condition Condition::complement(std::vector<Specialization> excluded) {
  return Condition(Kind::Complement, std::move(excluded));
}

bool Condition::contains(const Specialization& sigma) const {
  const bool listed = std::binary_search(points_.begin(), points_.end(), sigma);
  return is_points() ? listed : !listed;
}

std::optional<ColoredPolynomial> color_polynomial(const FPoly& p, const Specialization& sigma) {
  ColoredPolynomial out{p, {}, sigma};
  bool any_red = false;
  for (const auto& [m, c] : p) {
    const bool red = !c.evaluate(sigma).is_zero();
    out.colors.emplace(m, red ? Color::Red : Color::Green);
    any_red = any_red || red;
  }
  if (!any_red) return std::nullopt;
  return out;
}

// --- rational roots ------------------------------------------------------------

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

Rational horner(const std::vector<Rational>& c, const Rational& t) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// c / (t - r), assuming r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  std::vector<Rational> q(c.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = c.size() - 1; i > 0; --i) {
    carry = carry * r + c[i];
    q[i - 1] = carry;
  }
  return q;
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coefficients,
                                     std::vector<Rational>* cofactor) {
  std::vector<Rational> c(coefficients);
  trim(c);
  if (c.empty()) throw DomainError("roots of the zero polynomial");
  std::vector<Rational> roots;
  bool zero_root = false;
  while (c.size() > 1 && c.front().is_zero()) {
    c.erase(c.begin());
    zero_root = true;
  }
  if (zero_root) roots.emplace_back(0);

  while (c.size() > 1) {
    // Integer coefficients for the rational root test.
    mpz_class lcm_den = 1;
    for (const auto& a : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.denominator().get_mpz_t());
    const mpz_class lead = mpq_class(c.back().value() * lcm_den).get_num();
    const mpz_class constant = mpq_class(c.front().value() * lcm_den).get_num();
    std::optional<Rational> found;
    for (const auto& p : positive_divisors(constant)) {
      for (const auto& q : positive_divisors(lead)) {
        for (int s : {1, -1}) {
          const Rational t(mpz_class(s * p), q);
          if (horner(c, t).is_zero()) found = t;
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
    roots.push_back(*found);
    c = deflate(c, *found);
    while (c.size() > 1 && horner(c, *found).is_zero()) c = deflate(c, *found);
  }
  std::sort(roots.begin(), roots.end());
  if (cofactor) *cofactor = c;
  return roots;
}

// --- rational variety ----------------------------------------------------------

namespace {

QPoly substitute(const QPoly& p, std::size_t var, const Rational& value) {
  QPoly out(p.vars());
  for (const auto& [m, c] : p) {
    Monomial rest(m);
    rest[var] = 0;
    out.add_term(rest, c * value.pow(m[var]));
  }
  return out;
}

bool involves_only(const QPoly& p, std::size_t var) {
  for (const auto& [m, c] : p)
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (i != var && m[i]) return false;
  return true;
}

void solve(std::vector<QPoly> F, std::vector<std::optional<Rational>>& point,
           std::vector<Specialization>& out, const TermOrder& lex) {
  std::erase_if(F, [](const QPoly& f) { return f.is_zero(); });
  if (F.empty()) {
    if (std::any_of(point.begin(), point.end(), [](const auto& v) { return !v; }))
      throw NotZeroDimensional("parameter ideal has infinitely many points");
    Specialization s;
    for (const auto& v : point) s.point.push_back(*v);
    out.push_back(std::move(s));
    return;
  }
  const GroebnerBasis G = reduced_groebner_basis(F, lex);
  if (G.is_unit()) return;

  // The smallest unassigned variable in lex: its eliminant leads the basis.
  std::size_t var = point.size();
  while (var > 0 && point[var - 1]) --var;
  if (var == 0) throw DomainError("nonconstant relation with every parameter assigned");
  --var;

  const auto it = std::find_if(G.generators.begin(), G.generators.end(),
                               [&](const QPoly& g) { return involves_only(g, var); });
  if (it == G.generators.end()) throw NotZeroDimensional("parameter ideal has infinitely many points");

  std::vector<Rational> dense(it->degree_in(var) + 1, Rational(0));
  for (const auto& [m, c] : *it) dense[m[var]] = c;
  std::vector<Rational> rest;
  const auto roots = rational_roots(dense, &rest);
  if (rest.size() > 1) {
    QPoly q(it->vars());
    for (std::size_t d = 0; d < rest.size(); ++d)
      q.add_term(Monomial::variable(it->nvars(), var, static_cast<Monomial::exponent_type>(d)), rest[d]);
    auto with_q = G.generators;
    with_q.push_back(q);
    if (!reduced_groebner_basis(with_q, lex).is_unit())
      throw NonRationalPoint("parameter variety has a point with an irrational coordinate");
  }
  for (const auto& r : roots) {
    std::vector<QPoly> sub;
    for (const auto& g : G.generators) sub.push_back(substitute(g, var, r));
    point[var] = r;
    solve(std::move(sub), point, out, lex);
    point[var].reset();
  }
}

}  // namespace

std::vector<Specialization> rational_variety(const std::vector<ParamPoly>& Gp, const VarsPtr& params) {
  for (const auto& g : Gp) require_same_vars(g.vars(), params, "rational variety");
  std::vector<Specialization> out;
  std::vector<std::optional<Rational>> point(params->size());
  solve(Gp, point, out, TermOrder::lex(params->size()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- conditional bases ---------------------------------------------------------

std::vector<FPoly> conditional_groebner_basis(const std::vector<FPoly>& Fp,
                                              const Specialization& sigma, const TermOrder& ord) {
  return buchberger(Fp, ord, LiveAt{&sigma});
}

ConditionalBorderBasis conditional_border_basis(const std::vector<FPoly>& Fp,
                                                const Specialization& sigma, const TermOrder& ord) {
  const LiveAt live{&sigma};
  const auto G = conditional_groebner_basis(Fp, sigma, ord);
  if (G.empty()) throw NotZeroDimensional("specialized ideal is zero");
  const std::size_t n = ord.nvars();
  std::vector<Monomial> leads;
  for (const auto& g : G) leads.push_back(live_lead(g, ord, live)->monomial);
  OrderIdeal O = complement_of_monomial_ideal(leads, n);
  const auto set = border_of(O);
  std::vector<Monomial> border(set.begin(), set.end());
  std::sort(border.begin(), border.end(), OrderLess{&ord});
  auto elements = build_border_elements(G, border, O, ord, live);
  return ConditionalBorderBasis{std::move(O), std::move(elements), std::move(border)};
}

ParamBorderBasis to_scalar_basis(const ConditionalBorderBasis& B) {
  if (B.marks.size() != B.elements.size()) throw DomainError("border basis marks are missing");
  ParamBorderBasis out{B.order_ideal, {}, B.marks};
  for (std::size_t i = 0; i < B.elements.size(); ++i) {
    if (!B.elements[i].coefficient(B.marks[i])) throw DomainError("element lacks its mark term");
    out.elements.push_back(primitive_param_form(B.elements[i], B.marks[i]));
  }
  return out;
}

}  // namespace cbb
