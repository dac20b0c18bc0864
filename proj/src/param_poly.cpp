#include "cbb/param_poly.hpp"

#include <map>

#include "cbb/errors.hpp"

namespace cbb {

namespace {

ParamPoly one_like(const ParamPoly& p) { return ParamPoly::constant(p.vars(), Rational(1)); }

/// Coefficients of p viewed as a univariate polynomial in variable v.
std::map<Monomial::exponent_type, ParamPoly> coefficients_in(const ParamPoly& p, std::size_t v) {
  std::map<Monomial::exponent_type, ParamPoly> out;
  for (const auto& [m, c] : p) {
    Monomial rest(m);
    rest[v] = 0;
    auto it = out.try_emplace(m[v], ParamPoly(p.vars())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

ParamPoly coefficient_in(const ParamPoly& p, std::size_t v, Monomial::exponent_type degree) {
  ParamPoly out(p.vars());
  for (const auto& [m, c] : p) {
    if (m[v] != degree) continue;
    Monomial rest(m);
    rest[v] = 0;
    out.add_term(rest, c);
  }
  return out;
}

ParamPoly content_in(const ParamPoly& p, std::size_t v) {
  ParamPoly g(p.vars());
  for (const auto& [deg, c] : coefficients_in(p, v)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

ParamPoly primitive_part_in(const ParamPoly& p, std::size_t v) {
  return make_monic(exact_quotient(p, content_in(p, v)));
}

/// A pseudo-remainder of a by b in variable v: lc(b)^k * a mod b.
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, std::size_t v) {
  const auto db = b.degree_in(v);
  const ParamPoly lcb = coefficient_in(b, v, db);
  while (!a.is_zero()) {
    const auto da = a.degree_in(v);
    if (da < db) break;
    const ParamPoly lca = coefficient_in(a, v, da);
    ParamPoly next = a * lcb;
    next -= lca * b * ParamPoly::term(a.vars(), Monomial::variable(a.nvars(), v, da - db), Rational(1));
    a = std::move(next);
  }
  return a;
}

}  // namespace

std::string to_string(const Specialization& sigma) {
  if (sigma.size() == 1) return sigma.point[0].str();
  std::string s = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ", ";
    s += sigma.point[i].str();
  }
  return s + ")";
}

Rational lex_leading_coefficient(const ParamPoly& p) {
  if (p.is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return p.terms().rbegin()->second;
}

ParamPoly make_monic(const ParamPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(lex_leading_coefficient(p).inverse());
}

ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b) {
  require_same_vars(a.vars(), b.vars(), "exact division");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& [bm, bc] = *b.terms().rbegin();
  if (b.size() == 1 && bm.is_one()) return a.scaled(bc.inverse());
  ParamPoly q(a.vars());
  ParamPoly r(a);
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms().rbegin();
    if (!bm.divides(rm)) throw DomainError("polynomial division is not exact");
    const Monomial tm = bm.quotient_of(rm);
    const Rational tc = rc / bc;
    q.add_term(tm, tc);
    r.add_scaled(-tc, tm, b);
  }
  return q;
}

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
  require_same_vars(a.vars(), b.vars(), "gcd");
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return one_like(a);

  std::size_t v = 0;
  while (a.degree_in(v) == 0 && b.degree_in(v) == 0) ++v;
  if (a.degree_in(v) == 0) return poly_gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);

  const ParamPoly ca = content_in(a, v);
  const ParamPoly cb = content_in(b, v);
  ParamPoly pa = make_monic(exact_quotient(a, ca));
  ParamPoly pb = make_monic(exact_quotient(b, cb));
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    ParamPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_part_in(r, v);
  }
  return make_monic(poly_gcd(ca, cb) * pa);
}

ParamPoly poly_lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly(a.vars());
  return make_monic(exact_quotient(a * b, poly_gcd(a, b)));
}

// --- ParamFraction ------------------------------------------------------------

ParamFraction::ParamFraction(VarsPtr params)
    : num_(params), den_(ParamPoly::constant(params, Rational(1))) {}

ParamFraction::ParamFraction(const Rational& c, VarsPtr params)
    : num_(ParamPoly::constant(params, c)), den_(ParamPoly::constant(params, Rational(1))) {}

ParamFraction::ParamFraction(ParamPoly numerator)
    : num_(std::move(numerator)), den_(ParamPoly::constant(num_.vars(), Rational(1))) {}

ParamFraction::ParamFraction(ParamPoly numerator, ParamPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_vars(num_.vars(), den_.vars(), "parameter fraction");
  normalize();
}

void ParamFraction::normalize() {
  if (den_.is_zero()) throw DomainError("parameter fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = one_like(num_);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.terms().begin()->second.inverse());
    den_ = one_like(num_);
    return;
  }
  if (!num_.is_constant()) {
    const ParamPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : den_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (lex_leading_coefficient(den_).sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
  }
}

Rational ParamFraction::evaluate(const Specialization& sigma) const {
  const Rational d = cbb::evaluate(den_, sigma);
  if (d.is_zero()) throw PoleError("parameter fraction has a pole at " + to_string(sigma));
  return cbb::evaluate(num_, sigma) / d;
}

ParamFraction ParamFraction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in k(U)");
  return ParamFraction(den_, num_);
}

ParamFraction operator+(const ParamFraction& a, const ParamFraction& b) {
  if (a.is_polynomial() && b.is_polynomial())
    return ParamFraction(a.num_ + b.num_, a.den_, ParamFraction::Normalized{});
  if (a.den_ == b.den_) return ParamFraction(a.num_ + b.num_, a.den_);
  return ParamFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamFraction operator-(const ParamFraction& a) {
  return ParamFraction(-a.num_, a.den_, ParamFraction::Normalized{});
}

ParamFraction operator-(const ParamFraction& a, const ParamFraction& b) { return a + (-b); }

ParamFraction operator*(const ParamFraction& a, const ParamFraction& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    ParamPoly n = a.num_ * b.num_;
    if (n.is_zero()) return ParamFraction(a.vars());
    return ParamFraction(std::move(n), a.den_, ParamFraction::Normalized{});
  }
  return ParamFraction(a.num_ * b.num_, a.den_ * b.den_);
}

ParamFraction operator/(const ParamFraction& a, const ParamFraction& b) { return a * b.inverse(); }

// --- evaluation and conversion ---------------------------------------------------

Rational evaluate(const QPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.nvars()) throw DomainError("evaluation point has the wrong arity");
  Rational total;
  for (const auto& [m, c] : p) {
    Rational t = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m[i]) t *= point[i].pow(m[i]);
    total += t;
  }
  return total;
}

Rational evaluate(const ParamPoly& p, const Specialization& sigma) {
  return evaluate(p, sigma.point);
}

PPoly split_params(const QPoly& flat, const Ring& ring) {
  require_same_vars(flat.vars(), ring.all, "parameter split");
  const std::size_t n = ring.n(), m = ring.m();
  PPoly out(ring.main);
  for (const auto& [mono, c] : flat) {
    Monomial x(n), u(m);
    for (std::size_t i = 0; i < n; ++i) x[i] = mono[i];
    for (std::size_t j = 0; j < m; ++j) u[j] = mono[n + j];
    out.add_term(x, ParamPoly::term(ring.params, u, c));
  }
  return out;
}

QPoly flatten_params(const PPoly& p, const Ring& ring) {
  require_same_vars(p.vars(), ring.main, "parameter flatten");
  const std::size_t n = ring.n(), m = ring.m();
  QPoly out(ring.all);
  for (const auto& [x, coeff] : p)
    for (const auto& [u, c] : coeff) {
      Monomial mono(n + m);
      for (std::size_t i = 0; i < n; ++i) mono[i] = x[i];
      for (std::size_t j = 0; j < m; ++j) mono[n + j] = u[j];
      out.add_term(mono, c);
    }
  return out;
}

FPoly lift_to_fractions(const PPoly& p) {
  return p.map_coefficients([](const ParamPoly& c) { return ParamFraction(c); });
}

bool is_parameter_only(const QPoly& flat, const Ring& ring) {
  for (const auto& [mono, c] : flat)
    for (std::size_t i = 0; i < ring.n(); ++i)
      if (mono[i]) return false;
  return true;
}

QPoly specialize_params(const PPoly& p, const Specialization& sigma) {
  return p.map_coefficients([&](const ParamPoly& c) { return evaluate(c, sigma); });
}

QPoly specialize_params(const FPoly& p, const Specialization& sigma) {
  return p.map_coefficients([&](const ParamFraction& c) { return c.evaluate(sigma); });
}

QPoly specialize_params(const QPoly& flat, const Ring& ring, const Specialization& sigma) {
  if (sigma.size() != ring.m()) throw DomainError("specialization has the wrong arity");
  return specialize_params(split_params(flat, ring), sigma);
}

PPoly primitive_param_form(const FPoly& p, const std::optional<Monomial>& sign_reference) {
  PPoly out(p.vars());
  if (p.is_zero()) return out;
  const VarsPtr& params = p.begin()->second.vars();
  ParamPoly denominators = ParamPoly::constant(params, Rational(1));
  for (const auto& [m, c] : p) denominators = poly_lcm(denominators, c.denominator());

  std::vector<std::pair<Monomial, ParamPoly>> cleared;
  ParamPoly content(params);
  for (const auto& [m, c] : p) {
    ParamPoly q = c.numerator() * exact_quotient(denominators, c.denominator());
    content = poly_gcd(content, q);
    cleared.emplace_back(m, std::move(q));
  }
  for (auto& [m, q] : cleared) out.add_term(m, exact_quotient(q, content));

  const Monomial ref = sign_reference.value_or(p.terms().rbegin()->first);
  const ParamPoly* rc = out.coefficient(ref);
  if (!rc) throw DomainError("sign reference monomial is not in the support");
  if (lex_leading_coefficient(*rc).sign() < 0) out = -out;
  return out;
}

}  // namespace cbb
