#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cbb/errors.hpp"
#include "cbb/monomial.hpp"
#include "cbb/rational.hpp"
#include "cbb/variables.hpp"

namespace cbb {

/// Sparse multivariate polynomial with coefficients in C.
///
/// C must provide +, -, *, unary -, == and a free `is_zero(const C&)`.
/// Stored coefficients are never zero, so the zero polynomial is the empty
/// map and equality of canonical forms is structural equality.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;
  using term_map = std::map<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarsPtr vars, const C& c) {
    Polynomial p(vars);
    p.add_term(Monomial::one(p.nvars()), c);
    return p;
  }
  static Polynomial term(VarsPtr vars, Monomial m, const C& c) {
    Polynomial p(std::move(vars));
    if (m.nvars() != p.nvars()) throw DomainError("monomial arity mismatch");
    p.add_term(m, c);
    return p;
  }
  static Polynomial variable(VarsPtr vars, std::size_t index, const C& one) {
    const std::size_t n = vars->size();
    return term(std::move(vars), Monomial::variable(n, index), one);
  }

  const VarsPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  const C* coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Monomial::exponent_type degree_in(std::size_t var) const {
    Monomial::exponent_type d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  void add_term(const Monomial& m, const C& c) {
    if (is_zero_coeff(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  void erase_term(const Monomial& m) { terms_.erase(m); }

  /// *this += c * m * g.
  void add_scaled(const C& c, const Monomial& m, const Polynomial& g) {
    require_same_vars(vars_, g.vars_, "polynomial arithmetic");
    if (is_zero_coeff(c)) return;
    for (const auto& [gm, gc] : g.terms_) add_term(m * gm, c * gc);
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_vars(vars_, o.vars_, "polynomial addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_vars(vars_, o.vars_, "polynomial subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  Polynomial scaled(const C& s) const {
    Polynomial r(vars_);
    if (is_zero_coeff(s)) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  Polynomial mul_term(const Monomial& mono, const C& s) const {
    Polynomial r(vars_);
    r.add_scaled(s, mono, *this);
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a.vars_, b.vars_, "polynomial multiplication");
    Polynomial r(a.vars_);
    for (const auto& [m, c] : a.terms_) r.add_scaled(c, m, b);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
  }

  /// Applies f to every coefficient; zero images are dropped.
  template <class F>
  auto map_coefficients(F&& f) const -> Polynomial<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    Polynomial<D> r(vars_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

 private:
  static bool is_zero_coeff(const C& c) {
    using cbb::is_zero;
    return is_zero(c);
  }

  VarsPtr vars_;
  term_map terms_;
};

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

using QPoly = Polynomial<Rational>;

/// Evaluates every variable of p at the given point.
Rational evaluate(const QPoly& p, const std::vector<Rational>& point);

}  // namespace cbb
