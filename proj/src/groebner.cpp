#include "cbb/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "cbb/errors.hpp"

namespace cbb {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators) out.push_back(leading_data(g, order).monomial);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators[0].is_constant();
}

GroebnerBasis reduced_groebner_basis(const std::vector<QPoly>& F, const TermOrder& ord) {
  for (const auto& f : F)
    if (f.nvars() != ord.nvars()) throw DomainError("polynomial arity does not match term order");
  auto G = buchberger(F, ord, AlwaysLive{});
  if (G.empty()) throw DomainError("Groebner basis of the zero ideal requested");
  return GroebnerBasis{std::move(G), ord};
}

Division<Rational> divide(const QPoly& f, const std::vector<QPoly>& G, const TermOrder& ord) {
  std::vector<Divisor<Rational>> divisors;
  for (const auto& g : G) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    require_same_vars(f.vars(), g.vars(), "division");
    const auto ld = leading_data(g, ord);
    divisors.push_back({&g, ld.monomial, ld.coefficient});
  }
  Division<Rational> out;
  out.remainder = reduce_live(f, std::span<const Divisor<Rational>>(divisors), ord, AlwaysLive{},
                              &out.quotients);
  return out;
}

QPoly normal_form(const QPoly& f, const std::vector<QPoly>& G, const TermOrder& ord) {
  return divide(f, G, ord).remainder;
}

bool ideal_membership(const QPoly& f, const GroebnerBasis& G) {
  return normal_form(f, G.generators, G.order).is_zero();
}

bool is_zero_dimensional(const GroebnerBasis& G, const std::vector<std::size_t>& vars) {
  const auto leads = G.leading_monomials();
  return std::all_of(vars.begin(), vars.end(), [&](std::size_t v) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      return m.is_one() || m.pure_power_variable() == static_cast<int>(v);
    });
  });
}

bool is_zero_dimensional(const GroebnerBasis& G) {
  std::vector<std::size_t> vars(G.nvars());
  std::iota(vars.begin(), vars.end(), 0);
  return is_zero_dimensional(G, vars);
}

OrderIdeal quotient_basis(const GroebnerBasis& G) {
  return complement_of_monomial_ideal(G.leading_monomials(), G.nvars());
}

std::vector<ParamPoly> elimination_ideal(const std::vector<QPoly>& F, const Ring& ring,
                                         OrderKind kind) {
  const GroebnerBasis G = reduced_groebner_basis(F, elimination_order(ring, kind));
  std::vector<ParamPoly> out;
  for (const auto& g : G.generators)
    if (is_parameter_only(g, ring)) out.push_back(split_params(g, ring).terms().begin()->second);
  return out;
}

}  // namespace cbb
