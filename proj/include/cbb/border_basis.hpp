#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cbb/errors.hpp"
#include "cbb/groebner.hpp"
#include "cbb/order_ideal.hpp"
#include "cbb/polynomial.hpp"
#include "cbb/term_order.hpp"

namespace cbb {

/// (x_1 O ∪ ... ∪ x_n O) \ O; {1} when O is empty.
std::set<Monomial> border_of(const OrderIdeal& O);

/// Minimal number of border-closure steps reaching m from O; 0 iff m ∈ O.
unsigned index_of(const Monomial& m, const OrderIdeal& O);
/// Largest index over the support; throws DomainError on 0.
unsigned index_of(const QPoly& f, const OrderIdeal& O);

/// Sum of the terms of f of maximal index; 0 for f = 0.
QPoly border_form_of(const QPoly& f, const OrderIdeal& O);

/// One element per border monomial; marks[i] is the border monomial of
/// elements[i]. Plain border bases have mark coefficient 1, scalar ones any
/// nonzero coefficient.
template <class C>
struct BasicBorderBasis {
  OrderIdeal order_ideal;
  std::vector<Polynomial<C>> elements;
  std::vector<Monomial> marks;

  friend bool operator==(const BasicBorderBasis&, const BasicBorderBasis&) = default;
};

using BorderBasis = BasicBorderBasis<Rational>;

/// The multiplicative identity of a polynomial's coefficient domain.
template <class C>
C one_like(const Polynomial<C>& p) {
  for (const auto& [m, c] : p) return c / c;
  throw DomainError("coefficient identity of the zero polynomial");
}

/// Builds the border elements for the border monomials `border` (ascending
/// in `ord`) from a reduced basis G whose live leads lie in `border`.
///
/// A border monomial that is a lead of G takes that element. Otherwise the
/// element is x_k h reduced by G, where h belongs to the border monomial
/// b / x_k, preferring predecessors that are leads of G, and the result is
/// scaled so the mark coefficient is 1. Over a field this is b - NF(b).
template <class C, class Live>
std::vector<Polynomial<C>> build_border_elements(const std::vector<Polynomial<C>>& G,
                                                 const std::vector<Monomial>& border,
                                                 const OrderIdeal& O, const TermOrder& ord,
                                                 const Live& live) {
  const auto divisors = make_divisors(std::span<const Polynomial<C>>(G), ord, live);
  std::map<Monomial, std::size_t> lead_index;
  for (std::size_t i = 0; i < divisors.size(); ++i) lead_index.emplace(divisors[i].lead, i);

  std::map<Monomial, Polynomial<C>> built;
  std::vector<Polynomial<C>> out;
  for (const auto& b : border) {
    if (auto it = lead_index.find(b); it != lead_index.end()) {
      out.push_back(*divisors[it->second].poly);
      built.emplace(b, out.back());
      continue;
    }
    std::optional<std::size_t> via_lead, via_border;
    for (std::size_t k = 0; k < b.nvars(); ++k) {
      if (b[k] == 0) continue;
      Monomial pred(b);
      --pred[k];
      if (!via_lead && lead_index.count(pred)) via_lead = k;
      if (!via_border && !O.contains(pred) && built.count(pred)) via_border = k;
    }
    if (!via_lead && !via_border) throw DomainError("border monomial has no predecessor");
    const std::size_t k = via_lead ? *via_lead : *via_border;
    Monomial pred(b);
    --pred[k];
    const Polynomial<C>& h = built.at(pred);
    Polynomial<C> p = h.mul_term(Monomial::variable(b.nvars(), k), one_like(h));
    const C* c = p.coefficient(b);
    if (!c || !live(*c)) throw DomainError("border predecessor lost its mark");
    const C inv = c->inverse();
    p.erase_term(b);
    Polynomial<C> r = reduce_live(std::move(p), std::span<const Divisor<C>>(divisors), ord, live);
    Polynomial<C> e = r.scaled(inv);
    e.add_term(b, one_like(h));
    out.push_back(e);
    built.emplace(b, std::move(e));
  }
  return out;
}

/// The unique border basis for the standard monomials of a zero-dimensional G.
BorderBasis gb_to_border_basis(const GroebnerBasis& G);

struct CheckResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Verifies that B is a border basis (scalar: mark coefficients may be any
/// nonzero constant) of <F>. Empty marks are inferred from the supports.
CheckResult check_border_basis(const BorderBasis& B, const std::vector<QPoly>& F, bool scalar);

}  // namespace cbb
