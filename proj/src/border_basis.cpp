#include "cbb/border_basis.hpp"

#include <algorithm>

namespace cbb {

std::set<Monomial> border_of(const OrderIdeal& O) {
  const std::size_t n = O.nvars();
  if (O.empty()) return {Monomial::one(n)};
  std::set<Monomial> out;
  for (const auto& m : O.monomials())
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next(m);
      ++next[i];
      if (!O.contains(next)) out.insert(std::move(next));
    }
  return out;
}

unsigned index_of(const Monomial& m, const OrderIdeal& O) {
  if (m.nvars() != O.nvars()) throw DomainError("monomial arity mismatch");
  if (O.empty()) return static_cast<unsigned>(m.degree() + 1);
  std::uint64_t best = m.degree();  // 1 ∈ O divides everything
  for (const auto& o : O.monomials())
    if (o.divides(m)) best = std::min(best, m.degree() - o.degree());
  return static_cast<unsigned>(best);
}

unsigned index_of(const QPoly& f, const OrderIdeal& O) {
  if (f.is_zero()) throw DomainError("index of the zero polynomial");
  unsigned best = 0;
  for (const auto& [m, c] : f) best = std::max(best, index_of(m, O));
  return best;
}

QPoly border_form_of(const QPoly& f, const OrderIdeal& O) {
  QPoly out(f.vars());
  if (f.is_zero()) return out;
  const unsigned top = index_of(f, O);
  for (const auto& [m, c] : f)
    if (index_of(m, O) == top) out.add_term(m, c);
  return out;
}

BorderBasis gb_to_border_basis(const GroebnerBasis& G) {
  OrderIdeal O = quotient_basis(G);
  const auto set = border_of(O);
  std::vector<Monomial> border(set.begin(), set.end());
  std::sort(border.begin(), border.end(), OrderLess{&G.order});
  auto elements = build_border_elements(G.generators, border, O, G.order, AlwaysLive{});
  return BorderBasis{std::move(O), std::move(elements), std::move(border)};
}

namespace {

CheckResult fail(std::string reason) { return CheckResult{false, std::move(reason)}; }

std::string describe(const Monomial& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.nvars(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

}  // namespace

CheckResult check_border_basis(const BorderBasis& B, const std::vector<QPoly>& F, bool scalar) {
  const OrderIdeal& O = B.order_ideal;
  const std::size_t n = O.nvars();
  if (!is_divisor_closed(O.monomials())) return fail("order ideal is not divisor-closed");
  if (!B.marks.empty() && B.marks.size() != B.elements.size())
    return fail("marks and elements differ in number");

  const auto border = border_of(O);
  std::set<Monomial> covered;
  for (std::size_t i = 0; i < B.elements.size(); ++i) {
    const QPoly& b = B.elements[i];
    if (b.nvars() != n) return fail("element " + std::to_string(i) + " has the wrong arity");
    std::optional<Monomial> mark;
    if (!B.marks.empty()) mark = B.marks[i];
    for (const auto& [m, c] : b) {
      if (O.contains(m)) continue;
      if (!mark) {
        mark = m;
      } else if (*mark != m) {
        return fail("element " + std::to_string(i) + " has support outside O and its mark");
      }
    }
    if (!mark) return fail("element " + std::to_string(i) + " has no border term");
    if (!border.count(*mark))
      return fail("mark " + describe(*mark) + " of element " + std::to_string(i) +
                  " is not a border monomial");
    const Rational* c = b.coefficient(*mark);
    if (!c) return fail("element " + std::to_string(i) + " lacks its mark term");
    if (!scalar && !c->is_one())
      return fail("element " + std::to_string(i) + " has mark coefficient other than 1");
    if (!covered.insert(*mark).second)
      return fail("border monomial " + describe(*mark) + " is covered twice");
  }
  for (const auto& m : border)
    if (!covered.count(m)) return fail("border monomial " + describe(m) + " is not covered");

  const TermOrder ord = TermOrder::deglex(n);
  std::optional<GroebnerBasis> ref;
  try {
    ref = reduced_groebner_basis(F, ord);
  } catch (const DomainError& e) {
    return fail(std::string("reference ideal: ") + e.what());
  }
  const GroebnerBasis& G = *ref;
  for (std::size_t i = 0; i < B.elements.size(); ++i)
    if (!ideal_membership(B.elements[i], G))
      return fail("element " + std::to_string(i) + " is not in the ideal");
  OrderIdeal Q(n);
  try {
    Q = quotient_basis(G);
  } catch (const NotZeroDimensional&) {
    return fail("reference ideal is not zero-dimensional");
  }
  if (Q.size() != O.size())
    return fail("|O| = " + std::to_string(O.size()) + " but the quotient has dimension " +
                std::to_string(Q.size()));
  return {};
}

}  // namespace cbb
