#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbb/monomial.hpp"
#include "cbb/polynomial.hpp"
#include "cbb/variables.hpp"

namespace cbb {

enum class OrderKind { Lex, DegLex, DegRevLex };

OrderKind parse_order_kind(std::string_view name);
std::string to_string(OrderKind kind);

/// Total, multiplicative monomial order. Plain orders rank variables by a
/// precedence list (first = largest); block orders compare the outer
/// variables first and break ties on the inner ones, both with the same kind.
class TermOrder {
 public:
  static TermOrder make(OrderKind kind, std::size_t nvars);
  static TermOrder lex(std::size_t nvars) { return make(OrderKind::Lex, nvars); }
  static TermOrder deglex(std::size_t nvars) { return make(OrderKind::DegLex, nvars); }
  static TermOrder degrevlex(std::size_t nvars) { return make(OrderKind::DegRevLex, nvars); }
  static TermOrder with_precedence(OrderKind kind, std::vector<std::size_t> precedence);
  static TermOrder block(std::vector<std::size_t> outer, std::vector<std::size_t> inner,
                         OrderKind kind);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::size_t nvars() const { return outer_.size() + inner_.size(); }
  OrderKind kind() const { return kind_; }
  bool is_block() const { return !inner_.empty(); }

 private:
  TermOrder(OrderKind kind, std::vector<std::size_t> outer, std::vector<std::size_t> inner);

  OrderKind kind_;
  std::vector<std::size_t> outer_;
  std::vector<std::size_t> inner_;
};

/// Strict weak ordering functor, for sorting and ordered containers.
struct OrderLess {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

/// Order on the main variables of a ring.
TermOrder main_order(const Ring& ring, OrderKind kind);
/// Block order on X ++ U with every main variable above every parameter.
TermOrder elimination_order(const Ring& ring, OrderKind kind);

template <class C>
struct LeadingData {
  C coefficient;
  Monomial monomial;
};

/// Coefficient and monomial of the order-maximal term; throws on zero.
template <class C>
LeadingData<C> leading_data(const Polynomial<C>& f, const TermOrder& ord) {
  if (f.is_zero()) throw DomainError("leading data of the zero polynomial");
  auto best = f.begin();
  for (auto it = std::next(f.begin()); it != f.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->second, best->first};
}

}  // namespace cbb
