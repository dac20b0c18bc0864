#include "cbb/term_order.hpp"

#include <numeric>

#include "cbb/errors.hpp"

namespace cbb {

namespace {

std::strong_ordering compare_kind(OrderKind kind, const std::vector<std::size_t>& vars,
                                  const Monomial& a, const Monomial& b) {
  if (kind != OrderKind::Lex) {
    std::uint64_t da = 0, db = 0;
    for (auto v : vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
  }
  if (kind == OrderKind::DegRevLex) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
  }
  for (auto v : vars)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

std::vector<std::size_t> iota_vec(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

}  // namespace

OrderKind parse_order_kind(std::string_view name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "deglex") return OrderKind::DegLex;
  if (name == "degrevlex") return OrderKind::DegRevLex;
  throw DomainError("unknown term order '" + std::string(name) + "'");
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
  }
  return "?";
}

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> outer,
                     std::vector<std::size_t> inner)
    : kind_(kind), outer_(std::move(outer)), inner_(std::move(inner)) {
  std::vector<bool> seen(nvars(), false);
  for (const auto* block : {&outer_, &inner_})
    for (auto v : *block) {
      if (v >= seen.size() || seen[v]) throw DomainError("term order is not a permutation");
      seen[v] = true;
    }
}

TermOrder TermOrder::make(OrderKind kind, std::size_t nvars) {
  return TermOrder(kind, iota_vec(0, nvars), {});
}

TermOrder TermOrder::with_precedence(OrderKind kind, std::vector<std::size_t> precedence) {
  return TermOrder(kind, std::move(precedence), {});
}

TermOrder TermOrder::block(std::vector<std::size_t> outer, std::vector<std::size_t> inner,
                           OrderKind kind) {
  if (inner.empty()) return TermOrder(kind, std::move(outer), {});
  return TermOrder(kind, std::move(outer), std::move(inner));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars())
    throw DomainError("monomial arity does not match term order");
  const auto c = compare_kind(kind_, outer_, a, b);
  if (c != 0 || inner_.empty()) return c;
  return compare_kind(kind_, inner_, a, b);
}

TermOrder main_order(const Ring& ring, OrderKind kind) { return TermOrder::make(kind, ring.n()); }

TermOrder elimination_order(const Ring& ring, OrderKind kind) {
  return TermOrder::block(iota_vec(0, ring.n()), iota_vec(ring.n(), ring.m()), kind);
}

}  // namespace cbb
