#include "cbb/order_ideal.hpp"

#include <algorithm>

#include "cbb/errors.hpp"

namespace cbb {

bool is_divisor_closed(const std::set<Monomial>& monomials) {
  // Closed under divisors iff closed under dividing by single variables.
  for (const auto& m : monomials)
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      Monomial d(m);
      --d[i];
      if (!monomials.count(d)) return false;
    }
  return true;
}

OrderIdeal::OrderIdeal(std::size_t nvars, std::set<Monomial> monomials)
    : nvars_(nvars), monomials_(std::move(monomials)) {
  for (const auto& m : monomials_)
    if (m.nvars() != nvars_) throw DomainError("order ideal monomial has the wrong arity");
  if (!is_divisor_closed(monomials_)) throw DomainError("monomial set is not divisor-closed");
}

std::vector<Monomial> OrderIdeal::sorted(const TermOrder& ord) const {
  std::vector<Monomial> out(monomials_.begin(), monomials_.end());
  std::sort(out.begin(), out.end(), OrderLess{&ord});
  return out;
}

OrderIdeal complement_of_monomial_ideal(const std::vector<Monomial>& generators, std::size_t nvars) {
  std::vector<bool> has_pure_power(nvars, false);
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw DomainError("monomial arity mismatch");
    if (g.is_one()) return OrderIdeal(nvars);
    const int v = g.pure_power_variable();
    if (v >= 0) has_pure_power[static_cast<std::size_t>(v)] = true;
  }
  if (std::find(has_pure_power.begin(), has_pure_power.end(), false) != has_pure_power.end())
    throw NotZeroDimensional("monomial ideal has an infinite complement");

  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(generators.begin(), generators.end(),
                       [&](const Monomial& g) { return g.divides(m); });
  };
  std::set<Monomial> out;
  std::vector<Monomial> frontier{Monomial::one(nvars)};
  out.insert(frontier.front());
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial next(m);
      ++next[i];
      if (!in_ideal(next) && out.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return OrderIdeal(nvars, std::move(out));
}

}  // namespace cbb
