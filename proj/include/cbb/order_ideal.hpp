#pragma once

#include <set>
#include <vector>

#include "cbb/monomial.hpp"
#include "cbb/term_order.hpp"

namespace cbb {

/// Finite divisor-closed set of monomials.
class OrderIdeal {
 public:
  explicit OrderIdeal(std::size_t nvars) : nvars_(nvars) {}
  /// Throws DomainError if the set is not closed under taking divisors.
  OrderIdeal(std::size_t nvars, std::set<Monomial> monomials);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return monomials_.size(); }
  bool empty() const { return monomials_.empty(); }
  bool contains(const Monomial& m) const { return monomials_.count(m) != 0; }
  const std::set<Monomial>& monomials() const { return monomials_; }
  /// Members in ascending order.
  std::vector<Monomial> sorted(const TermOrder& ord) const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  std::size_t nvars_;
  std::set<Monomial> monomials_;
};

bool is_divisor_closed(const std::set<Monomial>& monomials);

/// 𝕋ⁿ minus the monomial ideal generated by `generators`. Throws
/// NotZeroDimensional when that complement is infinite.
OrderIdeal complement_of_monomial_ideal(const std::vector<Monomial>& generators, std::size_t nvars);

}  // namespace cbb
