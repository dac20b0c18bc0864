#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cbb {

/// Power product x^a over a fixed number of variables. The default ordering
/// (lexicographic on the exponent vector, first variable most significant) is
/// only a storage key; term orders live in term_order.hpp.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t index, exponent_type power = 1);

  std::size_t nvars() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  exponent_type& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<exponent_type>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// Index of the single variable of a pure power x_i^k (k >= 1), or -1.
  int pure_power_variable() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<exponent_type> exps_;
};

}  // namespace cbb
