#include "cbb/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cbb/errors.hpp"
#include "cbb/variables.hpp"

namespace cbb {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, exponent_type power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

int Monomial::pure_power_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= exps_[i];
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

std::optional<std::size_t> Variables::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const Variables>(Variables{std::move(names)});
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names == b->names;
}

void require_same_vars(const VarsPtr& a, const VarsPtr& b, const char* what) {
  if (!same_vars(a, b)) throw DomainError(std::string("variable context mismatch in ") + what);
}

Ring Ring::make(std::vector<std::string> main_names, std::vector<std::string> param_names) {
  std::set<std::string> seen;
  for (const auto* block : {&main_names, &param_names})
    for (const auto& name : *block)
      if (!seen.insert(name).second) throw DomainError("duplicate variable '" + name + "'");
  std::vector<std::string> all = main_names;
  all.insert(all.end(), param_names.begin(), param_names.end());
  return Ring{make_vars(std::move(main_names)), make_vars(std::move(param_names)),
              make_vars(std::move(all))};
}

}  // namespace cbb
