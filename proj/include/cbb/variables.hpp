#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cbb {

/// Ordered list of variable names. Polynomials hold a shared handle to one;
/// two handles denote the same context iff their name lists agree.
struct Variables {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
};

using VarsPtr = std::shared_ptr<const Variables>;

VarsPtr make_vars(std::vector<std::string> names);
bool same_vars(const VarsPtr& a, const VarsPtr& b);
/// Throws DomainError when the contexts differ.
void require_same_vars(const VarsPtr& a, const VarsPtr& b, const char* what);

/// The ring k[X, U]: main variables X, parameters U, and the flattened
/// context X ++ U used for input polynomials.
struct Ring {
  VarsPtr main;
  VarsPtr params;
  VarsPtr all;

  static Ring make(std::vector<std::string> main_names, std::vector<std::string> param_names);
  std::size_t n() const { return main->size(); }
  std::size_t m() const { return params->size(); }
};

}  // namespace cbb
