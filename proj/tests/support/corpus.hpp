#pragma once

#include <random>
#include <string>
#include <vector>

#include "cbb/io.hpp"

namespace cbb::support {

/// Parses an expression over `vars`; shorthand for test literals.
QPoly P(const std::string& expr, const VarsPtr& vars);
PPoly PP(const std::string& expr, const Ring& ring);

/// The fixture system: two main variables, one parameter.
SystemFile fixture();
std::string fixture_path();
std::string golden_path(const std::string& name);

struct Ideal {
  VarsPtr vars;
  std::vector<QPoly> generators;
};

/// Zero-dimensional ideal in 1..3 variables: every variable gets a pure
/// power of degree <= 3 plus lower-degree noise, sometimes with one extra
/// generator.
Ideal random_zero_dimensional(std::mt19937_64& rng);

/// Parametric system whose parameter variety consists of rational points
/// and whose branches differ from point to point.
SystemFile random_parametric_system(std::mt19937_64& rng);

/// Zero-dimensional ideal over main variables and parameters together.
SystemFile random_split_system(std::mt19937_64& rng);

/// Random polynomial with small rational coefficients.
QPoly random_polynomial(std::mt19937_64& rng, const VarsPtr& vars, unsigned max_degree,
                        std::size_t max_terms);

/// {m : no generator divides m}, enumerated by walking the box bounded by
/// the pure powers. Independent of the breadth-first search in the library.
std::size_t staircase_count(const std::vector<Monomial>& leads, std::size_t nvars);

}  // namespace cbb::support
