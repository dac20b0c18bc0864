#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbb/border_basis.hpp"
#include "cbb/parametric.hpp"

namespace cbb {

enum class VanishingMode { Squares, LinearUnivariate };
/// What the complement branch stores: the input F or the eliminant.
enum class GenericBranch { F, Eliminant };

/// sum_j (u_j - c_j)^2, or u - c in linear mode (one parameter only).
ParamPoly vanishing_polynomial(const Specialization& sigma, const VarsPtr& params,
                               VanishingMode mode = VanishingMode::Squares);
/// Product over the points of a point condition.
ParamPoly vanishing_polynomial(const Condition& gamma, const VarsPtr& params,
                               VanishingMode mode = VanishingMode::Squares);

struct Branch {
  Condition condition;
  OrderIdeal order_ideal;
  std::vector<PPoly> basis;
  /// Border monomial of each basis element; empty when the branch is unmarked.
  std::vector<Monomial> marks;

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct BorderSystem {
  Ring ring;
  OrderKind kind = OrderKind::DegLex;
  std::vector<Branch> branches;
  /// Reduced basis of <F> ∩ k[U].
  std::vector<ParamPoly> eliminant;

  const Branch& complement_branch() const;
  /// The branch whose condition holds at sigma.
  const Branch& branch_at(const Specialization& sigma) const;
};

struct SystemOptions {
  GenericBranch generic = GenericBranch::F;
};

/// One branch per rational point of V(<F> ∩ k[U]) carrying a scalar border
/// basis, plus the complement branch; compressed and canonically ordered.
BorderSystem compute_border_system(const std::vector<QPoly>& F, const Ring& ring, OrderKind kind,
                                   SystemOptions options = {});

/// Merges point branches with the same order ideal and basis, then sorts:
/// point branches by their points, complement last.
BorderSystem compress_system(BorderSystem system);

struct CbbElement {
  PPoly poly;
  std::optional<Monomial> mark;
  /// Index of the originating branch.
  std::size_t branch = 0;

  friend bool operator==(const CbbElement&, const CbbElement&) = default;
};

struct ComprehensiveBorderBasis {
  Ring ring;
  OrderKind kind = OrderKind::DegLex;
  std::vector<CbbElement> elements;
};

ComprehensiveBorderBasis compute_cbb(const BorderSystem& system,
                                     VanishingMode mode = VanishingMode::Squares);

/// The specialized elements (zeros dropped) and the order ideal cut out by
/// the surviving marks; (∅, {1}) when the specialized ideal is the unit ideal.
BorderBasis specialize_cbb(const ComprehensiveBorderBasis& cbb, const Specialization& sigma);

struct GsBranch {
  Condition condition;
  std::vector<PPoly> basis;
};

struct GroebnerSystem {
  Ring ring;
  OrderKind kind = OrderKind::DegLex;
  std::vector<GsBranch> branches;
  std::vector<ParamPoly> eliminant;
};

/// Reduced Groebner basis at each rational point of the parameter variety,
/// in primitive k[U] form, plus the complement branch.
GroebnerSystem pointwise_groebner_system(const std::vector<QPoly>& F, const Ring& ring,
                                         OrderKind kind, SystemOptions options = {});

/// Converts each point branch by multiplying known border elements by a
/// variable and reducing. Not compressed.
BorderSystem reduced_gs_to_bs(const GroebnerSystem& gs);

struct PointReport {
  Specialization sigma;
  std::size_t branch = 0;
  bool ok = true;
  std::string reason;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> structural;
  std::vector<PointReport> points;
};

/// Random rational points avoiding `excluded`; deterministic for a seed.
std::vector<Specialization> sample_points(std::size_t m, std::size_t count, std::uint64_t seed,
                                          const std::vector<Specialization>& excluded);

VerifyReport verify_border_system(const BorderSystem& system, const std::vector<QPoly>& F,
                                  std::size_t samples, std::uint64_t seed);

/// Checks the CBB at the parameter variety of F, at `samples` random points
/// and at every point in `extra`.
VerifyReport verify_cbb(const ComprehensiveBorderBasis& cbb, const std::vector<QPoly>& F,
                        std::size_t samples, std::uint64_t seed,
                        const std::vector<Specialization>& extra = {});

}  // namespace cbb
