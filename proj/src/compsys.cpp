#include "cbb/compsys.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cbb/errors.hpp"

namespace cbb {

ParamPoly vanishing_polynomial(const Specialization& sigma, const VarsPtr& params,
                               VanishingMode mode) {
  const std::size_t m = params->size();
  if (sigma.size() != m) throw DomainError("specialization has the wrong arity");
  if (mode == VanishingMode::LinearUnivariate && m != 1)
    throw DomainError("linear vanishing polynomials need exactly one parameter");
  ParamPoly out(params);
  for (std::size_t j = 0; j < m; ++j) {
    ParamPoly lin = ParamPoly::variable(params, j, Rational(1));
    lin.add_term(Monomial::one(m), -sigma.point[j]);
    out += mode == VanishingMode::Squares ? lin * lin : lin;
  }
  return out;
}

ParamPoly vanishing_polynomial(const Condition& gamma, const VarsPtr& params, VanishingMode mode) {
  if (!gamma.is_points()) throw DomainError("vanishing polynomial of a complement condition");
  ParamPoly out = ParamPoly::constant(params, Rational(1));
  for (const auto& sigma : gamma.listed()) out *= vanishing_polynomial(sigma, params, mode);
  return out;
}

const Branch& BorderSystem::complement_branch() const {
  for (const auto& b : branches)
    if (!b.condition.is_points()) return b;
  throw DomainError("border system has no complement branch");
}

const Branch& BorderSystem::branch_at(const Specialization& sigma) const {
  for (const auto& b : branches)
    if (b.condition.is_points() && b.condition.contains(sigma)) return b;
  return complement_branch();
}

namespace {

struct Eliminated {
  std::vector<ParamPoly> eliminant;
  std::vector<Specialization> variety;
};

Eliminated eliminate(const std::vector<QPoly>& F, const Ring& ring, OrderKind kind) {
  const GroebnerBasis G = reduced_groebner_basis(F, elimination_order(ring, kind));
  if (!is_zero_dimensional(G)) throw NotZeroDimensional("input ideal is not zero-dimensional");
  Eliminated out;
  for (const auto& g : G.generators)
    if (is_parameter_only(g, ring)) out.eliminant.push_back(split_params(g, ring).begin()->second);
  const bool unit = out.eliminant.size() == 1 && out.eliminant[0].is_constant();
  if (!unit) out.variety = rational_variety(out.eliminant, ring.params);
  return out;
}

std::vector<FPoly> main_part(const std::vector<QPoly>& F, const Ring& ring) {
  std::vector<FPoly> out;
  for (const auto& f : F)
    if (!f.is_zero() && !is_parameter_only(f, ring)) out.push_back(lift_to_fractions(split_params(f, ring)));
  return out;
}

std::vector<PPoly> generic_basis(const std::vector<QPoly>& F, const std::vector<ParamPoly>& eliminant,
                                 const Ring& ring, GenericBranch generic) {
  std::vector<PPoly> out;
  if (generic == GenericBranch::F) {
    for (const auto& f : F)
      if (!f.is_zero()) out.push_back(split_params(f, ring));
  } else {
    for (const auto& e : eliminant) out.push_back(PPoly::constant(ring.main, e));
  }
  return out;
}

PPoly constant_coefficients(const QPoly& f, const Ring& ring) {
  return f.map_coefficients([&](const Rational& c) { return ParamPoly::constant(ring.params, c); });
}

/// Without parameters there is a single branch covering everything.
BorderSystem parameter_free_system(const std::vector<QPoly>& F, const Ring& ring, OrderKind kind) {
  BorderSystem out{ring, kind, {}, {}};
  std::vector<QPoly> flat;
  for (const auto& f : F) flat.push_back(specialize_params(f, ring, Specialization{}));
  const GroebnerBasis G = reduced_groebner_basis(flat, main_order(ring, kind));
  if (!is_zero_dimensional(G)) throw NotZeroDimensional("input ideal is not zero-dimensional");
  if (G.is_unit()) {
    out.eliminant.push_back(ParamPoly::constant(ring.params, Rational(1)));
    out.branches.push_back({Condition::complement({}), OrderIdeal(ring.n()),
                            generic_basis(F, {}, ring, GenericBranch::F), {}});
    return out;
  }
  const BorderBasis B = gb_to_border_basis(G);
  Branch br{Condition::complement({}), B.order_ideal, {}, B.marks};
  for (const auto& e : B.elements) br.basis.push_back(constant_coefficients(e, ring));
  out.branches.push_back(std::move(br));
  return out;
}

bool same_shape(const Branch& a, const Branch& b) {
  return a.order_ideal == b.order_ideal && a.basis == b.basis && a.marks == b.marks;
}

}  // namespace

BorderSystem compute_border_system(const std::vector<QPoly>& F, const Ring& ring, OrderKind kind,
                                   SystemOptions options) {
  if (ring.m() == 0) return parameter_free_system(F, ring, kind);
  const Eliminated elim = eliminate(F, ring, kind);
  const TermOrder ord = main_order(ring, kind);
  const auto Fp = main_part(F, ring);

  BorderSystem out{ring, kind, {}, elim.eliminant};
  for (const auto& sigma : elim.variety) {
    const ParamBorderBasis S = to_scalar_basis(conditional_border_basis(Fp, sigma, ord));
    out.branches.push_back({Condition::points({sigma}), S.order_ideal, S.elements, S.marks});
  }
  out.branches.push_back({Condition::complement(elim.variety), OrderIdeal(ring.n()),
                          generic_basis(F, elim.eliminant, ring, options.generic), {}});
  return compress_system(std::move(out));
}

BorderSystem compress_system(BorderSystem system) {
  std::vector<Branch> points, rest;
  for (auto& b : system.branches) {
    if (!b.condition.is_points()) {
      rest.push_back(std::move(b));
      continue;
    }
    auto it = std::find_if(points.begin(), points.end(),
                           [&](const Branch& p) { return same_shape(p, b); });
    if (it == points.end()) {
      points.push_back(std::move(b));
      continue;
    }
    auto merged = it->condition.listed();
    merged.insert(merged.end(), b.condition.listed().begin(), b.condition.listed().end());
    it->condition = Condition::points(std::move(merged));
  }
  std::stable_sort(points.begin(), points.end(), [](const Branch& a, const Branch& b) {
    return a.condition.listed() < b.condition.listed();
  });
  points.insert(points.end(), std::make_move_iterator(rest.begin()),
                std::make_move_iterator(rest.end()));
  system.branches = std::move(points);
  return system;
}

// --- comprehensive border bases --------------------------------------------------------

ComprehensiveBorderBasis compute_cbb(const BorderSystem& system, VanishingMode mode) {
  const Ring& ring = system.ring;
  ComprehensiveBorderBasis out{ring, system.kind, {}};

  std::vector<std::size_t> point_branches;
  std::vector<ParamPoly> f_gamma;
  for (std::size_t i = 0; i < system.branches.size(); ++i)
    if (system.branches[i].condition.is_points()) {
      point_branches.push_back(i);
      f_gamma.push_back(vanishing_polynomial(system.branches[i].condition, ring.params, mode));
    }
  ParamPoly f_a = ParamPoly::constant(ring.params, Rational(1));
  for (const auto& f : f_gamma) f_a *= f;

  for (std::size_t k = 0; k < point_branches.size(); ++k) {
    ParamPoly multiplier = ParamPoly::constant(ring.params, Rational(1));
    for (std::size_t j = 0; j < f_gamma.size(); ++j)
      if (j != k) multiplier *= f_gamma[j];
    const Branch& br = system.branches[point_branches[k]];
    for (std::size_t e = 0; e < br.basis.size(); ++e)
      out.elements.push_back({br.basis[e].scaled(multiplier), br.marks.at(e), point_branches[k]});
  }

  for (std::size_t i = 0; i < system.branches.size(); ++i) {
    const Branch& br = system.branches[i];
    if (br.condition.is_points()) continue;
    for (std::size_t e = 0; e < br.basis.size(); ++e) {
      const PPoly& b = br.basis[e];
      std::optional<Monomial> mark;
      if (!br.marks.empty()) mark = br.marks[e];
      if (point_branches.empty()) {
        out.elements.push_back({b, mark, i});
      } else if (b.is_constant()) {
        out.elements.push_back({b, std::nullopt, i});
      } else {
        out.elements.push_back({b.scaled(f_a), std::nullopt, i});
      }
    }
  }
  return out;
}

BorderBasis specialize_cbb(const ComprehensiveBorderBasis& cbb, const Specialization& sigma) {
  const std::size_t n = cbb.ring.n();
  if (sigma.size() != cbb.ring.m()) throw DomainError("specialization has the wrong arity");
  std::vector<QPoly> survivors;
  std::vector<Monomial> marks;
  bool all_marked = true;
  for (const auto& e : cbb.elements) {
    QPoly s = specialize_params(e.poly, sigma);
    if (s.is_zero()) continue;
    if (e.mark && s.coefficient(*e.mark)) {
      marks.push_back(*e.mark);
    } else {
      all_marked = false;
    }
    survivors.push_back(std::move(s));
  }
  if (survivors.empty()) throw NotZeroDimensional("every element vanishes at the specialization");

  const TermOrder ord = main_order(cbb.ring, cbb.kind);
  const QPoly one = QPoly::constant(cbb.ring.main, Rational(1));
  const BorderBasis unit{OrderIdeal(n), {one}, {Monomial::one(n)}};
  for (const auto& s : survivors)
    if (s.is_constant()) return unit;
  if (reduced_groebner_basis(survivors, ord).is_unit()) return unit;

  OrderIdeal O = complement_of_monomial_ideal(marks, n);
  if (!all_marked) marks.clear();
  return BorderBasis{std::move(O), std::move(survivors), std::move(marks)};
}

// --- Groebner systems ------------------------------------------------------------

GroebnerSystem pointwise_groebner_system(const std::vector<QPoly>& F, const Ring& ring,
                                         OrderKind kind, SystemOptions options) {
  const TermOrder ord = main_order(ring, kind);
  GroebnerSystem out{ring, kind, {}, {}};
  if (ring.m() == 0) {
    std::vector<QPoly> flat;
    for (const auto& f : F) flat.push_back(specialize_params(f, ring, Specialization{}));
    const GroebnerBasis G = reduced_groebner_basis(flat, ord);
    if (!is_zero_dimensional(G)) throw NotZeroDimensional("input ideal is not zero-dimensional");
    GsBranch br{Condition::complement({}), {}};
    if (G.is_unit()) {
      out.eliminant.push_back(ParamPoly::constant(ring.params, Rational(1)));
      br.basis = generic_basis(F, {}, ring, GenericBranch::F);
    } else {
      for (const auto& g : G.generators) br.basis.push_back(constant_coefficients(g, ring));
    }
    out.branches.push_back(std::move(br));
    return out;
  }

  const Eliminated elim = eliminate(F, ring, kind);
  out.eliminant = elim.eliminant;
  const auto Fp = main_part(F, ring);
  for (const auto& sigma : elim.variety) {
    const LiveAt live{&sigma};
    GsBranch br{Condition::points({sigma}), {}};
    for (const auto& g : conditional_groebner_basis(Fp, sigma, ord))
      br.basis.push_back(primitive_param_form(g, live_lead(g, ord, live)->monomial));
    out.branches.push_back(std::move(br));
  }
  out.branches.push_back(
      {Condition::complement(elim.variety), generic_basis(F, elim.eliminant, ring, options.generic)});
  return out;
}

namespace {

/// Border basis of one conditional reduced Groebner basis: leads of G are
/// kept, every other border monomial x_l * LM(h) comes from x_l * h reduced
/// modulo G for an earlier element h.
Branch branch_from_groebner(const Condition& condition, const std::vector<PPoly>& basis,
                            const Specialization& sigma, const TermOrder& ord, std::size_t n) {
  const LiveAt live{&sigma};
  std::vector<FPoly> G;
  for (const auto& g : basis) G.push_back(lift_to_fractions(g));
  const auto divisors = make_divisors(std::span<const FPoly>(G), ord, live);
  std::vector<Monomial> leads;
  for (const auto& d : divisors) leads.push_back(d.lead);
  OrderIdeal O = complement_of_monomial_ideal(leads, n);
  const auto set = border_of(O);
  std::vector<Monomial> border(set.begin(), set.end());
  std::sort(border.begin(), border.end(), OrderLess{&ord});

  std::vector<FPoly> built;
  std::vector<Monomial> built_marks;
  auto find_in = [](const std::vector<Monomial>& v, const Monomial& m) -> std::optional<std::size_t> {
    auto it = std::find(v.begin(), v.end(), m);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  };

  for (const auto& alpha : border) {
    if (auto j = find_in(leads, alpha)) {
      built.push_back(*divisors[*j].poly);
      built_marks.push_back(alpha);
      continue;
    }
    const FPoly* h = nullptr;
    std::size_t ell = 0;
    for (std::size_t pass = 0; pass < 2 && !h; ++pass)
      for (std::size_t l = 0; l < n && !h; ++l) {
        if (alpha[l] == 0) continue;
        Monomial pred(alpha);
        --pred[l];
        if (pass == 0) {
          if (auto j = find_in(leads, pred)) h = divisors[*j].poly;
        } else if (!O.contains(pred)) {
          if (auto j = find_in(built_marks, pred)) h = &built[*j];
        }
        if (h) ell = l;
      }
    if (!h) throw DomainError("border monomial has no predecessor");
    FPoly p = h->mul_term(Monomial::variable(n, ell), one_like(*h));
    const ParamFraction c = *p.coefficient(alpha);
    p.erase_term(alpha);
    FPoly e = reduce_live(std::move(p), std::span<const Divisor<ParamFraction>>(divisors), ord, live)
                  .scaled(c.inverse());
    e.add_term(alpha, one_like(*h));
    built.push_back(std::move(e));
    built_marks.push_back(alpha);
  }

  Branch out{condition, std::move(O), {}, border};
  for (std::size_t i = 0; i < built.size(); ++i)
    out.basis.push_back(primitive_param_form(built[i], built_marks[i]));
  return out;
}

}  // namespace

BorderSystem reduced_gs_to_bs(const GroebnerSystem& gs) {
  const Ring& ring = gs.ring;
  const TermOrder ord = main_order(ring, gs.kind);
  BorderSystem out{ring, gs.kind, {}, gs.eliminant};
  for (const auto& br : gs.branches) {
    if (br.condition.is_points()) {
      out.branches.push_back(
          branch_from_groebner(br.condition, br.basis, br.condition.listed().front(), ord, ring.n()));
    } else if (ring.m() == 0 && !gs.eliminant.empty()) {
      out.branches.push_back({br.condition, OrderIdeal(ring.n()), br.basis, {}});
    } else if (ring.m() == 0) {
      out.branches.push_back(branch_from_groebner(br.condition, br.basis, Specialization{}, ord, ring.n()));
    } else {
      out.branches.push_back({br.condition, OrderIdeal(ring.n()), br.basis, {}});
    }
  }
  return out;
}

// --- verification -------------------------------------------------------------------

std::vector<Specialization> sample_points(std::size_t m, std::size_t count, std::uint64_t seed,
                                          const std::vector<Specialization>& excluded) {
  std::vector<Specialization> out;
  if (m == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 5);
  std::set<Specialization> skip(excluded.begin(), excluded.end());
  while (out.size() < count) {
    Specialization s;
    for (std::size_t j = 0; j < m; ++j) s.point.emplace_back(num(rng), den(rng));
    if (skip.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<QPoly> specialize_all(const std::vector<QPoly>& F, const Ring& ring,
                                  const Specialization& sigma) {
  std::vector<QPoly> out;
  for (const auto& f : F) {
    QPoly s = specialize_params(f, ring, sigma);
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

bool generates_unit(const std::vector<QPoly>& P, const TermOrder& ord) {
  return !P.empty() && reduced_groebner_basis(P, ord).is_unit();
}

/// Checks (O, B) against sigma(F): the unit ideal when O is empty, a scalar
/// border basis otherwise.
CheckResult check_specialized(const BorderBasis& B, const std::vector<QPoly>& sF, const TermOrder& ord) {
  if (sF.empty()) return {false, "specialized input ideal is zero"};
  if (B.order_ideal.empty()) {
    if (!generates_unit(B.elements, ord)) return {false, "basis does not generate the unit ideal"};
    if (!generates_unit(sF, ord)) return {false, "specialized input ideal is not the unit ideal"};
    return {};
  }
  return check_border_basis(B, sF, true);
}

PointReport check_branch(const Branch& br, std::size_t index, const std::vector<QPoly>& F,
                         const Ring& ring, const TermOrder& ord, const Specialization& sigma) {
  PointReport rep{sigma, index, true, {}};
  try {
    BorderBasis B{br.order_ideal, {}, br.marks};
    for (const auto& b : br.basis) {
      QPoly s = specialize_params(b, sigma);
      if (s.is_zero() && !br.order_ideal.empty()) {
        rep.ok = false;
        rep.reason = "a basis element vanishes";
        return rep;
      }
      if (!s.is_zero()) B.elements.push_back(std::move(s));
    }
    if (br.order_ideal.empty()) B.marks.clear();
    const CheckResult r = check_specialized(B, specialize_all(F, ring, sigma), ord);
    rep.ok = r.ok;
    rep.reason = r.reason;
  } catch (const Error& e) {
    rep.ok = false;
    rep.reason = e.what();
  }
  return rep;
}

void finish(VerifyReport& report) {
  report.ok = report.structural.empty() &&
              std::all_of(report.points.begin(), report.points.end(),
                          [](const PointReport& p) { return p.ok; });
}

}  // namespace

VerifyReport verify_border_system(const BorderSystem& system, const std::vector<QPoly>& F,
                                  std::size_t samples, std::uint64_t seed) {
  VerifyReport report;
  const Ring& ring = system.ring;
  const TermOrder ord = main_order(ring, system.kind);

  std::size_t complements = 0;
  std::vector<Specialization> covered;
  const Branch* complement = nullptr;
  for (const auto& br : system.branches) {
    if (br.condition.is_points()) {
      covered.insert(covered.end(), br.condition.listed().begin(), br.condition.listed().end());
    } else {
      ++complements;
      complement = &br;
    }
  }
  if (complements != 1) report.structural.push_back("expected exactly one complement branch");
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
    report.structural.push_back("point conditions overlap");
  if (complement && complement->condition.listed() != covered)
    report.structural.push_back("complement does not exclude exactly the branch points");

  for (std::size_t i = 0; i < system.branches.size(); ++i) {
    const Branch& br = system.branches[i];
    if (!br.condition.is_points()) continue;
    for (const auto& sigma : br.condition.listed())
      report.points.push_back(check_branch(br, i, F, ring, ord, sigma));
  }
  if (complement) {
    const std::size_t ci = static_cast<std::size_t>(complement - system.branches.data());
    auto pts = sample_points(ring.m(), samples, seed, covered);
    if (ring.m() == 0) pts.push_back(Specialization{});
    for (const auto& sigma : pts) report.points.push_back(check_branch(*complement, ci, F, ring, ord, sigma));
  }
  finish(report);
  return report;
}

VerifyReport verify_cbb(const ComprehensiveBorderBasis& cbb, const std::vector<QPoly>& F,
                        std::size_t samples, std::uint64_t seed,
                        const std::vector<Specialization>& extra) {
  VerifyReport report;
  const Ring& ring = cbb.ring;
  const TermOrder ord = main_order(ring, cbb.kind);
  std::vector<Specialization> pts;
  if (ring.m() == 0) {
    pts.push_back(Specialization{});
  } else {
    try {
      pts = eliminate(F, ring, cbb.kind).variety;
    } catch (const Error& e) {
      report.structural.push_back(std::string("parameter variety: ") + e.what());
    }
    const auto more = sample_points(ring.m(), samples, seed, pts);
    pts.insert(pts.end(), more.begin(), more.end());
    pts.insert(pts.end(), extra.begin(), extra.end());
  }
  for (const auto& sigma : pts) {
    PointReport rep{sigma, 0, true, {}};
    try {
      const CheckResult r = check_specialized(specialize_cbb(cbb, sigma), specialize_all(F, ring, sigma), ord);
      rep.ok = r.ok;
      rep.reason = r.reason;
    } catch (const Error& e) {
      rep.ok = false;
      rep.reason = e.what();
    }
    report.points.push_back(std::move(rep));
  }
  finish(report);
  return report;
}

}  // namespace cbb
