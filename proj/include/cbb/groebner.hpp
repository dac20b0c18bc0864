#pragma once

#include <deque>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cbb/order_ideal.hpp"
#include "cbb/param_poly.hpp"
#include "cbb/polynomial.hpp"
#include "cbb/term_order.hpp"

namespace cbb {

// --- generic engine ------------------------------------------------------------
//
// Every routine below is parameterized by a liveness predicate on
// coefficients. Over a field all stored coefficients are live. Under a
// specialization sigma, a coefficient is live (red) iff it does not vanish at
// sigma; dead (green) terms are carried along untouched and never chosen as
// leading terms, so the sigma-image of each computation is the ordinary
// computation on sigma-images.

struct AlwaysLive {
  template <class C>
  bool operator()(const C&) const {
    return true;
  }
};

template <class C>
struct Lead {
  Monomial monomial;
  C coefficient;
};

template <class C, class Live>
std::optional<Lead<C>> live_lead(const Polynomial<C>& p, const TermOrder& ord, const Live& live) {
  const Monomial* best = nullptr;
  const C* coeff = nullptr;
  for (const auto& [m, c] : p) {
    if (best && !ord.less(*best, m)) continue;
    if (!live(c)) continue;
    best = &m;
    coeff = &c;
  }
  if (!best) return std::nullopt;
  return Lead<C>{*best, *coeff};
}

template <class C, class Live>
bool has_live_term(const Polynomial<C>& p, const Live& live) {
  for (const auto& [m, c] : p)
    if (live(c)) return true;
  return false;
}

template <class C>
struct Divisor {
  const Polynomial<C>* poly;
  Monomial lead;
  C lead_coefficient;
};

/// Multivariate division on live terms. Returns the remainder, whose live
/// terms are not divisible by any divisor lead; when `quotients` is given it
/// receives q_i with h = sum q_i g_i + remainder. The first divisor (in list
/// order) whose lead divides the current term is used.
template <class C, class Live>
Polynomial<C> reduce_live(Polynomial<C> h, std::span<const Divisor<C>> divisors,
                          const TermOrder& ord, const Live& live,
                          std::vector<Polynomial<C>>* quotients = nullptr) {
  Polynomial<C> remainder(h.vars());
  if (quotients) {
    quotients->clear();
    for (std::size_t i = 0; i < divisors.size(); ++i) quotients->emplace_back(h.vars());
  }
  while (auto lt = live_lead(h, ord, live)) {
    std::size_t k = 0;
    while (k < divisors.size() && !divisors[k].lead.divides(lt->monomial)) ++k;
    if (k == divisors.size()) {
      remainder.add_term(lt->monomial, lt->coefficient);
      h.erase_term(lt->monomial);
      continue;
    }
    const C factor = lt->coefficient / divisors[k].lead_coefficient;
    const Monomial shift = divisors[k].lead.quotient_of(lt->monomial);
    h.add_scaled(-factor, shift, *divisors[k].poly);
    h.erase_term(lt->monomial);  // cancels exactly; guards against junk landing here
    if (quotients) (*quotients)[k].add_term(shift, factor);
  }
  remainder += h;
  return remainder;
}

/// Keeps the live lead term and reduces everything else.
template <class C, class Live>
Polynomial<C> reduce_tail_live(const Polynomial<C>& g, std::span<const Divisor<C>> divisors,
                               const TermOrder& ord, const Live& live) {
  const auto lt = live_lead(g, ord, live);
  if (!lt) return g;
  Polynomial<C> tail(g);
  tail.erase_term(lt->monomial);
  Polynomial<C> out = reduce_live(std::move(tail), divisors, ord, live);
  out.add_term(lt->monomial, lt->coefficient);
  return out;
}

template <class C, class Live>
std::vector<Divisor<C>> make_divisors(std::span<const Polynomial<C>> G, const TermOrder& ord,
                                      const Live& live) {
  std::vector<Divisor<C>> out;
  for (const auto& g : G)
    if (auto lt = live_lead(g, ord, live)) out.push_back({&g, lt->monomial, lt->coefficient});
  return out;
}

/// Buchberger's algorithm with the coprime and chain criteria under the
/// normal selection strategy (smallest lcm first, ties by creation order),
/// followed by minimalization and inter-reduction. Inputs without live terms
/// are ignored. Returns the reduced basis sorted ascending by live lead, each
/// element scaled to live leading coefficient 1; empty when nothing is live.
template <class C, class Live>
std::vector<Polynomial<C>> buchberger(const std::vector<Polynomial<C>>& input, const TermOrder& ord,
                                      const Live& live) {
  struct Entry {
    Polynomial<C> poly;
    Monomial lead;
    C lc;
  };
  struct Pair {
    Monomial lcm;
    std::size_t i, j;
    std::uint64_t seq;
  };
  struct PairLess {
    const TermOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      const auto c = ord->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.seq < b.seq;
    }
  };

  std::deque<Entry> basis;
  std::vector<Divisor<C>> divisors;
  std::set<Pair, PairLess> queue(PairLess{&ord});
  std::vector<std::vector<bool>> pending;
  std::uint64_t seq = 0;
  bool unit = false;

  auto add = [&](Polynomial<C> p) {
    auto lt = live_lead(p, ord, live);
    p = p.scaled(lt->coefficient.inverse());
    const C lc = *p.coefficient(lt->monomial);
    basis.push_back({std::move(p), lt->monomial, lc});
    const std::size_t k = basis.size() - 1;
    divisors.push_back({&basis[k].poly, basis[k].lead, basis[k].lc});
    for (auto& row : pending) row.push_back(false);
    pending.emplace_back(basis.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      queue.insert({lcm(basis[i].lead, basis[k].lead), i, k, seq++});
      pending[i][k] = pending[k][i] = true;
    }
    if (basis[k].lead.is_one()) unit = true;
  };

  for (const auto& f : input)
    if (!unit && has_live_term(f, live)) add(f);
  if (basis.empty()) return {};

  while (!queue.empty() && !unit) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending[pr.i][pr.j] = pending[pr.j][pr.i] = false;
    const Entry& a = basis[pr.i];
    const Entry& b = basis[pr.j];
    if (a.lead.coprime(b.lead)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      chain = basis[k].lead.divides(pr.lcm) && !pending[pr.i][k] && !pending[pr.j][k];
    }
    if (chain) continue;
    Polynomial<C> s = a.poly.mul_term(a.lead.quotient_of(pr.lcm), a.lc.inverse());
    s.add_scaled(-b.lc.inverse(), b.lead.quotient_of(pr.lcm), b.poly);
    s.erase_term(pr.lcm);
    Polynomial<C> r =
        reduce_live(std::move(s), std::span<const Divisor<C>>(divisors), ord, live);
    if (has_live_term(r, live)) add(std::move(r));
  }

  // Minimal basis: drop entries whose lead is a multiple of another lead
  // (equal leads keep the earliest entry).
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead.divides(basis[i].lead)) continue;
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end(),
            [&](std::size_t x, std::size_t y) { return ord.less(basis[x].lead, basis[y].lead); });

  std::vector<Polynomial<C>> out;
  for (auto i : kept) out.push_back(basis[i].poly);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Divisor<C>> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back({&out[j], basis[kept[j]].lead, basis[kept[j]].lc});
    out[i] = reduce_tail_live(out[i], std::span<const Divisor<C>>(others), ord, live);
  }
  return out;
}

// --- Groebner bases over Q ---------------------------------------------------------------

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by lead.
struct GroebnerBasis {
  std::vector<QPoly> generators;
  TermOrder order;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;
  std::size_t nvars() const { return order.nvars(); }
};

/// Throws DomainError when every input polynomial is zero.
GroebnerBasis reduced_groebner_basis(const std::vector<QPoly>& F, const TermOrder& ord);

template <class C>
struct Division {
  std::vector<Polynomial<C>> quotients;
  Polynomial<C> remainder;
};

Division<Rational> divide(const QPoly& f, const std::vector<QPoly>& G, const TermOrder& ord);
QPoly normal_form(const QPoly& f, const std::vector<QPoly>& G, const TermOrder& ord);
bool ideal_membership(const QPoly& f, const GroebnerBasis& G);

/// Every variable in `vars` has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& G, const std::vector<std::size_t>& vars);
bool is_zero_dimensional(const GroebnerBasis& G);

/// Standard monomials of G; throws NotZeroDimensional if infinitely many.
OrderIdeal quotient_basis(const GroebnerBasis& G);

/// Reduced Groebner basis (w.r.t. `kind` on the parameters) of <F> ∩ k[U],
/// computed with the block order X >> U. Empty when the intersection is 0.
std::vector<ParamPoly> elimination_ideal(const std::vector<QPoly>& F, const Ring& ring,
                                         OrderKind kind = OrderKind::DegLex);

}  // namespace cbb
