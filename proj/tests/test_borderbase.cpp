#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cbb/border_basis.hpp"
#include "cbb/errors.hpp"
#include "support/corpus.hpp"

using namespace cbb;
using cbb::support::P;

namespace {

const VarsPtr& xy() {
  static const VarsPtr v = make_vars({"x", "y"});
  return v;
}

OrderIdeal ideal(std::set<Monomial> s, std::size_t n = 2) { return OrderIdeal(n, std::move(s)); }

const OrderIdeal& square() {
  static const OrderIdeal O = ideal({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  return O;
}

/// Index by iterating border closures: O_0 = O, O_{k+1} = O_k ∪ border(O_k).
unsigned closure_index(const Monomial& m, const OrderIdeal& O) {
  if (O.contains(m)) return 0;
  std::set<Monomial> cur = O.monomials();
  for (unsigned k = 1;; ++k) {
    std::set<Monomial> next = cur;
    if (cur.empty()) {
      next.insert(Monomial::one(m.nvars()));
    } else {
      for (const auto& c : cur)
        for (std::size_t i = 0; i < m.nvars(); ++i) {
          Monomial e(c);
          ++e[i];
          next.insert(e);
        }
    }
    if (next.count(m)) return k;
    cur = std::move(next);
  }
}

std::vector<QPoly> polys(std::initializer_list<const char*> exprs) {
  std::vector<QPoly> out;
  for (const char* e : exprs) out.push_back(P(e, xy()));
  return out;
}

std::set<Monomial> as_set(const std::vector<Monomial>& v) { return {v.begin(), v.end()}; }

/// Monomial ideals agree iff they have the same minimal generators.
std::set<Monomial> minimal_generators(const std::vector<Monomial>& gens) {
  std::set<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& h) { return h != g && h.divides(g); }))
      out.insert(g);
  return out;
}

}  // namespace

TEST(Border, Examples) {
  EXPECT_EQ(border_of(square()), (std::set<Monomial>{{2, 0}, {0, 2}, {2, 1}, {1, 2}}));
  EXPECT_EQ(border_of(ideal({{0, 0}})), (std::set<Monomial>{{1, 0}, {0, 1}}));
  EXPECT_EQ(border_of(OrderIdeal(2)), (std::set<Monomial>{{0, 0}}));
  EXPECT_THROW(ideal({{1, 0}}), DomainError);
}

TEST(Border, StructuralProperties) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const auto I = support::random_zero_dimensional(rng);
    const std::size_t n = I.vars->size();
    const auto O = quotient_basis(reduced_groebner_basis(I.generators, TermOrder::deglex(n)));
    const auto B = border_of(O);
    std::set<Monomial> un = O.monomials();
    for (const auto& b : B) {
      EXPECT_FALSE(O.contains(b));
      un.insert(b);
      if (O.empty()) continue;
      bool from_o = false;
      for (std::size_t k = 0; k < n; ++k)
        if (b[k]) {
          Monomial d(b);
          --d[k];
          from_o = from_o || O.contains(d);
        }
      EXPECT_TRUE(from_o);
    }
    if (!O.empty()) EXPECT_TRUE(is_divisor_closed(un));
  }
}

TEST(Index, Examples) {
  EXPECT_EQ(index_of(Monomial{1, 1}, square()), 0u);
  EXPECT_EQ(index_of(Monomial{2, 0}, square()), 1u);
  EXPECT_EQ(index_of(Monomial{3, 0}, ideal({{0, 0}, {1, 0}})), 2u);
  EXPECT_THROW(index_of(QPoly(xy()), square()), DomainError);
  EXPECT_EQ(index_of(P("x^3 + y", xy()), ideal({{0, 0}, {1, 0}})), 2u);
}

TEST(Index, AgreesWithBorderClosures) {
  const std::vector<OrderIdeal> ideals = {square(), ideal({{0, 0}}), OrderIdeal(2),
                                          ideal({{0, 0}, {1, 0}, {2, 0}, {0, 1}})};
  for (const auto& O : ideals)
    for (Monomial::exponent_type a = 0; a < 5; ++a)
      for (Monomial::exponent_type b = 0; b < 5; ++b) {
        const Monomial m{a, b};
        const unsigned idx = index_of(m, O);
        EXPECT_EQ(idx, closure_index(m, O));
        EXPECT_EQ(idx == 0, O.contains(m));
        EXPECT_LE(index_of(m * Monomial{1, 0}, O), idx + 1);
        EXPECT_LE(index_of(m * Monomial{0, 1}, O), idx + 1);
      }
}

TEST(BorderForm, Examples) {
  EXPECT_EQ(border_form_of(P("x^2 - 6x + 8", xy()), square()), P("x^2", xy()));
  EXPECT_EQ(border_form_of(P("x^2 + x y^2", xy()), square()), P("x^2 + x y^2", xy()));
  EXPECT_TRUE(border_form_of(QPoly(xy()), square()).is_zero());
}

TEST(BorderForm, SupportAndCharacterization) {
  std::mt19937_64 rng(31);
  const auto ord = TermOrder::deglex(2);
  const auto G = reduced_groebner_basis(polys({"x^2 - 6x + 8", "y^2 - 4y + 3"}), ord);
  const auto O = quotient_basis(G);
  for (int i = 0; i < 100; ++i) {
    const QPoly f = support::random_polynomial(rng, xy(), 3, 5);
    const QPoly bf = border_form_of(f, O);
    std::set<unsigned> idx;
    for (const auto& [m, c] : bf) {
      EXPECT_EQ(*f.coefficient(m), c);
      idx.insert(index_of(m, O));
    }
    EXPECT_LE(idx.size(), 1u);
    // Characterization: for ideal members the border form avoids O.
    const QPoly g = f * G.generators[static_cast<std::size_t>(i % 2)];
    if (g.is_zero()) continue;
    for (const auto& [m, c] : border_form_of(g, O)) EXPECT_FALSE(O.contains(m));
  }
}

TEST(GbToBorderBasis, Examples) {
  const auto ord = TermOrder::deglex(2);
  auto B = gb_to_border_basis(reduced_groebner_basis(polys({"x^2 - 6x + 8", "y^2 - 4y + 3"}), ord));
  EXPECT_EQ(B.order_ideal, square());
  EXPECT_EQ(B.elements, polys({"y^2 - 4y + 3", "x^2 - 6x + 8", "x y^2 - 4x y + 3x", "x^2 y - 6x y + 8y"}));
  EXPECT_EQ(B.marks, (std::vector<Monomial>{{0, 2}, {2, 0}, {1, 2}, {2, 1}}));

  B = gb_to_border_basis(reduced_groebner_basis(polys({"x - 1", "y - 2"}), ord));
  EXPECT_EQ(B.order_ideal, ideal({{0, 0}}));
  EXPECT_EQ(B.elements, polys({"y - 2", "x - 1"}));

  B = gb_to_border_basis(reduced_groebner_basis(polys({"1"}), ord));
  EXPECT_TRUE(B.order_ideal.empty());
  EXPECT_EQ(B.elements, polys({"1"}));

  EXPECT_THROW(gb_to_border_basis(reduced_groebner_basis(polys({"x y - 1"}), ord)), NotZeroDimensional);
}

TEST(GbToBorderBasis, EqualsMonomialMinusNormalForm) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 40; ++i) {
    const auto I = support::random_zero_dimensional(rng);
    const auto ord = TermOrder::degrevlex(I.vars->size());
    const auto G = reduced_groebner_basis(I.generators, ord);
    const auto B = gb_to_border_basis(G);
    for (std::size_t k = 0; k < B.elements.size(); ++k) {
      const QPoly mono = QPoly::term(I.vars, B.marks[k], Rational(1));
      EXPECT_EQ(B.elements[k], mono - normal_form(mono, G.generators, ord));
    }
  }
}

TEST(GbToBorderBasis, MarkedIdealIsLeadingIdeal) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    const auto I = support::random_zero_dimensional(rng);
    const auto G = reduced_groebner_basis(I.generators, TermOrder::deglex(I.vars->size()));
    const auto B = gb_to_border_basis(G);
    EXPECT_EQ(minimal_generators(B.marks), as_set(G.leading_monomials()));
  }
}

TEST(CheckBorderBasis, AcceptsAndDiagnoses) {
  const auto F = polys({"x^2 - 6x + 8", "3y^2 - 12y + 9"});
  const auto B = gb_to_border_basis(reduced_groebner_basis(F, TermOrder::deglex(2)));
  EXPECT_TRUE(check_border_basis(B, F, false).ok);

  BorderBasis dropped = B;
  dropped.elements.pop_back();
  dropped.marks.pop_back();
  const auto r = check_border_basis(dropped, F, false);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.reason.find("not covered"), std::string::npos);

  BorderBasis perturbed = B;
  perturbed.elements[0].add_term(Monomial{0, 0}, Rational(1));
  EXPECT_NE(check_border_basis(perturbed, F, false).reason.find("not in the ideal"), std::string::npos);

  BorderBasis scaled = B;
  scaled.elements[1] = scaled.elements[1].scaled(Rational(-7));
  EXPECT_FALSE(check_border_basis(scaled, F, false).ok);
  EXPECT_TRUE(check_border_basis(scaled, F, true).ok);

  BorderBasis unmarked = B;
  unmarked.marks.clear();
  EXPECT_TRUE(check_border_basis(unmarked, F, false).ok);

  BorderBasis wrong_o = B;
  wrong_o.order_ideal = ideal({{0, 0}});
  EXPECT_FALSE(check_border_basis(wrong_o, F, false).ok);
}

TEST(CheckBorderBasis, RandomPerturbationsRejectedPermutationsInvariant) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto I = support::random_zero_dimensional(rng);
    const auto ord = TermOrder::deglex(I.vars->size());
    const auto B = gb_to_border_basis(reduced_groebner_basis(I.generators, ord));
    ASSERT_TRUE(check_border_basis(B, I.generators, false).ok);
    for (std::size_t k = 0; k < B.elements.size(); ++k)
      for (const auto& o : B.order_ideal.monomials()) {
        BorderBasis p = B;
        p.elements[k].add_term(o, Rational(1));
        EXPECT_FALSE(check_border_basis(p, I.generators, false).ok);
      }
    auto shuffled = I.generators;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(gb_to_border_basis(reduced_groebner_basis(shuffled, ord)), B);
  }
}
