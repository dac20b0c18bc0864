#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cbb/errors.hpp"
#include "cbb/groebner.hpp"
#include "support/corpus.hpp"

using namespace cbb;
using cbb::support::P;

namespace {

const VarsPtr& xy() {
  static const VarsPtr v = make_vars({"x", "y"});
  return v;
}

std::vector<QPoly> polys(std::initializer_list<const char*> exprs, const VarsPtr& v = xy()) {
  std::vector<QPoly> out;
  for (const char* e : exprs) out.push_back(P(e, v));
  return out;
}

/// Plain Buchberger closure test: every S-polynomial reduces to zero.
bool s_pairs_vanish(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.generators.size(); ++i)
    for (std::size_t j = i + 1; j < G.generators.size(); ++j) {
      const auto a = leading_data(G.generators[i], G.order), b = leading_data(G.generators[j], G.order);
      const Monomial l = lcm(a.monomial, b.monomial);
      QPoly s = G.generators[i].mul_term(a.monomial.quotient_of(l), a.coefficient.inverse()) -
                G.generators[j].mul_term(b.monomial.quotient_of(l), b.coefficient.inverse());
      if (!normal_form(s, G.generators, G.order).is_zero()) return false;
    }
  return true;
}

bool is_reduced(const GroebnerBasis& G) {
  const auto leads = G.leading_monomials();
  for (std::size_t i = 0; i < G.generators.size(); ++i) {
    if (!leading_data(G.generators[i], G.order).coefficient.is_one()) return false;
    if (i && !G.order.less(leads[i - 1], leads[i])) return false;
    for (const auto& [m, c] : G.generators[i])
      for (std::size_t j = 0; j < leads.size(); ++j)
        if (leads[j].divides(m) && !(i == j && m == leads[i])) return false;
  }
  return true;
}

}  // namespace

TEST(NormalForm, Examples) {
  const auto G = polys({"x^2 - 6x + 8", "y^2 - 4y + 3"});
  const auto ord = TermOrder::deglex(2);
  EXPECT_EQ(normal_form(P("x^2", xy()), G, ord), P("6x - 8", xy()));
  EXPECT_TRUE(normal_form(G[0], G, ord).is_zero());
  EXPECT_EQ(normal_form(P("x y", xy()), G, ord), P("x y", xy()));
}

TEST(Divide, QuotientsReassemble) {
  std::mt19937_64 rng(21);
  const auto ord = TermOrder::degrevlex(2);
  const auto G = polys({"x^2 - y", "x y - 1", "y^3 + x"});
  for (int i = 0; i < 100; ++i) {
    const QPoly f = support::random_polynomial(rng, xy(), 4, 6);
    const auto d = divide(f, G, ord);
    QPoly sum = d.remainder;
    for (std::size_t k = 0; k < G.size(); ++k) sum += d.quotients[k] * G[k];
    EXPECT_EQ(sum, f);
    for (const auto& [m, c] : d.remainder)
      for (const auto& g : G) EXPECT_FALSE(leading_data(g, ord).monomial.divides(m));
  }
}

TEST(ReducedGroebnerBasis, Examples) {
  const auto ord = TermOrder::deglex(2);
  EXPECT_EQ(reduced_groebner_basis(polys({"x^2 - 6x + 8", "3y^2 - 12y + 9"}), ord).generators,
            polys({"y^2 - 4y + 3", "x^2 - 6x + 8"}));
  EXPECT_EQ(reduced_groebner_basis(polys({"x - 1", "y - 2", "x^2 - 6x + 5"}), ord).generators,
            polys({"y - 2", "x - 1"}));
  const auto unit = reduced_groebner_basis(polys({"7"}), ord);
  EXPECT_TRUE(unit.is_unit());
  EXPECT_EQ(unit.generators, polys({"1"}));
  EXPECT_THROW(reduced_groebner_basis(polys({"0", "0"}), ord), DomainError);
}

TEST(ReducedGroebnerBasis, CyclicThree) {
  const VarsPtr v = make_vars({"a", "b", "c"});
  const auto G = reduced_groebner_basis(polys({"a + b + c", "a b + b c + c a", "a b c - 1"}, v),
                                        TermOrder::lex(3));
  EXPECT_EQ(G.generators, polys({"c^3 - 1", "b^2 + b c + c^2", "a + b + c"}, v));
}

TEST(ReducedGroebnerBasis, InvariantsAndPermutationIndependence) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    auto I = support::random_zero_dimensional(rng);
    for (const auto& ord : {TermOrder::deglex(I.vars->size()), TermOrder::lex(I.vars->size()),
                            TermOrder::degrevlex(I.vars->size())}) {
      const auto G = reduced_groebner_basis(I.generators, ord);
      EXPECT_TRUE(is_reduced(G));
      EXPECT_TRUE(s_pairs_vanish(G));
      for (const auto& f : I.generators) EXPECT_TRUE(ideal_membership(f, G));
      auto shuffled = I.generators;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(reduced_groebner_basis(shuffled, ord).generators, G.generators);
    }
  }
}

TEST(Elimination, Examples) {
  const auto F = support::fixture();
  const auto E = elimination_ideal(F.polys, F.ring, OrderKind::DegLex);
  ASSERT_EQ(E.size(), 1u);
  EXPECT_EQ(E[0], P("z^3 - 8z^2 + 19z - 12", F.ring.params));

  const Ring R = Ring::make({"x"}, {"z"});
  EXPECT_EQ(elimination_ideal(polys({"x - z", "x"}, R.all), R, OrderKind::Lex),
            polys({"z"}, R.params));
  EXPECT_TRUE(elimination_ideal(polys({"x^2 + 1"}, R.all), R).empty());
}

TEST(ZeroDimensional, Examples) {
  const auto ord = TermOrder::deglex(2);
  EXPECT_TRUE(is_zero_dimensional(reduced_groebner_basis(polys({"x^2 - 6x + 8", "y^2 - 4y + 3"}), ord)));
  EXPECT_FALSE(is_zero_dimensional(reduced_groebner_basis(polys({"x y"}), ord)));
  const auto F = support::fixture();
  EXPECT_TRUE(is_zero_dimensional(reduced_groebner_basis(F.polys, TermOrder::deglex(3))));
}

TEST(QuotientBasis, Examples) {
  const auto ord = TermOrder::deglex(2);
  const auto O = quotient_basis(reduced_groebner_basis(polys({"x^2 - 6x + 8", "y^2 - 4y + 3"}), ord));
  EXPECT_EQ(O.monomials(), (std::set<Monomial>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(quotient_basis(reduced_groebner_basis(polys({"x - 1", "y - 2"}), ord)).monomials(),
            (std::set<Monomial>{{0, 0}}));
  EXPECT_TRUE(quotient_basis(reduced_groebner_basis(polys({"1"}), ord)).empty());
  EXPECT_THROW(quotient_basis(reduced_groebner_basis(polys({"x y"}), ord)), NotZeroDimensional);
}

TEST(QuotientBasis, MatchesStaircaseEnumeration) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 50; ++i) {
    const auto I = support::random_zero_dimensional(rng);
    const auto G = reduced_groebner_basis(I.generators, TermOrder::deglex(I.vars->size()));
    EXPECT_EQ(quotient_basis(G).size(), support::staircase_count(G.leading_monomials(), I.vars->size()));
  }
}

TEST(IdealMembership, Examples) {
  const auto G = reduced_groebner_basis(polys({"x^2 - 6x + 8", "y^2 - 4y + 3"}), TermOrder::deglex(2));
  EXPECT_TRUE(ideal_membership(P("x^2 y - 6x y + 8y", xy()), G));
  EXPECT_FALSE(ideal_membership(P("x + 1", xy()), G));
  EXPECT_TRUE(ideal_membership(QPoly(xy()), G));
}

TEST(Elimination, RandomParameterIdealsAreZeroDimensional) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto sys = support::random_split_system(rng);
    const auto E = elimination_ideal(sys.polys, sys.ring);
    ASSERT_FALSE(E.empty());
    EXPECT_TRUE(is_zero_dimensional(reduced_groebner_basis(E, TermOrder::deglex(sys.ring.m()))));
  }
}
