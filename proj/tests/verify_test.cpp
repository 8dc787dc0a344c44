#include <gtest/gtest.h>

#include <random>

#include "invforge/invforge.hpp"
#include "test_support.hpp"

using namespace invforge;
using invforge::testing::cv;
using invforge::testing::make_graph;

namespace {

Multigraph directed(const std::vector<std::vector<unsigned>>& a) { return Multigraph::from_matrix(Flavor::DirectedLoops, a); }

Invariant gl2_invariant(const std::vector<std::vector<unsigned>>& a) { return graph_invariant(GroupKind::gl(2), directed(a)); }

PsiElement random_vector_field(std::mt19937_64& rng, unsigned n) {
  const auto group = GroupKind::gl(n);
  PsiPoly p;
  for (unsigned i = 1; i <= n; ++i) {
    const auto f = invforge::testing::random_psi(rng, GroupKind::o(n), 5, 3);
    PsiPoly coeffs;
    for (const auto& [mono, c] : f.poly()) coeffs.add_term(mono, c);
    p += coeffs * PsiPoly::variable({PsiVar::Kind::D, i});
  }
  return PsiElement(group, std::move(p));
}

}  // namespace

TEST(Coefficient, SingleMonomial) {
  EXPECT_EQ(coefficient(parse_psi(GroupKind::o(3), "x1^2"), {2, 0, 0}), 1);
  EXPECT_EQ(coefficient(parse_psi(GroupKind::gl(2), "x1^2"), {2, 0}, {0, 0}), 1);
}

TEST(Coefficient, VectorFieldConstantTerm) {
  EXPECT_EQ(coefficient(invforge::testing::vector_field_psi(), {0, 0}, {1, 0}), 1);
  EXPECT_EQ(coefficient(invforge::testing::vector_field_psi(), {1, 0}, {0, 1}), 4);
}

TEST(Coefficient, AbsentMonomialIsZero) {
  EXPECT_EQ(coefficient(invforge::testing::vector_field_psi(), {3, 0}, {1, 0}), 0);
}

TEST(Coefficient, LengthMismatch) {
  EXPECT_THROW(coefficient(invforge::testing::vector_field_psi(), {1, 0, 0}, {1, 0}), LengthMismatch);
  EXPECT_THROW(coefficient(parse_psi(GroupKind::o(2), "x1"), {1, 0}, {0, 0}), LengthMismatch);
}

TEST(PsiParser, ParsesAndRejects) {
  const auto psi = parse_psi(GroupKind::o(2), "-(x1 - 2x2)^2 / 4 + 3");
  EXPECT_EQ(coefficient(psi, {2, 0}), Rational(-1, 4));
  EXPECT_EQ(coefficient(psi, {1, 1}), 1);
  EXPECT_EQ(coefficient(psi, {0, 2}), -1);
  EXPECT_EQ(coefficient(psi, {0, 0}), 3);
  EXPECT_THROW(parse_psi(GroupKind::o(2), "x1 +"), ParseError);
  EXPECT_THROW(parse_psi(GroupKind::o(2), "x1 / 0"), ParseError);
  EXPECT_THROW(parse_psi(GroupKind::o(2), "y1"), ParseError);
  EXPECT_THROW(parse_psi(GroupKind::o(2), "x3"), DimensionMismatch);
  EXPECT_THROW(parse_psi(GroupKind::o(2), "d1"), DimensionMismatch);
}

TEST(PsiBuilders, ConicAndBinaryForm) {
  const auto c = conic(1, 2, 3, 4, 5, 6);
  EXPECT_EQ(coefficient(c, {2, 0}), 1);
  EXPECT_EQ(coefficient(c, {1, 1}), 2);
  EXPECT_EQ(coefficient(c, {0, 2}), 3);
  EXPECT_EQ(coefficient(c, {1, 0}), 4);
  EXPECT_EQ(coefficient(c, {0, 1}), 5);
  EXPECT_EQ(coefficient(c, {0, 0}), 6);
  const auto b = binary_form({7, 8, 9});
  EXPECT_EQ(b, parse_psi(GroupKind::sp(1), "7 x1^2 + 8 x1 x2 + 9 x2^2"));
}

TEST(Evaluate, VectorFieldInvariants) {
  const auto psi = invforge::testing::vector_field_psi();
  EXPECT_EQ(evaluate(gl2_invariant({{1, 0}, {0, 1}}), psi), 4);
  EXPECT_EQ(evaluate(gl2_invariant({{0, 1}, {1, 0}}), psi), 36);
  EXPECT_EQ(evaluate(gl2_invariant({{1, 0}, {1, 0}}), psi), 16);
  EXPECT_EQ(evaluate(gl2_invariant({{2, 0}, {0, 0}}), psi), 0);
  EXPECT_EQ(evaluate(gl2_invariant({{0, 2}, {0, 0}}), psi), 0);
  EXPECT_EQ(evaluate(gl2_invariant({{1, 1}, {0, 0}}), psi), 0);
}

TEST(Evaluate, ZeroElement) {
  const PsiElement zero(GroupKind::gl(2), PsiPoly());
  for (const auto& e : spanning_set(GroupKind::gl(2), 2, 2)) EXPECT_EQ(evaluate(e.invariant, zero), 0);
}

TEST(Evaluate, GroupMismatch) {
  EXPECT_THROW(evaluate(gl2_invariant({{1, 0}, {0, 1}}), parse_psi(GroupKind::gl(3), "x1 d1")), GroupMismatch);
}

TEST(Evaluate, HomogeneousOfDegreeD) {
  std::mt19937_64 rng(41);
  const Rational t(-3, 2);
  for (const auto& g : {GroupKind::gl(2), GroupKind::o(2), GroupKind::sp(1)}) {
    for (unsigned d = 1; d <= 3; ++d) {
      for (const auto& e : spanning_set(g, d, 2)) {
        const auto psi = invforge::testing::random_psi(rng, g, 8, 4);
        PsiPoly scaled = psi.poly();
        scaled *= t;
        Rational td = 1;
        for (unsigned i = 0; i < d; ++i) td *= t;
        ASSERT_EQ(evaluate(e.invariant, PsiElement(g, scaled)), td * evaluate(e.invariant, psi));
      }
    }
  }
}

TEST(Evaluate, VectorFieldVanishesOffDynamicalSystems) {
  std::mt19937_64 rng(43);
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (const auto& e : spanning_set(GroupKind::gl(2), d, k)) {
        bool functional = true;
        for (unsigned i = 0; i < d; ++i) functional = functional && e.graph.out_degree(i) == 1;
        if (functional) continue;
        for (int t = 0; t < 3; ++t) ASSERT_EQ(evaluate(e.invariant, random_vector_field(rng, 2)), 0);
      }
    }
  }
}

TEST(GroupAction, IdentityFixes) {
  const auto psi = invforge::testing::vector_field_psi();
  EXPECT_EQ(group_action(GroupElement(GroupKind::gl(2), RationalMatrix::identity(2)), psi), psi);
}

TEST(GroupAction, VectorFieldExample) {
  const auto gpsi = group_action(invforge::testing::vector_field_g(), invforge::testing::vector_field_psi());
  const auto expected = parse_psi(
      GroupKind::gl(2),
      "-(1/2 x1^2 + 2 x2^2 + 2 x1 x2 + 4 x1 + 8 x2 + 8) d1 + (1/4 x1^2 + x2^2 - x1 x2 - x1 + 2 x2 + 1) d2");
  EXPECT_EQ(gpsi, expected);
}

TEST(GroupAction, Composition) {
  std::mt19937_64 rng(47);
  std::uint64_t seed = 1;
  for (const auto& g : {GroupKind::gl(2), GroupKind::gl(3), GroupKind::o(2), GroupKind::o(3), GroupKind::sp(1),
                        GroupKind::sp(2)}) {
    for (int t = 0; t < 10; ++t) {
      const auto a = random_group_element(g, seed++);
      const auto b = random_group_element(g, seed++);
      const auto psi = invforge::testing::random_psi(rng, g, 5, 3);
      ASSERT_EQ(group_action(a * b, psi), group_action(a, group_action(b, psi))) << g.to_string();
    }
  }
}

TEST(RandomGroupElement, DefiningRelations) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto o = random_group_element(GroupKind::o(2), seed).matrix();
    EXPECT_EQ(o.transpose() * o, RationalMatrix::identity(2));
    const auto o3 = random_group_element(GroupKind::o(3), seed).matrix();
    EXPECT_EQ(o3.transpose() * o3, RationalMatrix::identity(3));
    for (unsigned n = 1; n <= 2; ++n) {
      const auto j = RationalMatrix::symplectic_form(n);
      const auto s = random_group_element(GroupKind::sp(n), seed).matrix();
      EXPECT_EQ(s.transpose() * j * s, j);
    }
    EXPECT_NE(random_group_element(GroupKind::gl(3), seed).matrix().determinant(), 0);
  }
}

TEST(RandomGroupElement, SeedZeroIsIdentity) {
  for (const auto& g : {GroupKind::gl(2), GroupKind::o(3), GroupKind::sp(2)}) {
    EXPECT_EQ(random_group_element(g, 0).matrix(), RationalMatrix::identity(g.dim_v()));
  }
}

TEST(RandomGroupElement, Deterministic) {
  EXPECT_EQ(random_group_element(GroupKind::sp(2), 9).matrix(), random_group_element(GroupKind::sp(2), 9).matrix());
}

TEST(GroupElement, RejectsNonMembers) {
  EXPECT_THROW(GroupElement(GroupKind::o(2), RationalMatrix::from_rows({{1, 1}, {0, 1}})), WrongGroup);
  EXPECT_THROW(GroupElement(GroupKind::sp(1), RationalMatrix::from_rows({{2, 0}, {0, 1}})), WrongGroup);
  EXPECT_THROW(GroupElement(GroupKind::gl(2), RationalMatrix::from_rows({{1, 2}, {2, 4}})), WrongGroup);
  EXPECT_THROW(GroupElement(GroupKind::gl(2), RationalMatrix::identity(3)), DimensionMismatch);
}

TEST(InvarianceCheck, VectorFieldExample) {
  const auto psi = invforge::testing::vector_field_psi();
  const auto g = invforge::testing::vector_field_g();
  for (const auto& a : std::vector<std::vector<std::vector<unsigned>>>{{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 0}, {1, 0}}}) {
    const auto inv = gl2_invariant(a);
    EXPECT_TRUE(invariance_check(inv, psi, g));
    EXPECT_EQ(evaluate(inv, group_action(g, psi)), evaluate(inv, psi));
  }
}

TEST(InvarianceCheck, ConicInvariantsUnderRandomRotations) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const auto o2 = GroupKind::o(2);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_group_element(o2, seed);
    const auto psi = conic(coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    for (unsigned d = 1; d <= 3; ++d) {
      for (unsigned k = 0; k <= 2; ++k) {
        for (const auto& e : spanning_set(o2, d, k)) ASSERT_TRUE(invariance_check(e.invariant, psi, g));
      }
    }
  }
}

TEST(InvarianceCheck, SingleCoefficientIsNotInvariant) {
  const auto o2 = GroupKind::o(2);
  const Invariant single{o2, 1, 1, InvariantPoly::variable(cv({2, 0}))};
  const GroupElement rotation(o2, RationalMatrix::from_rows({{Rational(3, 5), Rational(-4, 5)},
                                                             {Rational(4, 5), Rational(3, 5)}}));
  EXPECT_FALSE(invariance_check(single, parse_psi(o2, "x1^2"), rotation));
}

TEST(SpanRank, LinearlyIndependentBasis) {
  std::vector<Invariant> invs;
  for (const auto& e : spanning_set(GroupKind::gl(2), 2, 2)) invs.push_back(e.invariant);
  EXPECT_EQ(span_rank(invs), 6u);
  invs.push_back(invs[0]);
  EXPECT_EQ(span_rank(invs), 6u);
}

TEST(SpanRank, RankOneCollapse) {
  const auto set = spanning_set(GroupKind::gl(1), 2, 2);
  EXPECT_EQ(set.size(), 6u);
  EXPECT_EQ(Integer(static_cast<unsigned long>(span_rank(set))), closed_form_rank1(GroupKind::gl(1), 2, 2));
  EXPECT_LT(span_rank(set), set.size());
}

TEST(SpanRank, Empty) { EXPECT_EQ(span_rank(std::vector<Invariant>{}), 0u); }

TEST(SpanRank, MixedComponents) {
  std::vector<Invariant> invs{gl2_invariant({{1, 0}, {0, 1}}), graph_invariant(GroupKind::gl(2), directed({{1}}))};
  EXPECT_THROW(span_rank(invs), MixedComponents);
}

TEST(StableRange, Examples) {
  EXPECT_TRUE(stable_range(GroupKind::gl(4), 3, 5));
  EXPECT_FALSE(stable_range(GroupKind::gl(1), 2, 2));
  EXPECT_TRUE(stable_range(GroupKind::sp(1), 2, 7));
  EXPECT_FALSE(stable_range(GroupKind::sp(1), 4, 4));
  EXPECT_TRUE(stable_range(GroupKind::o(2), 5, 2));
}

TEST(VerifyDimension, GlTwo) {
  const auto r = verify_dimension(GroupKind::gl(2), 2, 2);
  EXPECT_EQ(r.graph_count, 6u);
  EXPECT_EQ(r.rank, 6u);
  EXPECT_EQ(r.dimension, 6);
  EXPECT_TRUE(r.stable);
}

TEST(VerifyDimension, GlOneUnstable) {
  const auto r = verify_dimension(GroupKind::gl(1), 2, 2);
  EXPECT_EQ(r.graph_count, 6u);
  EXPECT_EQ(r.dimension, closed_form_rank1(GroupKind::gl(1), 2, 2));
  EXPECT_EQ(Integer(static_cast<unsigned long>(r.rank)), r.dimension);
  EXPECT_FALSE(r.stable);
}

TEST(VerifyDimension, SymplecticOddWeight) {
  const auto r = verify_dimension(GroupKind::sp(1), 2, 3);
  EXPECT_EQ(r.graph_count, 0u);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.dimension, 0);
}

TEST(VerifyDimension, InconsistentReport) {
  DimensionReport r{GroupKind::gl(2), 2, 2, 6, 5, 6, true};
  EXPECT_FALSE(r.consistent());
  r.rank = 6;
  EXPECT_TRUE(r.consistent());
  DimensionReport unstable{GroupKind::gl(1), 2, 2, 6, 5, 5, false};
  EXPECT_TRUE(unstable.consistent());
}

TEST(VerificationSweep, OrderedAndConsistent) {
  std::vector<SweepItem> items;
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned d = 1; d <= 3; ++d) {
      for (unsigned k = 0; k <= 3; ++k) {
        items.push_back({GroupKind::gl(n), d, k});
        items.push_back({GroupKind::o(n), d, k});
        items.push_back({GroupKind::sp(n), d, k});
      }
    }
  }
  const auto reports = verification_sweep(items, 4);
  ASSERT_EQ(reports.size(), items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    EXPECT_EQ(reports[i].group, items[i].group);
    EXPECT_EQ(reports[i].d, items[i].d);
    EXPECT_EQ(reports[i].k, items[i].k);
    EXPECT_TRUE(reports[i].consistent()) << reports[i].to_string();
  }
}

TEST(ExactInvariance, RandomElementsAndFields) {
  std::mt19937_64 rng(59);
  std::uint64_t seed = 100;
  struct Case {
    GroupKind group;
    unsigned d_max;
    unsigned k_max;
  };
  const Case cases[] = {{GroupKind::gl(1), 2, 2}, {GroupKind::gl(2), 2, 2}, {GroupKind::o(2), 3, 2},
                        {GroupKind::o(3), 2, 2},  {GroupKind::sp(1), 3, 3}, {GroupKind::sp(2), 2, 2}};
  for (const auto& c : cases) {
    for (int t = 0; t < 3; ++t) {
      const auto g = random_group_element(c.group, seed++);
      const auto psi = invforge::testing::random_psi(rng, c.group, 8, 4);
      const auto gpsi = group_action(g, psi);
      for (unsigned d = 1; d <= c.d_max; ++d) {
        for (unsigned k = 0; k <= c.k_max; ++k) {
          for (const auto& e : spanning_set(c.group, d, k)) {
            ASSERT_EQ(evaluate(e.invariant, gpsi), evaluate(e.invariant, psi))
                << c.group.to_string() << " " << graph_to_text(e.graph);
          }
        }
      }
    }
  }
}
