#include <gtest/gtest.h>

#include "orbitdual/orbits.hpp"
#include "support.hpp"

using namespace orbitdual;
using testsupport::f4;
using testsupport::f4_orbit;

namespace {
const OrbitDuality& f4_d() { return f4().model.orbit_duality(); }
}  // namespace

TEST(ClosureLeq, ZeroOrbitIsBelowEverything) {
  const auto& p = *f4().model.group;
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_TRUE(closure_leq(f4_orbit("0"), Orbit(p, i)));
}

TEST(ClosureLeq, F4Examples) {
  EXPECT_TRUE(closure_leq(f4_orbit("A1"), f4_orbit("F4(a3)")));
  EXPECT_TRUE(closure_leq(f4_orbit("B2"), f4_orbit("B2")));
  EXPECT_FALSE(closure_leq(f4_orbit("F4(a3)"), f4_orbit("A1")));
  EXPECT_FALSE(closure_leq(f4_orbit("B3"), f4_orbit("C3")));
  EXPECT_FALSE(closure_leq(f4_orbit("C3"), f4_orbit("B3")));
  EXPECT_FALSE(closure_leq(f4_orbit("~A2"), f4_orbit("B2")));
  EXPECT_TRUE(closure_leq(f4_orbit("~A2"), f4_orbit("C3(a1)")));
}

TEST(ClosureLeq, GroupMismatchAndUnknownLabels) {
  auto a3 = classical::make_poset(FamilyKind::A, 3);
  EXPECT_THROW(closure_leq(f4_orbit("0"), Orbit(a3, "(4)")), DomainError);
  EXPECT_THROW(f4_orbit("E8(a1)"), DomainError);
}

TEST(OrbitLabels, TypographicSpellingsAreNormalized) {
  EXPECT_EQ(f4_orbit("\xC3\x83\xE2\x82\x81").label(), "~A1");                     // Ã₁
  EXPECT_EQ(f4_orbit("A\xE2\x82\x81+\xC3\x83\xE2\x82\x82").label(), "A1+~A2");    // A₁+Ã₂
  EXPECT_EQ(f4_orbit("A\xCC\x83" "1+A2").label(), "~A1+A2");                      // combining tilde
  EXPECT_EQ(f4_orbit("F4(a\xE2\x82\x83)").label(), "F4(a3)");
  EXPECT_EQ(f4_orbit(" C3 (a1) ").label(), "C3(a1)");
}

TEST(BvlsDual, F4Examples) {
  EXPECT_EQ(f4_d().dual(f4_orbit("0")).label(), "F4");
  EXPECT_EQ(f4_d().dual(f4_orbit("F4(a3)")).label(), "F4(a3)");
  EXPECT_EQ(f4_d().dual(f4_orbit("A2")).label(), "C3");
  EXPECT_EQ(f4_d().dual(f4_orbit("B2")).label(), "F4(a3)");
}

TEST(BvlsDual, TypeAIsTranspose) {
  auto d = classical::make_duality(FamilyKind::A, 2);
  EXPECT_EQ(d.dual(Orbit(d.group(), "(2,1)")).label(), "(2,1)");
  EXPECT_EQ(d.dual(Orbit(d.group(), "(3)")).label(), "(1,1,1)");
}

TEST(BvlsDual, MissingDualData) {
  auto a2 = classical::make_poset(FamilyKind::A, 2);
  EXPECT_THROW(f4_d().dual(Orbit(a2, "(3)")), DomainError);
}

TEST(IsSpecial, F4Examples) {
  EXPECT_TRUE(f4_d().is_special(f4_orbit("0")));
  EXPECT_TRUE(f4_d().is_special(f4_orbit("F4(a3)")));
  // d(d(~A1)) = d(F4(a1)) = ~A1, while d(d(A1)) = ~A1 != A1.
  EXPECT_TRUE(f4_d().is_special(f4_orbit("~A1")));
  EXPECT_FALSE(f4_d().is_special(f4_orbit("A1")));
  EXPECT_EQ(f4_d().specials(*f4().model.group).size(), 11u);
}

TEST(IsSpecial, F4AgreesWithBundleFlags) {
  const auto& p = *f4().model.group;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Orbit o(p, i);
    EXPECT_EQ(f4_d().is_special(o), *o.info().declared_special) << o.label();
  }
}

TEST(SpecialClosure, Examples) {
  EXPECT_EQ(f4_d().special_closure(f4_orbit("B2")).label(), "F4(a3)");
  EXPECT_EQ(f4_d().special_closure(f4_orbit("0")).label(), "0");
  EXPECT_EQ(f4_d().special_closure(f4_orbit("C3")).label(), "C3");
  EXPECT_EQ(f4_d().special_closure(f4_orbit("A1")).label(), "~A1");
}

// Oracle: all specials above B2 in the raw closure table, minimum by hand.
TEST(SpecialClosure, B2AgreesWithDirectScan) {
  const auto& p = *f4().model.group;
  std::vector<std::string> above;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (*p.info(i).declared_special && p.leq(p.index_of("B2"), i)) above.push_back(p.label(i));
  }
  std::sort(above.begin(), above.end());
  EXPECT_EQ(above, (std::vector<std::string>{"B3", "C3", "F4", "F4(a1)", "F4(a2)", "F4(a3)"}));
}

TEST(SpecialPiece, Examples) {
  EXPECT_EQ(testsupport::labels(f4_d().special_piece_of(f4_orbit("F4(a3)"))),
            (std::vector<std::string>{"A1+~A2", "B2", "C3(a1)", "F4(a3)", "~A1+A2"}));
  EXPECT_EQ(testsupport::labels(f4_d().special_piece_of(f4_orbit("0"))), std::vector<std::string>{"0"});
  auto top = f4_d().special_piece_of(f4_orbit("F4"));
  EXPECT_NE(std::find(top.begin(), top.end(), f4_orbit("F4")), top.end());
}

TEST(ClassicalPoset, VeryEvenOrbitsAreDoubledAndIncomparable) {
  auto d4 = classical::make_poset(FamilyKind::D, 4);
  EXPECT_EQ(d4.size(), 12u);
  Orbit a(d4, "(4,4)I"), b(d4, "(4,4)II"), c(d4, "(2,2,2,2)I"), top(d4, "(7,1)");
  EXPECT_FALSE(closure_leq(a, b));
  EXPECT_FALSE(closure_leq(b, a));
  EXPECT_TRUE(closure_leq(c, a));
  EXPECT_TRUE(closure_leq(c, b));
  EXPECT_TRUE(closure_leq(a, top));
  EXPECT_THROW(Orbit(d4, "(4,4)"), DomainError);
}

TEST(ClassicalPoset, OrbitCounts) {
  // Numbers of nilpotent orbits: B2 4, B3 7, B4 13, C2 4, C3 8, C4 14, D3 5, D4 12.
  EXPECT_EQ(classical::make_poset(FamilyKind::B, 2).size(), 4u);
  EXPECT_EQ(classical::make_poset(FamilyKind::B, 3).size(), 7u);
  EXPECT_EQ(classical::make_poset(FamilyKind::B, 4).size(), 13u);
  EXPECT_EQ(classical::make_poset(FamilyKind::C, 2).size(), 4u);
  EXPECT_EQ(classical::make_poset(FamilyKind::C, 3).size(), 8u);
  EXPECT_EQ(classical::make_poset(FamilyKind::C, 4).size(), 14u);
  EXPECT_EQ(classical::make_poset(FamilyKind::D, 3).size(), 5u);
  EXPECT_EQ(classical::make_poset(FamilyKind::A, 4).size(), 7u);
  EXPECT_THROW(classical::make_poset(FamilyKind::D, 2), DomainError);
}

TEST(ClassicalDual, BAndCExamples) {
  auto b2 = classical::make_duality(FamilyKind::B, 2);
  EXPECT_EQ(b2.group().group_name(), "B2");
  EXPECT_EQ(b2.dual_group().group_name(), "C2");
  EXPECT_EQ(b2.dual(Orbit(b2.group(), "(5)")).label(), "(1,1,1,1)");
  EXPECT_EQ(b2.dual(Orbit(b2.group(), "(1,1,1,1,1)")).label(), "(4)");
  EXPECT_EQ(b2.dual(Orbit(b2.group(), "(3,1,1)")).label(), "(2,2)");
  EXPECT_EQ(b2.dual(Orbit(b2.dual_group(), "(2,1,1)")).label(), "(3,1,1)");
  EXPECT_FALSE(b2.is_special(Orbit(b2.group(), "(2,2,1)")));
  EXPECT_FALSE(b2.is_special(Orbit(b2.dual_group(), "(2,1,1)")));
}

TEST(ClassicalDual, TypeA3IsTransposeOnEveryOrbit) {
  auto d = classical::make_duality(FamilyKind::A, 3);
  for (std::size_t i = 0; i < d.group().size(); ++i) {
    Orbit o(d.group(), i);
    EXPECT_EQ(d.dual(o).label(), transpose(*o.info().partition).to_string());
    EXPECT_TRUE(d.is_special(o));
  }
}

TEST(ClassicalPoset, TypeAWeightedDynkinAndDimension) {
  auto a3 = classical::make_poset(FamilyKind::A, 3);
  const auto& reg = a3.info(a3.index_of("(4)"));
  EXPECT_EQ(*reg.weighted_dynkin, Coweight::integral({2, 2, 2}));
  EXPECT_EQ(*reg.dim, 12);
  const auto& sub = a3.info(a3.index_of("(2,2)"));
  EXPECT_EQ(*sub.weighted_dynkin, Coweight::integral({0, 2, 0}));
  EXPECT_EQ(*sub.dim, 8);
  EXPECT_EQ(*a3.info(a3.index_of("(2,1,1)")).weighted_dynkin, Coweight::integral({1, 0, 1}));
}
