#include <gtest/gtest.h>

#include "orbitdual/duality.hpp"
#include "support.hpp"

using namespace orbitdual;
using testsupport::f4;
using testsupport::f4_orbit;

namespace {

const AcharDuality& D() { return f4().model.achar(); }
BarClass bc(const std::string& orbit, const std::string& cls) { return D().bar_class(f4_orbit(orbit), cls); }
OrbitPair pair(const std::string& a, const std::string& b) { return {f4_orbit(a), f4_orbit(b)}; }

}  // namespace

TEST(BarClass, LabelsAreValidatedAndNormalized) {
  EXPECT_EQ(bc("F4(a3)", " (12) (34) ").class_label, "(12)(34)");
  EXPECT_THROW(bc("B2", "(12)"), DomainError);
  EXPECT_EQ(D().elements(*f4().model.group).size(), 22u);
  for (const auto& x : D().elements(*f4().model.group)) {
    const auto& cls = D().classes(x.orbit);
    EXPECT_NE(std::find(cls.begin(), cls.end(), "1"), cls.end());
  }
}

TEST(SommersDual, Examples) {
  EXPECT_EQ(D().sommers_dual(bc("F4(a3)", "1")).label(), "F4(a3)");
  EXPECT_EQ(D().sommers_dual(bc("A2", "1")).label(), "C3");
  auto a2 = make_type_a_duality(2);
  EXPECT_EQ(a2.sommers_dual(a2.bar_class(a2.group(), "(2,1)", "1")).label(), "(2,1)");
}

TEST(SommersDual, IsSurjective) {
  std::set<std::string> hit;
  for (const auto& x : D().elements(*f4().model.group)) hit.insert(D().sommers_dual(x).label());
  EXPECT_EQ(hit.size(), f4().model.group->size());
}

TEST(Embed, Examples) {
  EXPECT_EQ(D().embed(bc("F4(a3)", "1")), pair("F4(a3)", "F4(a3)"));
  EXPECT_EQ(D().embed(bc("0", "1")), pair("0", "F4"));
  EXPECT_EQ(D().embed(bc("A1", "1")), pair("A1", "F4(a1)"));
}

TEST(PairLeq, Examples) {
  auto p = pair("0", "F4");
  auto q = pair("F4(a3)", "F4(a3)");
  EXPECT_TRUE(D().pair_leq(p, p));
  EXPECT_TRUE(D().pair_leq(p, q));
  EXPECT_FALSE(D().pair_leq(q, p));
  auto a2 = classical::make_poset(FamilyKind::A, 2);
  EXPECT_THROW(D().pair_leq(p, OrbitPair{Orbit(a2, "(3)"), Orbit(a2, "(3)")}), DomainError);
}

// Oracle: scan every element of the dual side for one whose embedding is the flip.
static bool flip_in_image(const BarClass& x) {
  const OrbitPair e = D().embed(x);
  for (const auto& y : D().elements(*f4().model.group)) {
    if (D().embed(y) == OrbitPair{e.o_dual, e.o}) return true;
  }
  return false;
}

TEST(IsSpecialPair, Examples) {
  EXPECT_TRUE(D().is_special_pair(bc("F4(a3)", "1")));
  EXPECT_TRUE(D().is_special_pair(bc("0", "1")));
  EXPECT_EQ(D().is_special_pair(bc("~A1", "1")), flip_in_image(bc("~A1", "1")));
  EXPECT_TRUE(D().is_special_pair(bc("~A1", "1")));
  EXPECT_FALSE(D().is_special_pair(bc("~A1", "(12)")));
  EXPECT_TRUE(D().is_special_pair(bc("A1", "1")));
  EXPECT_TRUE(D().is_special_pair(bc("B2", "1")));
}

TEST(IsSpecialPair, AgreesWithScanOnEveryElement) {
  int specials = 0;
  for (const auto& x : D().elements(*f4().model.group)) {
    EXPECT_EQ(D().is_special_pair(x), flip_in_image(x)) << x.to_string();
    specials += D().is_special_pair(x);
  }
  EXPECT_EQ(specials, 21);  // all but (~A1,(12))
}

TEST(MinSpecialCover, Examples) {
  EXPECT_EQ(D().min_special_cover(bc("F4(a3)", "(123)")), bc("F4(a3)", "(123)"));
  EXPECT_EQ(D().min_special_cover(bc("0", "1")), bc("0", "1"));
  EXPECT_EQ(D().min_special_cover(bc("B2", "1")), bc("B2", "1"));
}

// Oracle for ~A1 with the non-trivial class: specials above it in the
// product order, then the minimum by pairwise comparison.
TEST(MinSpecialCover, NonSpecialElementOfTildeA1) {
  const BarClass x = bc("~A1", "(12)");
  const OrbitPair ex = D().embed(x);
  std::vector<BarClass> above;
  for (const auto& y : D().elements(*f4().model.group)) {
    const OrbitPair ey = D().embed(y);
    if (flip_in_image(y) && closure_leq(ex.o, ey.o) && closure_leq(ey.o_dual, ex.o_dual)) above.push_back(y);
  }
  std::vector<BarClass> minimal;
  for (const auto& y : above) {
    bool is_min = std::none_of(above.begin(), above.end(), [&](const BarClass& z) {
      return !(z == y) && D().leq(z, y);
    });
    if (is_min) minimal.push_back(y);
  }
  ASSERT_EQ(minimal.size(), 1u);
  EXPECT_EQ(D().min_special_cover(x), minimal.front());
  EXPECT_EQ(minimal.front(), bc("A1+~A1", "1"));
  EXPECT_EQ(D().achar_dual(x), bc("F4(a2)", "1"));
}

TEST(AcharDual, Examples) {
  EXPECT_EQ(D().achar_dual(bc("F4(a3)", "1")), bc("F4(a3)", "1"));
  EXPECT_EQ(D().achar_dual(bc("A1", "1")), bc("F4(a1)", "(12)"));
  EXPECT_EQ(D().achar_dual(bc("B2", "1")), bc("F4(a3)", "(12)(34)"));
  EXPECT_EQ(D().achar_dual(bc("0", "1")), bc("F4", "1"));
  EXPECT_EQ(D().achar_dual(bc("~A1+A2", "1")), bc("F4(a3)", "(1234)"));
  EXPECT_EQ(D().achar_dual(bc("F4(a3)", "(1234)")), bc("~A1+A2", "1"));
}

namespace {

void check_identities(const AcharDuality& ad) {
  std::vector<const OrbitPoset*> sides{&ad.group()};
  if (!ad.self_dual()) sides.push_back(&ad.dual_group());
  const auto& d = ad.orbit_duality();
  for (const auto* p : sides) {
    EXPECT_TRUE(ad.embedding_collisions(*p).empty());
    auto all = ad.elements(*p);
    for (const auto& x : all) {
      const BarClass once = ad.achar_dual(x);
      EXPECT_EQ(once.orbit, ad.sommers_dual(x)) << x.to_string();
      EXPECT_EQ(ad.achar_dual(ad.achar_dual(once)), once) << x.to_string();
      if (ad.is_special_pair(x)) {
        EXPECT_EQ(ad.achar_dual(once), x) << x.to_string();
      }
      EXPECT_TRUE(ad.is_special_pair(once)) << x.to_string();
      for (const auto& y : all) {
        if (ad.leq(x, y)) {
          EXPECT_TRUE(ad.leq(ad.achar_dual(y), once)) << x.to_string() << " " << y.to_string();
        }
      }
    }
    for (std::size_t i = 0; i < p->size(); ++i) {
      Orbit o(*p, i);
      EXPECT_EQ(ad.sommers_dual(ad.trivial(o)), d.dual(o));
    }
  }
}

}  // namespace

TEST(AcharProperties, F4) { check_identities(D()); }

TEST(AcharProperties, TypeA) {
  for (int r = 1; r <= 5; ++r) check_identities(make_type_a_duality(r));
}

TEST(AcharProperties, TypeADualIsTransposeWithTrivialClass) {
  auto a4 = make_type_a_duality(4);
  for (const auto& x : a4.elements(a4.group())) {
    EXPECT_EQ(a4.achar_dual(x).orbit.label(), transpose(*x.orbit.info().partition).to_string());
    EXPECT_EQ(a4.achar_dual(x).class_label, "1");
  }
}
