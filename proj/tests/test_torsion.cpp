#include <gtest/gtest.h>

#include <memory>

#include "fixtures.hpp"
#include "strat/error.hpp"
#include "strat/torsion.hpp"

using namespace strat;
using namespace strat::fixtures;

namespace {

MemberSet members(const IndecUniverse &u, std::initializer_list<const char *> labels) {
  MemberSet s;
  for (auto l : labels) s.insert(*u.indexOf(l));
  return s;
}

MemberSet subsetOf(std::size_t mask, std::size_t n) {
  MemberSet s;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.insert(i);
  return s;
}

// Oracle: in a representation-finite category T is a torsion class exactly
// when T equals the left Hom-orthogonal of its right Hom-orthogonal. Hom
// dimensions come straight from the modules, bypassing the universe cache.
bool isDoublePerp(const IndecUniverse &u, const MemberSet &s) {
  const std::size_t n = u.size();
  std::vector<bool> right(n, true);
  for (std::size_t j = 0; j < n; ++j)
    for (auto i : s)
      if (homDim(u.module(i), u.module(j)) != 0) right[j] = false;
  for (std::size_t i = 0; i < n; ++i) {
    bool left = true;
    for (std::size_t j = 0; j < n; ++j)
      if (right[j] && homDim(u.module(i), u.module(j)) != 0) left = false;
    if (left != static_cast<bool>(s.count(i))) return false;
  }
  return true;
}

}  // namespace

TEST(Torsion, GenAndCogen) {
  auto a = a3();
  EXPECT_TRUE(inGen(P(a, "3"), I(a, "2")));
  EXPECT_FALSE(inGen(P(a, "2"), S(a, "3")));
  EXPECT_TRUE(inGen(sum(a, {P(a, "2"), P(a, "1")}), P(a, "2")));
  EXPECT_TRUE(inCogen(I(a, "1"), P(a, "2")));
  EXPECT_FALSE(inCogen(P(a, "1"), S(a, "2")));
}

TEST(Torsion, A3Classes) {
  auto u = std::make_shared<const IndecUniverse>(enumerateIndecomposables(a3()));
  auto a = u->algebra();
  EXPECT_EQ(smallestTorsionClass(*u, {P(a, "1")}), members(*u, {"P(1)"}));
  EXPECT_EQ(smallestTorsionFreeClass(*u, {S(a, "3")}), members(*u, {"S(3)"}));
  auto pair = completeToPair(u, members(*u, {"P(1)"}));
  EXPECT_EQ(pair.free, members(*u, {"S(2)", "S(3)", "I(2)"}));
  EXPECT_EQ(formatMembers(*u, pair.free), "add{I(2), S(2), S(3)}");
  EXPECT_EQ(completeFromFree(u, pair.free), pair);
  EXPECT_FALSE(isSplitting(pair));
  // torsion part of P(2) is its socle P(1)
  auto d = torsionFunctor(pair, P(a, "2"));
  EXPECT_EQ(d.torsionPart.module.dims(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_TRUE(inFree(pair, d.freePart.module));
}

TEST(Torsion, A3BruteForce) {
  auto u = std::make_shared<const IndecUniverse>(enumerateIndecomposables(a3()));
  const std::size_t n = u->size();
  std::vector<MemberSet> torsionClasses, freeClasses;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    MemberSet s = subsetOf(mask, n);
    bool oracle = isDoublePerp(*u, s);
    EXPECT_EQ(!torsionClassViolation(*u, s).has_value(), oracle) << formatMembers(*u, s);
    if (oracle) torsionClasses.push_back(s);
    if (!torsionFreeClassViolation(*u, s)) freeClasses.push_back(s);
  }
  // torsion classes of linear A_n are counted by Catalan numbers
  EXPECT_EQ(torsionClasses.size(), 14u);
  EXPECT_EQ(freeClasses.size(), 14u);

  // T(C) is the smallest torsion class containing C, F(C) the smallest
  // torsion-free class
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    MemberSet c = subsetOf(mask, n);
    std::vector<Representation> mods;
    for (auto i : c) mods.push_back(u->module(i));
    auto smallest = [&](const std::vector<MemberSet> &classes) {
      const MemberSet *best = nullptr;
      for (const auto &t : classes)
        if (std::includes(t.begin(), t.end(), c.begin(), c.end()) &&
            (!best || t.size() < best->size()))
          best = &t;
      return *best;
    };
    EXPECT_EQ(smallestTorsionClass(*u, mods), smallest(torsionClasses));
    EXPECT_EQ(smallestTorsionFreeClass(*u, mods), smallest(freeClasses));
  }
}

TEST(Torsion, G8) {
  auto u = std::make_shared<const IndecUniverse>(enumerateIndecomposables(g8()));
  auto g = u->algebra();
  EXPECT_EQ(smallestTorsionClass(*u, {S(g, "4")}), members(*u, {"S(4)"}));
  EXPECT_EQ(smallestTorsionFreeClass(*u, {P(g, "1")}), members(*u, {"P(1)"}));

  auto pair = completeToPair(u, members(*u, {"P(3)", "P(4)", "S(3)", "S(4)"}));
  EXPECT_EQ(pair.free, members(*u, {"P(1)", "P(2)", "S(2)"}));
  auto d = torsionFunctor(pair, I(g, "1"));
  EXPECT_TRUE(isIsomorphic(d.torsionPart.module, P(g, "3")));
  EXPECT_TRUE(isIsomorphic(d.freePart.module, S(g, "2")));
  EXPECT_FALSE(isSplitting(pair));

  // the five pairs of the nested family; each is splitting except k = 2
  const std::vector<std::vector<const char *>> ts = {
      {"P(2)", "P(3)", "P(4)", "I(1)", "S(2)", "S(3)", "S(4)"},
      {"P(3)", "P(4)", "S(3)", "S(4)"},
      {"P(4)", "S(3)", "S(4)"},
      {"S(4)"},
      {}};
  const std::vector<std::vector<const char *>> fs = {
      {"P(1)"},
      {"P(1)", "P(2)", "S(2)"},
      {"P(1)", "P(2)", "P(3)", "I(1)", "S(2)"},
      {"P(1)", "P(2)", "P(3)", "P(4)", "I(1)", "S(2)", "S(3)"},
      {"P(1)", "P(3)", "P(2)", "P(4)", "I(1)", "S(2)", "S(3)", "S(4)"}};
  for (std::size_t k = 0; k < ts.size(); ++k) {
    MemberSet t, f;
    for (auto l : ts[k]) t.insert(*u->indexOf(l));
    for (auto l : fs[k]) f.insert(*u->indexOf(l));
    auto p = completeToPair(u, t);
    EXPECT_EQ(p.free, f) << k + 1;
    EXPECT_EQ(isSplitting(p), k + 1 != 2) << k + 1;
  }
}

TEST(Torsion, Witnesses) {
  auto u = std::make_shared<const IndecUniverse>(enumerateIndecomposables(a3()));
  // P(2) alone is not closed under quotients
  auto w = torsionClassViolation(*u, members(*u, {"P(2)"}));
  ASSERT_TRUE(w);
  EXPECT_NE(w->find("S(2)"), std::string::npos);
  try {
    completeToPair(u, members(*u, {"P(2)"}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::CheckFailed);
  }
  // S(2) and P(1) together miss their extension P(2)
  EXPECT_TRUE(torsionClassViolation(*u, members(*u, {"S(2)", "P(1)"})));
  EXPECT_FALSE(torsionClassViolation(*u, members(*u, {"S(2)", "P(1)", "P(2)"})));
}

TEST(Torsion, PairProperties) {
  auto u = std::make_shared<const IndecUniverse>(enumerateIndecomposables(g8()));
  const std::size_t n = u->size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    MemberSet s = subsetOf(mask, n);
    if (torsionClassViolation(*u, s)) continue;
    auto pair = completeToPair(u, s);
    for (std::size_t i = 0; i < n; ++i) {
      // every module has a unique torsion/torsion-free decomposition
      auto d = torsionFunctor(pair, u->module(i));
      EXPECT_TRUE(inTorsion(pair, d.torsionPart.module));
      EXPECT_TRUE(inFree(pair, d.freePart.module));
      EXPECT_EQ(inTorsion(pair, u->module(i)), static_cast<bool>(pair.torsion.count(i)));
      EXPECT_EQ(inFree(pair, u->module(i)), static_cast<bool>(pair.free.count(i)));
    }
  }
}
