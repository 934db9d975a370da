#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>

#include "fixtures.hpp"
#include "strat/error.hpp"
#include "strat/homological.hpp"
#include "strat/strata.hpp"

using namespace strat;
using namespace strat::fixtures;

namespace {

UniversePtr universeOf(const AlgebraPtr &a) {
  return std::make_shared<const IndecUniverse>(enumerateIndecomposables(a));
}

MemberSet members(const IndecUniverse &u, const std::vector<const char *> &labels) {
  MemberSet s;
  for (auto l : labels) s.insert(*u.indexOf(l));
  return s;
}

TorsionPair pairFromTorsion(const UniversePtr &u, const std::vector<const char *> &t) {
  return completeToPair(u, members(*u, t));
}

// T_1 = add{P(1), P(2), S(2)}, T_2 = add{P(1)}
NestedFamily a3Family(const UniversePtr &u) {
  return verifyNested(u, {}, {pairFromTorsion(u, {"P(1)", "P(2)", "S(2)"}),
                              pairFromTorsion(u, {"P(1)"})});
}

NestedFamily g8Family(const UniversePtr &u) {
  return verifyNested(u, {},
                      {pairFromTorsion(u, {"P(2)", "P(3)", "P(4)", "I(1)", "S(2)", "S(3)", "S(4)"}),
                       pairFromTorsion(u, {"P(3)", "P(4)", "S(3)", "S(4)"}),
                       pairFromTorsion(u, {"P(4)", "S(3)", "S(4)"}),
                       pairFromTorsion(u, {"S(4)"}), pairFromTorsion(u, {})});
}

bool partsIsomorphic(const std::vector<Representation> &a, const std::vector<Representation> &b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!isIsomorphic(a[k], b[k])) return false;
  return true;
}

// ordered set partitions of {0..n-1} into nonempty blocks
void orderedPartitions(std::size_t n, std::vector<std::vector<std::vector<std::size_t>>> &out) {
  std::vector<std::size_t> block(n, 0);
  // block[i] is the block index of element i; keep assignments whose used
  // blocks are exactly 0..t-1
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::size_t t = *std::max_element(block.begin(), block.end()) + 1;
      std::vector<std::vector<std::size_t>> parts(t);
      for (std::size_t e = 0; e < n; ++e) parts[block[e]].push_back(e);
      for (const auto &p : parts)
        if (p.empty()) return;
      out.push_back(parts);
      return;
    }
    for (std::size_t b = 0; b < n; ++b) {
      block[i] = b;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

TEST(Strata, VerifyNested) {
  auto u = universeOf(a3());
  auto g = a3Family(u);
  EXPECT_EQ(g.witnesses.size(), 1u);
  try {
    auto p = pairFromTorsion(u, {"P(1)"});
    verifyNested(u, {"a", "b"}, {p, p});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::CheckFailed);
    EXPECT_NE(std::string(e.what()).find("(a,b)"), std::string::npos);
  }
  EXPECT_THROW(OrderedDecomposition({Representation::zero(u->algebra()), P(u->algebra(), "1")}),
               Error);
}

TEST(Strata, A3Example) {
  auto u = universeOf(a3());
  auto a = u->algebra();
  auto g = a3Family(u);

  auto c = classifyM(OrderedDecomposition({sum(a, {P(a, "2"), S(a, "2")}), P(a, "1")}), g);
  EXPECT_TRUE(c.compatible);
  EXPECT_FALSE(c.star);
  EXPECT_TRUE(c.starFailure.has_value());

  c = classifyM(OrderedDecomposition({S(a, "2"), P(a, "1")}), g);
  EXPECT_TRUE(c.star);

  // P(1) in the first part violates t3
  c = classifyM(OrderedDecomposition({P(a, "1"), P(a, "1")}), g);
  EXPECT_FALSE(c.compatible);
  EXPECT_FALSE(c.star);

  for (std::size_t n1 : {1, 2})
    for (std::size_t n2 : {1, 2})
      for (std::size_t n3 : {1, 2}) {
        OrderedDecomposition dec(
            {sum(a, {power(a, P(a, "2"), n1), power(a, S(a, "2"), n2)}), power(a, P(a, "1"), n3)});
        auto s = stratum(dec, g);
        EXPECT_TRUE(isIsomorphic(s.parts[0], power(a, S(a, "2"), n1 + n2)));
        EXPECT_TRUE(isIsomorphic(s.parts[1], power(a, P(a, "1"), n3)));
        for (const auto &m : s.maps) EXPECT_TRUE(m.isSurjective());
        // the stratum is its own stratum and lies in M*
        OrderedDecomposition sdec(s.parts);
        EXPECT_TRUE(classifyM(sdec, g).star);
        EXPECT_TRUE(partsIsomorphic(stratum(sdec, g).parts, s.parts));
      }
}

TEST(Strata, Uniqueness) {
  auto u = universeOf(a3());
  auto a = u->algebra();
  auto g = a3Family(u);
  std::vector<Representation> summands = {P(a, "2"), S(a, "2"), P(a, "1")};
  std::vector<std::vector<Representation>> compatibleParts;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    std::vector<Representation> first, second;
    for (std::size_t i = 0; i < 3; ++i) ((mask >> i) & 1 ? second : first).push_back(summands[i]);
    if (first.empty() || second.empty()) continue;
    OrderedDecomposition dec({sum(a, first), sum(a, second)});
    if (classifyM(dec, g).compatible) compatibleParts.push_back(dec.parts);
  }
  ASSERT_EQ(compatibleParts.size(), 1u);
}

TEST(Strata, Duality) {
  auto u = universeOf(a3());
  auto a = u->algebra();
  auto g = a3Family(u);
  std::vector<UniverseMember> duals;
  for (const auto &m : u->members()) duals.push_back({m.label, dual(m.module)});
  auto uop = std::make_shared<const IndecUniverse>(a->opposite(), duals);
  // G^op: reversed index, (F_k, T_k)
  std::vector<TorsionPair> opPairs;
  for (auto it = g.pairs.rbegin(); it != g.pairs.rend(); ++it)
    opPairs.push_back({uop, it->free, it->torsion});
  auto gop = verifyNested(uop, {"2", "1"}, opPairs);

  std::vector<std::vector<Representation>> decs = {
      {sum(a, {P(a, "2"), S(a, "2")}), P(a, "1")},
      {S(a, "2"), P(a, "1")},
      {P(a, "2"), P(a, "1")},
      {P(a, "1"), P(a, "1")},
      {S(a, "3"), P(a, "1")}};
  for (const auto &parts : decs) {
    auto cm = classifyM(OrderedDecomposition(parts), g);
    auto cn = classifyN(OrderedDecomposition({"2", "1"}, {dual(parts[1]), dual(parts[0])}), gop);
    EXPECT_EQ(cm.compatible, cn.compatible);
    EXPECT_EQ(cm.star, cn.star);
    EXPECT_EQ(cm.dagger, cn.dagger);
  }
}

TEST(Strata, G8Substratum) {
  auto u = universeOf(g8());
  auto g = u->algebra();
  auto family = g8Family(u);
  EXPECT_EQ(family.witnesses.size(), 4u);
  OrderedDecomposition n({P(g, "1"), P(g, "2"), I(g, "1"), P(g, "4"), S(g, "4")});
  auto c = classifyN(n, family);
  EXPECT_TRUE(c.compatible);
  EXPECT_TRUE(c.dagger);
  EXPECT_FALSE(c.star);
  auto s = substratum(n, family);
  EXPECT_TRUE(partsIsomorphic(s.parts, {P(g, "1"), P(g, "2"), P(g, "3"), P(g, "4"), S(g, "4")}));
  for (const auto &m : s.maps) EXPECT_TRUE(m.isInjective());

  // swapping the first two parts breaks f2
  OrderedDecomposition bad({P(g, "2"), P(g, "1"), I(g, "1"), P(g, "4"), S(g, "4")});
  EXPECT_FALSE(classifyN(bad, family).compatible);
  EXPECT_THROW(substratum(bad, family), Error);
}

TEST(Strata, InducedFamiliesG8) {
  auto u = universeOf(g8());
  auto g = u->algebra();
  OrderedDecomposition delta({P(g, "1"), P(g, "2"), P(g, "3"), P(g, "4"), S(g, "4")});
  auto f = inducedFamilies(u, delta);
  EXPECT_TRUE(f.homOrdered);
  ASSERT_TRUE(f.distinctAt.has_value());
  EXPECT_FALSE(f.fac == f.sub);
  EXPECT_TRUE(classifyM(delta, f.fac).dagger);
  EXPECT_TRUE(classifyN(delta, f.sub).dagger);

  // the loosest N-family is looser than every family built from
  // cogenerator sets that keeps delta compatible in N
  auto loose = loosestFamily(u, delta);
  std::size_t checked = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << u->size()); ++mask) {
    std::vector<Representation> extra;
    for (std::size_t i = 0; i < u->size(); ++i)
      if ((mask >> i) & 1) extra.push_back(u->module(i));
    std::vector<TorsionPair> pairs;
    for (std::size_t k = 0; k < delta.size(); ++k) {
      auto cogens = extra;
      for (std::size_t j = 0; j <= k; ++j) cogens.push_back(delta.parts[j]);
      auto fr = smallestTorsionFreeClass(*u, cogens);
      pairs.push_back({u, leftPerp(*u, fr), fr});
    }
    NestedFamily other;
    try {
      other = verifyNested(u, {}, pairs);
    } catch (const Error &) {
      continue;
    }
    if (!classifyN(delta, other).compatible) continue;
    ++checked;
    EXPECT_TRUE(expands(loose, other));
  }
  EXPECT_GT(checked, 0u);
}

TEST(Strata, ProjectiveBundlesA3) {
  auto u = universeOf(a3());
  auto a = u->algebra();
  std::vector<Representation> proj = {P(a, "1"), P(a, "2"), P(a, "3")};
  std::vector<std::vector<std::vector<std::size_t>>> partitions;
  orderedPartitions(3, partitions);
  std::vector<NestedFamily> distinct;
  for (const auto &blocks : partitions) {
    std::vector<Representation> parts;
    for (const auto &b : blocks) {
      std::vector<Representation> ps;
      for (auto i : b) ps.push_back(proj[i]);
      parts.push_back(sum(a, ps));
    }
    auto fam = inducedFacFamily(u, OrderedDecomposition(parts));
    if (std::find(distinct.begin(), distinct.end(), fam) == distinct.end())
      distinct.push_back(fam);
  }
  // ordered set partitions of 3 elements: the Fubini number a(3) = 13,
  // from a(n) = sum_k C(n,k) a(n-k)
  std::vector<std::size_t> fubini = {1};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t s = 0, c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      c = c * (n - k + 1) / k;
      s += c * fubini[n - k];
    }
    fubini.push_back(s);
  }
  EXPECT_EQ(partitions.size(), fubini[3]);
  EXPECT_EQ(distinct.size(), fubini[3]);
}

TEST(Strata, Example64) {
  auto u = universeOf(ex64());
  auto e = u->algebra();
  auto m1 = ex64M1(e);
  OrderedDecomposition dec({m1, S(e, "6")});
  auto tight = tightestFamily(u, dec);
  auto s = stratum(dec, tight);
  EXPECT_TRUE(isIsomorphic(s.parts[0], m1));
  EXPECT_TRUE(isIsomorphic(s.parts[1], S(e, "6")));
  EXPECT_TRUE(classifyM(dec, tight).dagger);

  MemberSet all;
  for (std::size_t i = 0; i < u->size(); ++i) all.insert(i);
  auto t2 = smallestTorsionClass(*u, {S(e, "1"), S(e, "6")});
  auto loose = verifyNested(u, {}, {completeToPair(u, all), completeToPair(u, t2)});
  EXPECT_TRUE(expands(loose, tight));
  EXPECT_FALSE(expands(tight, loose));
  EXPECT_TRUE(expands(tight, tight));
  auto c = classifyM(dec, loose);
  EXPECT_TRUE(c.dagger);
  auto sl = stratum(dec, loose);
  EXPECT_TRUE(isIsomorphic(sl.parts[0], sum(e, {S(e, "2"), S(e, "3")})));
  EXPECT_TRUE(isIsomorphic(sl.parts[1], S(e, "6")));
  auto maps = strataComparison(dec, tight, loose);
  ASSERT_EQ(maps.size(), 2u);
  for (const auto &m : maps) EXPECT_TRUE(m.isSurjective());
}

TEST(Strata, Example65) {
  auto u = universeOf(ex64());
  auto e = u->algebra();
  OrderedDecomposition dec({ex64M1(e), S(e, "1")});
  auto tight = tightestFamily(u, dec);
  EXPECT_TRUE(classifyM(dec, tight).dagger);
  auto s = stratum(dec, tight);
  EXPECT_TRUE(isIsomorphic(s.parts[0], sum(e, {S(e, "2"), S(e, "3")})));
  EXPECT_TRUE(isIsomorphic(s.parts[1], S(e, "1")));
}
