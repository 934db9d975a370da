#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "property_checks.hpp"
#include "strat/homological.hpp"

using namespace strat;
using namespace strat::fixtures;

namespace {

UniversePtr universeOf(const AlgebraPtr &a) {
  return std::make_shared<const IndecUniverse>(enumerateIndecomposables(a));
}

}  // namespace

TEST(Properties, JordanHolderA3) {
  auto a = a3();
  auto delta = verifySystem({S(a, "2"), P(a, "1")});
  auto r = checks::jordanHolder(delta, 10, 5);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, JordanHolderG8) {
  auto g = g8();
  auto delta = verifySystem({P(g, "1"), P(g, "2"), P(g, "3"), P(g, "4"), S(g, "4")});
  auto r = checks::jordanHolder(delta, 8, 11);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, TauRigidA3) {
  auto u = universeOf(a3());
  auto rigid = checks::basicTauRigid(u);
  // oracle: tau of the whole sum
  std::size_t expected = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << u->size()); ++mask) {
    std::vector<Representation> parts;
    for (std::size_t i = 0; i < u->size(); ++i)
      if ((mask >> i) & 1) parts.push_back(u->module(i));
    if (isTauRigid(sum(u->algebra(), parts))) ++expected;
  }
  EXPECT_EQ(rigid.size(), expected);
  for (auto check : {checks::prop22, checks::lemma24, checks::prop23}) {
    auto res = check(u, rigid);
    EXPECT_TRUE(res.ok) << res.detail;
    EXPECT_GT(res.cases, 0u);
  }
  std::vector<StratifyingSystem> systems;
  auto p = checks::pipelineSizes(u, rigid, &systems);
  EXPECT_TRUE(p.ok) << p.detail;
  auto rt = checks::roundTrip(u, systems);
  EXPECT_TRUE(rt.ok) << rt.detail;
  EXPECT_EQ(rt.cases, systems.size());
}

TEST(Properties, TorsionMinimalityA3) {
  std::size_t count = 0;
  auto r = checks::torsionMinimality(universeOf(a3()), &count);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.cases, 64u);
  EXPECT_EQ(count, 14u);
}
