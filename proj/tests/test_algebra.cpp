#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"
#include "strat/error.hpp"

using namespace strat;
using namespace strat::fixtures;

namespace {

// Number of directed paths (trivial ones included) in an acyclic quiver.
std::size_t dfsPathCount(const Quiver &q) {
  std::function<std::size_t(std::size_t)> from = [&](std::size_t v) {
    std::size_t n = 1;
    for (auto a : q.arrowsOutOf(v)) n += from(q.arrow(a).target);
    return n;
  };
  std::size_t total = 0;
  for (std::size_t v = 0; v < q.vertexCount(); ++v) total += from(v);
  return total;
}

}  // namespace

TEST(Algebra, A3Basis) {
  auto a = a3();
  EXPECT_EQ(a->dimension(), 6u);
  EXPECT_EQ(a->dimension(), dfsPathCount(a->quiver()));
  EXPECT_EQ(a->maxPathLength(), 2u);
  auto r = pathBasisUpTo(a->quiver(), a->relations(), 3);
  EXPECT_TRUE(r.terminated);
  EXPECT_EQ(r.basis.size(), 6u);
}

TEST(Algebra, G8Basis) {
  auto a = g8();
  EXPECT_EQ(a->dimension(), 7u);
  auto r = pathBasisUpTo(a->quiver(), a->relations(), 3);
  EXPECT_TRUE(r.terminated);
  EXPECT_EQ(r.basis.size(), 7u);
  EXPECT_EQ(a->basisBetween(vtx(a, "4"), vtx(a, "1")).size(), 0u);
}

TEST(Algebra, CommutativityRelations) {
  auto a = ex64();
  // paths: 6 trivial + 7 arrows; length 2: 6-4-2,6-4-3,6-5-3,4-2-1,4-3-1,5-3-1 with
  // 6-4-3 = 6-5-3 and 4-2-1 = 4-3-1: 4 classes; length 3: all 6 -> 1 paths equal: 1
  EXPECT_EQ(a->dimension(), 6u + 7u + 4u + 1u);
}

TEST(Algebra, FreeLoopIsInfinite) {
  try {
    build({"1"}, {{"x", "1", "1"}}, {}, 8);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFiniteDimensional);
  }
  // with x^3 = 0 it is fine
  auto a = build({"1"}, {{"x", "1", "1"}}, {{{"1", {"x", "x", "x"}}}});
  EXPECT_EQ(a->dimension(), 3u);
}

TEST(Algebra, Validation) {
  EXPECT_THROW(Quiver({"1", "1"}, {}), Error);
  EXPECT_THROW(Quiver({"1"}, {{"a", 0, 3}}), Error);
  EXPECT_THROW(Quiver({"1", "2"}, {{"a", 0, 1}, {"a", 1, 0}}), Error);
  Quiver q({"1", "2", "3"}, {{"a", 1, 0}, {"b", 2, 1}});
  // b then a is composable; a then b is not
  Relation bad;
  bad.terms.push_back({Scalar(1), Path{1, 1, {0, 1}}});
  try {
    Algebra::create(q, {bad});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NonComposablePath);
  }
  Relation mixed;
  mixed.terms.push_back({Scalar(1), Path{2, 0, {1, 0}}});
  mixed.terms.push_back({Scalar(1), Path{1, 0, {0}}});
  try {
    Algebra::create(q, {mixed});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedRelationEndpoints);
  }
}

TEST(Algebra, Opposite) {
  for (auto a : {a3(), g8(), ex64()}) {
    auto op = a->opposite();
    EXPECT_EQ(op->dimension(), a->dimension());
    EXPECT_TRUE(op->opposite()->sameAs(*a));
    EXPECT_EQ(op->opposite().get(), a.get());
    for (std::size_t i = 0; i < a->arrowCount(); ++i) {
      EXPECT_EQ(op->quiver().arrow(i).source, a->quiver().arrow(i).target);
      EXPECT_EQ(op->quiver().arrow(i).target, a->quiver().arrow(i).source);
    }
  }
  auto g = g8();
  const auto &rel = g->opposite()->relations().front();
  EXPECT_EQ(formatPath(g->opposite()->quiver(), rel.terms.front().path), "β*γ");
}

TEST(Algebra, MultiplicationClosesOnBasis) {
  auto a = ex64();
  const std::size_t n = a->dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector p = a->multiply(a->basisVector(i), a->basisVector(j));
      EXPECT_EQ(p.size(), n);
    }
  // associativity on a sample
  for (std::size_t i = 0; i < n; i += 3)
    for (std::size_t j = 0; j < n; j += 2)
      for (std::size_t k = 0; k < n; k += 5) {
        auto x = a->basisVector(i), y = a->basisVector(j), z = a->basisVector(k);
        EXPECT_EQ(a->multiply(a->multiply(x, y), z), a->multiply(x, a->multiply(y, z)));
      }
}
