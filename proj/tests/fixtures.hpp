#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strat/algebra.hpp"
#include "strat/representation.hpp"

namespace strat::fixtures {

struct ArrowSpec {
  std::string name, from, to;
};
using TermSpec = std::pair<std::string, std::vector<std::string>>;  // coefficient, path
using RelationSpec = std::vector<TermSpec>;

inline Path pathOf(const Quiver &q, const std::vector<std::string> &names) {
  Path p;
  for (const auto &n : names) p.arrows.push_back(*q.findArrow(n));
  p.source = q.arrow(p.arrows.front()).source;
  p.target = q.arrow(p.arrows.back()).target;
  return p;
}

inline AlgebraPtr build(std::vector<std::string> vertices, const std::vector<ArrowSpec> &arrows,
                        const std::vector<RelationSpec> &relations = {},
                        std::size_t cap = kDefaultPathLengthCap) {
  std::vector<Arrow> as;
  for (const auto &a : arrows) {
    std::size_t s = 0, t = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == a.from) s = i;
      if (vertices[i] == a.to) t = i;
    }
    as.push_back({a.name, s, t});
  }
  Quiver q(std::move(vertices), std::move(as));
  std::vector<Relation> rels;
  for (const auto &r : relations) {
    Relation rel;
    for (const auto &[c, p] : r) rel.terms.push_back({parseScalar(c), pathOf(q, p)});
    rels.push_back(std::move(rel));
  }
  return Algebra::create(std::move(q), std::move(rels), cap);
}

// 3 -> 2 -> 1
inline AlgebraPtr a3() {
  return build({"1", "2", "3"}, {{"α", "2", "1"}, {"β", "3", "2"}});
}

// 3 -> 1 <- 2 <- 4 with the composite 4 -> 2 -> 1 zero
inline AlgebraPtr g8() {
  return build({"1", "2", "3", "4"}, {{"α", "3", "1"}, {"β", "2", "1"}, {"γ", "4", "2"}},
               {{{"1", {"γ", "β"}}}});
}

// six vertices, two commutativity relations
inline AlgebraPtr ex64() {
  return build({"1", "2", "3", "4", "5", "6"},
               {{"μ", "2", "1"},
                {"λ", "4", "2"},
                {"β", "4", "3"},
                {"α", "6", "4"},
                {"γ", "6", "5"},
                {"ν", "3", "1"},
                {"δ", "5", "3"}},
               {{{"1", {"α", "β"}}, {"-1", {"γ", "δ"}}}, {{"1", {"λ", "μ"}}, {"-1", {"β", "ν"}}}});
}

inline AlgebraPtr kronecker() {
  return build({"1", "2"}, {{"a", "2", "1"}, {"b", "2", "1"}});
}

inline std::size_t vtx(const AlgebraPtr &a, const std::string &name) {
  return a->quiver().vertexIndex(name);
}
inline Representation P(const AlgebraPtr &a, const std::string &v) {
  return Representation::projective(a, vtx(a, v));
}
inline Representation I(const AlgebraPtr &a, const std::string &v) {
  return Representation::injective(a, vtx(a, v));
}
inline Representation S(const AlgebraPtr &a, const std::string &v) {
  return Representation::simple(a, vtx(a, v));
}
inline Representation sum(const AlgebraPtr &a, const std::vector<Representation> &parts) {
  return directSum(a, parts).module;
}

// rad P(4) over ex64(), the module 2 3 over 1
inline Representation ex64M1(const AlgebraPtr &e) {
  return traceOf({P(e, "1"), P(e, "2"), P(e, "3")}, P(e, "4")).module;
}

inline Representation power(const AlgebraPtr &a, const Representation &m, std::size_t n) {
  return sum(a, std::vector<Representation>(n, m));
}

// M_lambda over the Kronecker quiver: k --(1, lambda)--> k
inline Representation kroneckerModule(const AlgebraPtr &a, const Scalar &lambda) {
  return Representation(a, {1, 1},
                        {Matrix::fromRows({{Scalar(1)}}), Matrix::fromRows({{lambda}})});
}

}  // namespace strat::fixtures
