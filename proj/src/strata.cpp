#include "strat/strata.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "strat/error.hpp"
#include "strat/homological.hpp"

namespace strat {

namespace {

void requireAlgebra(const AlgebraPtr &a, const Representation &m) {
  if (!a || !m.algebra() || !a->sameAs(*m.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "module and family are over different algebras");
}

void requireSizes(const OrderedDecomposition &dec, const NestedFamily &family) {
  if (dec.size() != family.size())
    throw Error(ErrorCode::Precondition, "decomposition has " + std::to_string(dec.size()) +
                                             " parts but the family has " +
                                             std::to_string(family.size()) + " pairs");
  for (const auto &p : dec.parts) requireAlgebra(family.universe->algebra(), p);
}

OrderedIndex defaultIndex(std::size_t n) {
  OrderedIndex out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(std::to_string(k));
  return out;
}

std::vector<Representation> slice(const std::vector<Representation> &v, std::size_t from,
                                  std::size_t to) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

bool allSummandsIn(const IndecUniverse &u, const MemberSet &s, const Representation &m) {
  for (auto [i, mult] : u.summandsOf(m))
    if (!s.count(i)) return false;
  return true;
}

void ensure(bool ok, const std::string &what) {
  if (!ok) throw std::logic_error("internal check failed: " + what);
}

}  // namespace

NestedFamily verifyNested(const UniversePtr &u, OrderedIndex index,
                          std::vector<TorsionPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::Precondition, "a nested family needs an index");
  if (index.empty()) index = defaultIndex(pairs.size());
  if (index.size() != pairs.size())
    throw Error(ErrorCode::Precondition, "index and pair list differ in length");
  if (std::set<std::string>(index.begin(), index.end()).size() != index.size())
    throw Error(ErrorCode::Precondition, "index labels must be distinct");
  for (const auto &p : pairs)
    if (p.universe != u)
      throw Error(ErrorCode::AlgebraMismatch, "torsion pairs come from different universes");

  NestedFamily out{u, std::move(index), std::move(pairs), {}};
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    const MemberSet &big = out.pairs[k].torsion, &small = out.pairs[k + 1].torsion;
    const std::string where = "(" + out.index[k] + "," + out.index[k + 1] + ")";
    for (auto i : small)
      if (!big.count(i))
        throw Error(ErrorCode::CheckFailed, "not strictly nested at " + where + ": " +
                                                u->label(i) + " lies only in the later class");
    auto w = std::find_if(big.begin(), big.end(), [&](std::size_t i) { return !small.count(i); });
    if (w == big.end())
      throw Error(ErrorCode::CheckFailed,
                  "not strictly nested at " + where + ": the torsion classes coincide");
    out.witnesses.push_back(*w);
  }
  return out;
}

OrderedDecomposition::OrderedDecomposition(OrderedIndex idx, std::vector<Representation> ps)
    : index(std::move(idx)), parts(std::move(ps)) {
  if (index.empty()) index = defaultIndex(parts.size());
  if (index.size() != parts.size())
    throw Error(ErrorCode::Precondition, "index and part list differ in length");
  if (parts.empty()) throw Error(ErrorCode::Precondition, "a decomposition needs parts");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    requireSameAlgebra(parts[0], parts[k]);
    if (parts[k].isZero())
      throw Error(ErrorCode::CheckFailed, "part " + index[k] + " is zero (t1/f1 fails)");
  }
}

OrderedDecomposition::OrderedDecomposition(std::vector<Representation> ps)
    : OrderedDecomposition(OrderedIndex{}, std::move(ps)) {}

Representation OrderedDecomposition::total() const { return directSum(parts).module; }

Representation Stratum::total() const { return directSum(parts).module; }

Compatibility classifyM(const OrderedDecomposition &dec, const NestedFamily &family) {
  requireSizes(dec, family);
  Compatibility c;
  const std::size_t n = dec.size();
  auto fail = [&](std::optional<std::string> &slot, std::string msg) {
    if (!slot) slot = std::move(msg);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (!inTorsion(family.pairs[k], dec.parts[k]))
      fail(c.failure, "t2 fails: part " + dec.index[k] + " is not in T_" + family.index[k]);
    for (std::size_t j = k + 1; j < n; ++j)
      if (inTorsion(family.pairs[j], dec.parts[k]))
        fail(c.failure, "t3 fails: part " + dec.index[k] + " lies in T_" + family.index[j]);
  }
  c.compatible = !c.failure;
  if (!c.compatible) {
    c.starFailure = c.daggerFailure = c.failure;
    return c;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = k + 1; j < n; ++j)
      if (!inFree(family.pairs[j], dec.parts[k]))
        fail(c.starFailure,
             "part " + dec.index[k] + " is not in F_" + family.index[j]);
  c.star = !c.starFailure;

  Stratum s = stratum(dec, family);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      if (auto d = ext1Dim(dec.parts[k], s.parts[j]))
        fail(c.daggerFailure, "Ext^1(M_" + dec.index[k] + ", F_" + dec.index[j] +
                                  "(M)) has dimension " + std::to_string(d));
  c.dagger = !c.daggerFailure;
  return c;
}

Compatibility classifyN(const OrderedDecomposition &dec, const NestedFamily &family) {
  requireSizes(dec, family);
  Compatibility c;
  const std::size_t n = dec.size();
  auto fail = [&](std::optional<std::string> &slot, std::string msg) {
    if (!slot) slot = std::move(msg);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (!inFree(family.pairs[k], dec.parts[k]))
      fail(c.failure, "f2 fails: part " + dec.index[k] + " is not in F_" + family.index[k]);
    for (std::size_t j = 0; j < k; ++j)
      if (inFree(family.pairs[j], dec.parts[k]))
        fail(c.failure, "f3 fails: part " + dec.index[k] + " lies in F_" + family.index[j]);
  }
  c.compatible = !c.failure;
  if (!c.compatible) {
    c.starFailure = c.daggerFailure = c.failure;
    return c;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (!inTorsion(family.pairs[j], dec.parts[k]))
        fail(c.starFailure, "part " + dec.index[k] + " is not in T_" + family.index[j]);
  c.star = !c.starFailure;

  Stratum s = substratum(dec, family);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      if (auto d = ext1Dim(s.parts[k], dec.parts[j]))
        fail(c.daggerFailure, "Ext^1(T_" + dec.index[k] + "(N), N_" + dec.index[j] +
                                  ") has dimension " + std::to_string(d));
  c.dagger = !c.daggerFailure;
  return c;
}

Stratum stratum(const OrderedDecomposition &dec, const NestedFamily &family) {
  requireSizes(dec, family);
  const std::size_t n = dec.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = inTorsion(family.pairs[k], dec.parts[k]);
    for (std::size_t j = k + 1; ok && j < n; ++j) ok = !inTorsion(family.pairs[j], dec.parts[k]);
    if (!ok)
      throw Error(ErrorCode::Precondition, "the decomposition is not compatible in M(family)");
  }
  Stratum s{dec.index, {}, {}};
  for (std::size_t k = 0; k < n; ++k) {
    if (k + 1 == n) {
      s.parts.push_back(dec.parts[k]);
      s.maps.push_back(Morphism::identity(dec.parts[k]));
      continue;
    }
    auto d = torsionFunctor(family.pairs[k + 1], dec.parts[k]);
    s.parts.push_back(d.freePart.module);
    s.maps.push_back(d.freePart.projection);
  }
  for (std::size_t k = 0; k < n; ++k) {
    ensure(!s.parts[k].isZero(), "stratum part is zero");
    for (std::size_t j = 0; j < n; ++j)
      ensure(j <= k ? inTorsion(family.pairs[j], s.parts[k]) : inFree(family.pairs[j], s.parts[k]),
             "stratum part misplaced");
  }
  return s;
}

Stratum substratum(const OrderedDecomposition &dec, const NestedFamily &family) {
  requireSizes(dec, family);
  const std::size_t n = dec.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = inFree(family.pairs[k], dec.parts[k]);
    for (std::size_t j = 0; ok && j < k; ++j) ok = !inFree(family.pairs[j], dec.parts[k]);
    if (!ok)
      throw Error(ErrorCode::Precondition, "the decomposition is not compatible in N(family)");
  }
  Stratum s{dec.index, {}, {}};
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      s.parts.push_back(dec.parts[k]);
      s.maps.push_back(Morphism::identity(dec.parts[k]));
      continue;
    }
    auto d = torsionFunctor(family.pairs[k - 1], dec.parts[k]);
    s.parts.push_back(d.torsionPart.module);
    s.maps.push_back(d.torsionPart.inclusion);
  }
  for (std::size_t k = 0; k < n; ++k) {
    ensure(!s.parts[k].isZero(), "substratum part is zero");
    for (std::size_t j = 0; j < n; ++j)
      ensure(j >= k ? inFree(family.pairs[j], s.parts[k]) : inTorsion(family.pairs[j], s.parts[k]),
             "substratum part misplaced");
  }
  return s;
}

NestedFamily inducedFacFamily(const UniversePtr &u, const OrderedDecomposition &dec) {
  const std::size_t n = dec.size();
  for (const auto &p : dec.parts) requireAlgebra(u->algebra(), p);
  std::vector<TorsionPair> pairs;
  for (std::size_t k = 0; k < n; ++k) {
    if (k + 1 < n) {
      MemberSet later = smallestTorsionClass(*u, slice(dec.parts, k + 1, n));
      if (allSummandsIn(*u, later, dec.parts[k]))
        throw Error(ErrorCode::CheckFailed, "part " + dec.index[k] +
                                                " lies in the torsion class generated by the "
                                                "later parts");
    }
    MemberSet t = smallestTorsionClass(*u, slice(dec.parts, k, n));
    pairs.push_back({u, t, rightPerp(*u, t)});
  }
  NestedFamily g = verifyNested(u, dec.index, std::move(pairs));
  ensure(classifyM(dec, g).compatible, "decomposition not compatible in its induced family");
  return g;
}

NestedFamily inducedSubFamily(const UniversePtr &u, const OrderedDecomposition &dec) {
  const std::size_t n = dec.size();
  for (const auto &p : dec.parts) requireAlgebra(u->algebra(), p);
  std::vector<TorsionPair> pairs;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      MemberSet earlier = smallestTorsionFreeClass(*u, slice(dec.parts, 0, k));
      if (allSummandsIn(*u, earlier, dec.parts[k]))
        throw Error(ErrorCode::CheckFailed, "part " + dec.index[k] +
                                                " lies in the torsion-free class cogenerated by "
                                                "the earlier parts");
    }
    MemberSet f = smallestTorsionFreeClass(*u, slice(dec.parts, 0, k + 1));
    pairs.push_back({u, leftPerp(*u, f), f});
  }
  NestedFamily g = verifyNested(u, dec.index, std::move(pairs));
  ensure(classifyN(dec, g).compatible, "decomposition not compatible in its induced family");
  return g;
}

InducedFamilies inducedFamilies(const UniversePtr &u, const OrderedDecomposition &dec) {
  InducedFamilies out{inducedFacFamily(u, dec), inducedSubFamily(u, dec), true, std::nullopt};
  const std::size_t n = dec.size();
  for (std::size_t i = 0; i < n && out.homOrdered; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (homDim(dec.parts[j], dec.parts[i]) != 0) {
        out.homOrdered = false;
        break;
      }
  if (out.homOrdered) {
    ensure(classifyM(dec, out.fac).star, "Hom-ordered decomposition not in M*");
    ensure(classifyN(dec, out.sub).star, "Hom-ordered decomposition not in N*");
    for (std::size_t k = 0; k < n && !out.distinctAt; ++k)
      if (!inTorsion(out.sub.pairs[k], dec.parts[k])) out.distinctAt = k;
    ensure(out.distinctAt.has_value(), "induced families coincide");
  }
  return out;
}

bool expands(const NestedFamily &g, const NestedFamily &gPrime) {
  if (g.size() != gPrime.size())
    throw Error(ErrorCode::Precondition, "families have different index sets");
  if (g.universe != gPrime.universe)
    throw Error(ErrorCode::AlgebraMismatch, "families come from different universes");
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto &big = g.pairs[k].torsion, &small = gPrime.pairs[k].torsion;
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
  }
  return true;
}

NestedFamily tightestFamily(const UniversePtr &u, const OrderedDecomposition &dec) {
  return inducedFacFamily(u, dec);
}

NestedFamily loosestFamily(const UniversePtr &u, const OrderedDecomposition &dec) {
  return inducedSubFamily(u, dec);
}

std::vector<Morphism> strataComparison(const OrderedDecomposition &dec, const NestedFamily &tight,
                                       const NestedFamily &loose) {
  if (!expands(loose, tight))
    throw Error(ErrorCode::CheckFailed, "the second family does not expand the first");
  if (!classifyM(dec, tight).compatible || !classifyM(dec, loose).compatible)
    throw Error(ErrorCode::CheckFailed, "the decomposition is not compatible in both families");
  Stratum s = stratum(dec, tight), sp = stratum(dec, loose);
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < dec.size(); ++k) {
    Morphism g = factorThroughQuotient(sp.maps[k], Quotient{s.parts[k], s.maps[k]});
    ensure(g.isSurjective(), "stratum comparison map is not onto");
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace strat
