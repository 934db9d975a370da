#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strat/torsion.hpp"

namespace strat {

/// A finite totally ordered index set, listed in increasing order.
using OrderedIndex = std::vector<std::string>;

/// Torsion pairs with strictly decreasing torsion classes.
struct NestedFamily {
  UniversePtr universe;
  OrderedIndex index;
  std::vector<TorsionPair> pairs;
  /// witnesses[k]: a member of T_k that is not in T_{k+1} (size n-1).
  std::vector<std::size_t> witnesses;

  std::size_t size() const { return pairs.size(); }
  bool operator==(const NestedFamily &o) const { return pairs == o.pairs; }
};

/// Checks adjacent strictness; throws Error(CheckFailed) naming the first
/// offending pair of indices.
NestedFamily verifyNested(const UniversePtr &u, OrderedIndex index,
                          std::vector<TorsionPair> pairs);

/// M = M_k1 + M_k2 + ... over an ordered index. Parts must be nonzero.
struct OrderedDecomposition {
  OrderedIndex index;
  std::vector<Representation> parts;

  OrderedDecomposition() = default;
  OrderedDecomposition(OrderedIndex index, std::vector<Representation> parts);
  /// Index 1..n.
  explicit OrderedDecomposition(std::vector<Representation> parts);

  std::size_t size() const { return parts.size(); }
  Representation total() const;
};

/// Flags of the compatibility hierarchy with the first failing condition
/// for each level.
struct Compatibility {
  bool compatible = false;
  bool star = false;
  bool dagger = false;
  std::optional<std::string> failure, starFailure, daggerFailure;
};

/// M(G), M*(G) and the Ext condition of M-dagger(G).
Compatibility classifyM(const OrderedDecomposition &dec, const NestedFamily &family);
/// N(G), N*(G) and N-dagger(G).
Compatibility classifyN(const OrderedDecomposition &dec, const NestedFamily &family);

/// Stratum parts with their structure maps: projections M_k -> F_k(M) for a
/// stratum, inclusions T_k(N) -> N_k for a substratum.
struct Stratum {
  OrderedIndex index;
  std::vector<Representation> parts;
  std::vector<Morphism> maps;

  Representation total() const;
};

/// F_k(M) = f_{k+1}(M_k), F_n(M) = M_n. Requires dec compatible in M(family).
Stratum stratum(const OrderedDecomposition &dec, const NestedFamily &family);
/// T_k(N) = t_{k-1}(N_k), T_1(N) = N_1. Requires dec compatible in N(family).
Stratum substratum(const OrderedDecomposition &dec, const NestedFamily &family);

/// T_k = T(M_j : j >= k). Requires M_k outside T(M_j : j > k).
NestedFamily inducedFacFamily(const UniversePtr &u, const OrderedDecomposition &dec);
/// F_k = F(M_j : j <= k). Requires M_k outside F(M_j : j < k).
NestedFamily inducedSubFamily(const UniversePtr &u, const OrderedDecomposition &dec);

struct InducedFamilies {
  NestedFamily fac;
  NestedFamily sub;
  /// Hom(M_j, M_i) = 0 for j > i; then dec is in M*(fac) and N*(sub).
  bool homOrdered = false;
  /// When homOrdered: index k with M_k in T_k(fac) but not in T_k(sub).
  std::optional<std::size_t> distinctAt;
};
InducedFamilies inducedFamilies(const UniversePtr &u, const OrderedDecomposition &dec);

/// G expands G': T'_k contained in T_k for every k.
bool expands(const NestedFamily &g, const NestedFamily &gPrime);
/// Tightest family with dec in M(G); the same as inducedFacFamily.
NestedFamily tightestFamily(const UniversePtr &u, const OrderedDecomposition &dec);
/// Loosest family with dec in N(G); the same as inducedSubFamily.
NestedFamily loosestFamily(const UniversePtr &u, const OrderedDecomposition &dec);

/// For tight <= loose with dec compatible in both: surjections
/// F_k(M) -> F'_k(M) from the stratum for `tight` onto the one for `loose`.
std::vector<Morphism> strataComparison(const OrderedDecomposition &dec, const NestedFamily &tight,
                                       const NestedFamily &loose);

}  // namespace strat
