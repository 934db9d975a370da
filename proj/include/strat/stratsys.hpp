#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strat/strata.hpp"

namespace strat {

/// Indecomposables Delta_k with Hom(Delta_k, Delta_j) = 0 for k > j and
/// Ext^1(Delta_k, Delta_j) = 0 for k >= j.
struct StratifyingSystem {
  OrderedIndex index;
  std::vector<Representation> modules;
  /// Certificate: homDims[k][j] = dim Hom(Delta_k, Delta_j), same for Ext^1.
  std::vector<std::vector<std::size_t>> homDims;
  std::vector<std::vector<std::size_t>> extDims;

  std::size_t size() const { return modules.size(); }
  Representation characteristicModule() const;
};

/// First failing condition, or nullopt.
std::optional<std::string> systemViolation(const std::vector<Representation> &modules,
                                           const OrderedIndex &index = {});
/// Throws Error(CheckFailed) with the failing pair.
StratifyingSystem verifySystem(std::vector<Representation> modules, OrderedIndex index = {});

/// Same members in the same order, up to isomorphism.
bool sameSystem(const StratifyingSystem &a, const StratifyingSystem &b);

enum class Side { M, N };

constexpr std::size_t kDefaultSystemCap = 10000;

/// The systems obtained by picking one indecomposable summand of each
/// stratum (or substratum) part. Systems are built on demand.
class InducedSystems {
 public:
  InducedSystems(Stratum stratum, std::vector<std::vector<Representation>> choices);

  const Stratum &strata() const { return stratum_; }
  /// Non-isomorphic indecomposable summands of each part, in label order.
  const std::vector<std::vector<Representation>> &choices() const { return choices_; }
  /// Product of the choice counts; throws Error(CapExceeded) on overflow.
  std::size_t count() const;
  /// The i-th system in mixed-radix order (last index fastest), verified.
  StratifyingSystem at(std::size_t i) const;
  /// Every system; throws Error(CapExceeded) when count() > cap, in which
  /// case callers should walk at() instead.
  std::vector<StratifyingSystem> all(std::size_t cap = kDefaultSystemCap) const;

 private:
  Stratum stratum_;
  std::vector<std::vector<Representation>> choices_;
};

/// Requires dec compatible in M-dagger (side M) or N-dagger (side N).
InducedSystems induceSystems(const OrderedDecomposition &dec, const NestedFamily &family,
                             Side side);

/// A system's characteristic decomposition with both induced families.
struct Inducers {
  OrderedDecomposition dec;
  NestedFamily fac;
  NestedFamily sub;
};
Inducers recoverInducers(const UniversePtr &u, const StratifyingSystem &delta);

/// Orderings of the indecomposable summands of the basic module m with
/// M_i not in Fac(M_j : j > i). Throws Error(CheckFailed) if m is not basic.
std::vector<OrderedDecomposition> tfAdmissibleOrderings(const UniversePtr &u,
                                                        const Representation &m);

struct PipelineResult {
  OrderedDecomposition ordering;
  NestedFamily family;
  StratifyingSystem system;
};
/// One system f_{k+1}(M_k) per torsion-free admissible ordering of the
/// basic tau-rigid module m.
std::vector<PipelineResult> tauRigidPipeline(const UniversePtr &u, const Representation &m);

struct FiltrationResult {
  /// Inclusions X_i -> X for 0 = X_0 < X_1 < ... < X_n = X.
  std::vector<Morphism> chain;
  /// factors[i]: position k in the system with X_{i+1}/X_i isomorphic to Delta_k.
  std::vector<std::size_t> factors;
  /// Count of each Delta_k among the factors.
  std::vector<std::size_t> multiplicities;
};

/// The filtration with the copies of Delta_n at the bottom, then Delta_{n-1},
/// and so on, or nullopt when x is not in F(Delta).
std::optional<FiltrationResult> deltaFiltration(const Representation &x,
                                                const StratifyingSystem &delta,
                                                const SweepConfig &cfg = {});
/// Up to maxResults filtrations from the backtracking search; kernels that
/// are isomorphic to an already explored one are not explored again.
std::vector<FiltrationResult> deltaFiltrations(const Representation &x,
                                               const StratifyingSystem &delta,
                                               std::size_t maxResults,
                                               const SweepConfig &cfg = {});

}  // namespace strat
