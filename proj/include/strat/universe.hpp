#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strat/representation.hpp"

namespace strat {

struct UniverseMember {
  std::string label;
  Representation module;
};

/// All indecomposables of a representation-finite algebra, up to isomorphism,
/// with the AR quiver data found while enumerating them.
class IndecUniverse {
 public:
  IndecUniverse() = default;
  /// Assembles a universe from known members; AR data is optional.
  IndecUniverse(AlgebraPtr algebra, std::vector<UniverseMember> members);

  const AlgebraPtr &algebra() const { return algebra_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<UniverseMember> &members() const { return members_; }
  const UniverseMember &member(std::size_t i) const { return members_.at(i); }
  const Representation &module(std::size_t i) const { return members_.at(i).module; }
  const std::string &label(std::size_t i) const { return members_.at(i).label; }
  std::optional<std::size_t> indexOf(const std::string &label) const;

  /// Member isomorphic to the indecomposable x.
  std::optional<std::size_t> find(const Representation &x) const;
  /// Multiplicity of each member as a summand of m (sorted by member index).
  std::vector<std::pair<std::size_t, std::size_t>> summandsOf(const Representation &m) const;

  /// dim Hom(member i, member j), computed on first use.
  std::size_t homDim(std::size_t i, std::size_t j) const;

  /// tau and tau^- as member indices (nullopt for projectives / injectives).
  std::optional<std::size_t> tauOf(std::size_t i) const;
  std::optional<std::size_t> tauInverseOf(std::size_t i) const;

  /// Irreducible maps (from, to) with the multiplicity of from in the source of
  /// the almost split map into to.
  const std::map<std::pair<std::size_t, std::size_t>, std::size_t> &irreducible() const {
    return irreducible_;
  }
  const std::vector<std::string> &log() const { return log_; }

  /// Used by the enumerator and the cache loader.
  void setTau(std::vector<std::optional<std::size_t>> tau,
              std::vector<std::optional<std::size_t>> tauInverse);
  void setIrreducible(std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows);
  void setLog(std::vector<std::string> log) { log_ = std::move(log); }

 private:
  AlgebraPtr algebra_;
  std::vector<UniverseMember> members_;
  std::map<std::string, std::size_t> byLabel_;
  std::vector<std::optional<std::size_t>> tau_, tauInverse_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> irreducible_;
  std::vector<std::string> log_;
  mutable std::vector<std::optional<std::size_t>> homDims_;
};

constexpr std::size_t kDefaultDimCap = 64;
constexpr std::size_t kDefaultCountCap = 10000;

/// Closes {P(v), I(v), S(v)} under tau, tau^- and almost split middle terms.
/// Throws Error(CapExceeded) when a module above dimCap or more than countCap
/// indecomposables turn up.
IndecUniverse enumerateIndecomposables(const AlgebraPtr &algebra,
                                       std::size_t dimCap = kDefaultDimCap,
                                       std::size_t countCap = kDefaultCountCap);

/// Solid edges for irreducible maps, dotted edges X -> tau X.
std::string arQuiverDot(const IndecUniverse &u);

/// "X(d1,...,dn)" from the dimension vector.
std::string dimensionLabel(const Representation &m);

}  // namespace strat
