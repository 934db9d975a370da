#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strat/representation.hpp"
#include "strat/universe.hpp"

namespace strat {

using UniversePtr = std::shared_ptr<const IndecUniverse>;
/// Indices of universe members; classes are closed under finite direct sums
/// implicitly, so a set of indecomposables determines them.
using MemberSet = std::set<std::size_t>;

/// X in Fac(M).
bool inGen(const Representation &m, const Representation &x);
/// X in Sub(M).
bool inCogen(const Representation &m, const Representation &x);

/// T(C): members filtered by quotients of the generators.
MemberSet smallestTorsionClass(const IndecUniverse &u, const std::vector<Representation> &gens);
/// F(C): members filtered by submodules of the cogenerators.
MemberSet smallestTorsionFreeClass(const IndecUniverse &u,
                                   const std::vector<Representation> &cogens);

/// Right and left Hom-perpendicular sets inside the universe.
MemberSet rightPerp(const IndecUniverse &u, const MemberSet &s);
MemberSet leftPerp(const IndecUniverse &u, const MemberSet &s);

/// Witness that `members` is not closed under quotients or extensions, or
/// nullopt if it is a torsion class.
std::optional<std::string> torsionClassViolation(const IndecUniverse &u, const MemberSet &members);
std::optional<std::string> torsionFreeClassViolation(const IndecUniverse &u,
                                                     const MemberSet &members);

struct TorsionPair {
  UniversePtr universe;
  MemberSet torsion;
  MemberSet free;

  std::vector<Representation> torsionModules() const;
  std::vector<Representation> freeModules() const;
  bool operator==(const TorsionPair &o) const {
    return torsion == o.torsion && free == o.free;
  }
};

/// (T, T-perp) after validating T; throws Error(CheckFailed) with a witness.
TorsionPair completeToPair(const UniversePtr &u, const MemberSet &torsion);
/// (perp-F, F) after validating F.
TorsionPair completeFromFree(const UniversePtr &u, const MemberSet &free);

struct TorsionDecomposition {
  Subobject torsionPart;  // t(M) inside M
  Quotient freePart;      // f(M) = M / t(M)
};
TorsionDecomposition torsionFunctor(const TorsionPair &pair, const Representation &m);

bool inTorsion(const TorsionPair &pair, const Representation &m);
bool inFree(const TorsionPair &pair, const Representation &m);
bool isSplitting(const TorsionPair &pair);

/// "add{P(1), S(2)}", members in index order.
std::string formatMembers(const IndecUniverse &u, const MemberSet &s);

}  // namespace strat
