#include "strat/torsion.hpp"

#include "strat/error.hpp"
#include "strat/homological.hpp"

namespace strat {

bool inGen(const Representation &m, const Representation &x) {
  return traceOf({m}, x).module.dims() == x.dims();
}

bool inCogen(const Representation &m, const Representation &x) {
  return rejectOf({m}, x).module.isZero();
}

namespace {

// X has a filtration by quotients of the generators. The bottom layer can be
// taken maximal (the trace) because Fac(gens) is closed under quotients.
bool filteredByQuotients(const std::vector<Representation> &gens, const Representation &x) {
  Representation cur = x;
  while (!cur.isZero()) {
    Subobject t = traceOf(gens, cur);
    if (t.module.isZero()) return false;
    cur = cokernel(t.inclusion).module;
  }
  return true;
}

bool filteredBySubmodules(const std::vector<Representation> &cogens, const Representation &x) {
  Representation cur = x;
  while (!cur.isZero()) {
    Subobject r = rejectOf(cogens, cur);
    if (r.module.dims() == cur.dims()) return false;
    cur = r.module;
  }
  return true;
}

MemberSet perpOfModules(const IndecUniverse &u, const std::vector<Representation> &mods,
                        bool right) {
  MemberSet out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool ok = true;
    for (const auto &m : mods) {
      if ((right ? homDim(m, u.module(i)) : homDim(u.module(i), m)) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(i);
  }
  return out;
}

std::vector<Representation> modulesOf(const IndecUniverse &u, const MemberSet &s) {
  std::vector<Representation> out;
  for (auto i : s) out.push_back(u.module(i));
  return out;
}

std::optional<std::string> escapingSummand(const IndecUniverse &u, const MemberSet &s,
                                           const Representation &m, const std::string &what) {
  if (m.isZero()) return std::nullopt;
  for (auto [i, mult] : u.summandsOf(m))
    if (!s.count(i)) return what + " has the summand " + u.label(i) + " outside the class";
  return std::nullopt;
}

// Extensions between members: each Ext basis element and, for small Ext
// spaces, every 0/1 combination of basis elements.
std::optional<std::string> extensionViolation(const IndecUniverse &u, const MemberSet &s) {
  for (auto i : s)
    for (auto j : s) {
      ExtSpace ext(u.module(i), u.module(j));
      const std::size_t n = ext.dim();
      if (n == 0) continue;
      std::vector<Vector> combos;
      if (n <= 4) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
          Vector c(n);
          for (std::size_t k = 0; k < n; ++k) c[k] = (mask >> k) & 1;
          combos.push_back(c);
        }
      } else {
        for (std::size_t k = 0; k < n; ++k) {
          Vector c(n);
          c[k] = 1;
          combos.push_back(c);
        }
        combos.emplace_back(n, Scalar(1));
      }
      for (const auto &c : combos) {
        auto seq = realizeExtension(ext.element(c));
        if (auto w = escapingSummand(u, s, seq.middle,
                                     "an extension of " + u.label(i) + " by " + u.label(j)))
          return w;
      }
    }
  return std::nullopt;
}

}  // namespace

MemberSet rightPerp(const IndecUniverse &u, const MemberSet &s) {
  MemberSet out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    bool ok = true;
    for (auto i : s)
      if (u.homDim(i, j) != 0) {
        ok = false;
        break;
      }
    if (ok) out.insert(j);
  }
  return out;
}

MemberSet leftPerp(const IndecUniverse &u, const MemberSet &s) {
  MemberSet out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool ok = true;
    for (auto j : s)
      if (u.homDim(i, j) != 0) {
        ok = false;
        break;
      }
    if (ok) out.insert(i);
  }
  return out;
}

MemberSet smallestTorsionClass(const IndecUniverse &u, const std::vector<Representation> &gens) {
  MemberSet out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (filteredByQuotients(gens, u.module(i))) out.insert(i);
  // T(C) is also the left perpendicular of the right perpendicular of C
  if (out != leftPerp(u, perpOfModules(u, gens, true)))
    throw Error(ErrorCode::Precondition,
                "torsion closure disagrees with double orthogonality; the universe is incomplete");
  return out;
}

MemberSet smallestTorsionFreeClass(const IndecUniverse &u,
                                   const std::vector<Representation> &cogens) {
  MemberSet out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (filteredBySubmodules(cogens, u.module(i))) out.insert(i);
  if (out != rightPerp(u, perpOfModules(u, cogens, false)))
    throw Error(ErrorCode::Precondition,
                "torsion-free closure disagrees with double orthogonality; the universe is "
                "incomplete");
  return out;
}

std::optional<std::string> torsionClassViolation(const IndecUniverse &u, const MemberSet &s) {
  for (auto i : s) {
    const Representation &x = u.module(i);
    for (std::size_t y = 0; y < u.size(); ++y) {
      auto t = traceOf({u.module(y)}, x);
      if (auto w = escapingSummand(u, s, cokernel(t.inclusion).module,
                                   "the quotient of " + u.label(i) + " by the trace of " +
                                       u.label(y)))
        return w;
      for (const auto &f : homBasis(u.module(y), x))
        if (auto w = escapingSummand(u, s, cokernel(f).module,
                                     "a quotient of " + u.label(i) + " by an image of " +
                                         u.label(y)))
          return w;
    }
  }
  if (auto w = extensionViolation(u, s)) return w;
  MemberSet closure = leftPerp(u, rightPerp(u, s));
  for (auto i : closure)
    if (!s.count(i))
      return u.label(i) + " is left perpendicular to the right perpendicular but not a member";
  return std::nullopt;
}

std::optional<std::string> torsionFreeClassViolation(const IndecUniverse &u, const MemberSet &s) {
  for (auto i : s) {
    const Representation &x = u.module(i);
    for (std::size_t y = 0; y < u.size(); ++y) {
      auto r = rejectOf({u.module(y)}, x);
      if (auto w = escapingSummand(u, s, r.module,
                                   "the reject of " + u.label(y) + " in " + u.label(i)))
        return w;
      for (const auto &f : homBasis(x, u.module(y)))
        if (auto w = escapingSummand(u, s, kernel(f).module,
                                     "a kernel of a map " + u.label(i) + " -> " + u.label(y)))
          return w;
    }
  }
  if (auto w = extensionViolation(u, s)) return w;
  MemberSet closure = rightPerp(u, leftPerp(u, s));
  for (auto i : closure)
    if (!s.count(i))
      return u.label(i) + " is right perpendicular to the left perpendicular but not a member";
  return std::nullopt;
}

std::vector<Representation> TorsionPair::torsionModules() const {
  return modulesOf(*universe, torsion);
}

std::vector<Representation> TorsionPair::freeModules() const { return modulesOf(*universe, free); }

TorsionPair completeToPair(const UniversePtr &u, const MemberSet &torsion) {
  if (auto w = torsionClassViolation(*u, torsion))
    throw Error(ErrorCode::CheckFailed, "not a torsion class: " + *w);
  TorsionPair p{u, torsion, rightPerp(*u, torsion)};
  if (leftPerp(*u, p.free) != torsion)
    throw Error(ErrorCode::CheckFailed, "not a torsion class: double orthogonality fails");
  return p;
}

TorsionPair completeFromFree(const UniversePtr &u, const MemberSet &free) {
  if (auto w = torsionFreeClassViolation(*u, free))
    throw Error(ErrorCode::CheckFailed, "not a torsion-free class: " + *w);
  TorsionPair p{u, leftPerp(*u, free), free};
  if (rightPerp(*u, p.torsion) != free)
    throw Error(ErrorCode::CheckFailed, "not a torsion-free class: double orthogonality fails");
  return p;
}

TorsionDecomposition torsionFunctor(const TorsionPair &pair, const Representation &m) {
  Subobject t = traceOf(pair.torsionModules(), m);
  Quotient f = cokernel(t.inclusion);
  return {std::move(t), std::move(f)};
}

bool inTorsion(const TorsionPair &pair, const Representation &m) {
  return traceOf(pair.torsionModules(), m).module.dims() == m.dims();
}

bool inFree(const TorsionPair &pair, const Representation &m) {
  return traceOf(pair.torsionModules(), m).module.isZero();
}

bool isSplitting(const TorsionPair &pair) {
  for (std::size_t i = 0; i < pair.universe->size(); ++i)
    if (!pair.torsion.count(i) && !pair.free.count(i)) return false;
  return true;
}

std::string formatMembers(const IndecUniverse &u, const MemberSet &s) {
  std::string out = "add{";
  bool first = true;
  for (auto i : s) {
    if (!first) out += ", ";
    out += u.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace strat
