#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strat/representation.hpp"

namespace strat {

/// A projective module written as a direct sum of indecomposable projectives,
/// one entry of `vertices` per summand P(v), in the order of the summands.
struct ProjectiveCover {
  Representation projective;
  std::vector<std::size_t> vertices;
  Morphism cover;  // projective -> M, surjective, kernel inside the radical
};

/// Top of M at each vertex: M_v modulo the images of the incoming arrows.
std::vector<std::size_t> topDimensions(const Representation &m);

ProjectiveCover projectiveCover(const Representation &m);

struct ProjectivePresentation {
  Representation module;
  ProjectiveCover zero;   // P0 -> M
  ProjectiveCover first;  // P1 -> Omega M
  Subobject syzygy;       // Omega M inside P0
  Morphism p1;            // P1 -> P0
  bool minimal = true;
};

/// Minimal presentation P1 -> P0 -> M -> 0.
ProjectivePresentation minimalPresentation(const Representation &m);

/// Nakayama functor on a map between sums of indecomposable projectives:
/// nu P(v) = I(v). `sourceVertices`/`targetVertices` list the summands.
Morphism nakayama(const Morphism &f, const std::vector<std::size_t> &sourceVertices,
                  const std::vector<std::size_t> &targetVertices);

/// Direct sum of I(v) over the given vertices.
Representation injectiveSum(const AlgebraPtr &algebra, const std::vector<std::size_t> &vertices);

/// An element of Ext^1(B, A) given by a cocycle Omega B -> A.
struct ExtElement {
  Representation source;  // B
  Representation target;  // A
  Morphism cocycle;       // Omega B -> A
  Morphism syzygyInclusion;
  Morphism cover;  // P0 -> B
};

/// Ext^1(B, A) as Hom(Omega B, A) modulo restrictions of Hom(P0, A).
class ExtSpace {
 public:
  ExtSpace(const Representation &b, const Representation &a);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<ExtElement> &basis() const { return basis_; }
  /// Coordinates of the class of a cocycle Omega B -> A in the basis.
  Vector coordinates(const Morphism &cocycle) const;
  ExtElement element(const Vector &coords) const;

 private:
  Representation b_, a_;
  ProjectivePresentation pres_;
  std::vector<Morphism> homOmega_;
  Matrix homMatrix_;   // columns: flattened Hom(Omega B, A) basis
  Matrix quotCoords_;  // Hom coordinates -> Ext coordinates
  Matrix lift_;        // Ext coordinates -> Hom coordinates
  std::vector<ExtElement> basis_;
};

std::vector<ExtElement> ext1Basis(const Representation &b, const Representation &a);
std::size_t ext1Dim(const Representation &b, const Representation &a);

struct ShortExactSequence {
  Representation middle;
  Morphism inclusion;   // A -> E
  Morphism projection;  // E -> B
};

/// Pushout of 0 -> Omega B -> P0 -> B -> 0 along the cocycle.
ShortExactSequence realizeExtension(const ExtElement &e);

Representation tau(const Representation &m);
Representation tauInverse(const Representation &m);

bool isTauRigid(const Representation &m);
/// Hom(tau^- M, M) = 0.
bool isTauMinusRigid(const Representation &m);

/// Middle term of the almost split sequence ending at the indecomposable
/// non-projective x, or nullopt when x is projective.
std::optional<ShortExactSequence> almostSplitSequence(const Representation &x);

}  // namespace strat
