#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strat/linalg.hpp"

namespace strat {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws on duplicate names or arrows between undeclared vertices.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t arrowCount() const { return arrows_.size(); }
  const std::vector<std::string> &vertices() const { return vertices_; }
  const std::vector<Arrow> &arrows() const { return arrows_; }
  const std::string &vertexName(std::size_t v) const { return vertices_.at(v); }
  const Arrow &arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> findVertex(std::string_view name) const;
  std::optional<std::size_t> findArrow(std::string_view name) const;
  /// Throws Error(UnknownVertex).
  std::size_t vertexIndex(std::string_view name) const;

  std::vector<std::size_t> arrowsInto(std::size_t v) const;
  std::vector<std::size_t> arrowsOutOf(std::size_t v) const;

  bool operator==(const Quiver &) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path written source to target as the arrows traversed, first arrow first.
/// Trivial paths e_v have no arrows.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const Path &) const = default;
};

std::string formatPath(const Quiver &q, const Path &p);

struct RelationTerm {
  Scalar coefficient;
  Path path;
};

/// A linear combination of parallel paths that is declared zero.
struct Relation {
  std::vector<RelationTerm> terms;

  std::size_t source() const { return terms.front().path.source; }
  std::size_t target() const { return terms.front().path.target; }
  std::size_t maxLength() const;
};

/// Output of the level-by-level reduction of paths modulo the relation ideal.
struct PathBasisResult {
  std::size_t level = 0;                 // basis paths have length <= level
  std::vector<Path> basis;               // residue classes spanning paths of length <= level
  std::map<Path, Vector> reductions;     // paths of length level + 1, in basis coordinates
  bool terminated = false;               // all longer paths reduce; basis is exact
  std::vector<Matrix> rightAction;       // per arrow, filled when terminated
};

/// Reduces all paths of length <= level + 1 modulo the products p*r*q of that
/// length and checks whether the resulting basis realizes kQ/I exactly.
/// Throws Error(CapExceeded) if the number of paths explodes.
PathBasisResult pathBasisUpTo(const Quiver &quiver, const std::vector<Relation> &relations,
                              std::size_t level);

constexpr std::size_t kDefaultPathLengthCap = 64;

/// Finite-dimensional bound quiver algebra A = kQ/I with a residue path basis
/// and its right regular representation.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Validates relations and computes the path basis; throws
  /// Error(NotFiniteDimensional) when no finite basis is found within the cap.
  static std::shared_ptr<const Algebra> create(Quiver quiver, std::vector<Relation> relations,
                                               std::size_t lengthCap = kDefaultPathLengthCap);

  const Quiver &quiver() const { return quiver_; }
  const std::vector<Relation> &relations() const { return relations_; }
  std::size_t vertexCount() const { return quiver_.vertexCount(); }
  std::size_t arrowCount() const { return quiver_.arrowCount(); }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path> &pathBasis() const { return basis_; }
  std::size_t maxPathLength() const { return maxPathLength_; }
  std::size_t lengthCap() const { return lengthCap_; }

  /// Basis indices of residue paths from `from` to `to`, in basis order.
  const std::vector<std::size_t> &basisBetween(std::size_t from, std::size_t to) const {
    return between_[from * vertexCount() + to];
  }
  std::size_t trivialIndex(std::size_t v) const { return trivial_[v]; }

  /// Coordinates of an element times an arrow (right regular action).
  Vector actArrow(const Vector &x, std::size_t arrow) const;
  Vector actPath(Vector x, const Path &p) const;
  /// Residue of a path in basis coordinates.
  Vector residue(const Path &p) const;
  Vector multiply(const Vector &x, const Vector &y) const;
  Vector basisVector(std::size_t i) const;

  /// Arrows reversed, relation paths reversed. Cached; op(op(A)) is A.
  std::shared_ptr<const Algebra> opposite() const;

  /// Two algebras are compatible when they have the same presentation.
  bool sameAs(const Algebra &other) const { return fingerprint_ == other.fingerprint_; }
  const std::string &fingerprint() const { return fingerprint_; }

 private:
  Algebra() = default;

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> trivial_;
  std::vector<Matrix> rightAction_;  // per arrow, dim x dim, column = image of basis element
  std::size_t maxPathLength_ = 0;
  std::size_t lengthCap_ = kDefaultPathLengthCap;
  std::string fingerprint_;

  mutable std::mutex oppositeMutex_;
  mutable std::shared_ptr<const Algebra> oppositeStrong_;
  mutable std::weak_ptr<const Algebra> oppositeWeak_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Relation in the opposite algebra: every path reversed.
Relation reverseRelation(const Relation &r);

}  // namespace strat
