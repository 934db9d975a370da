#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strat/algebra.hpp"
#include "strat/linalg.hpp"

namespace strat {

/// A finite-dimensional right module given as a representation of the
/// bound quiver: a vector space per vertex and a matrix per arrow, of shape
/// dim(target) x dim(source).
class Representation {
 public:
  Representation() = default;
  /// Validates shapes and that every relation evaluates to zero.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  static Representation zero(AlgebraPtr algebra);
  static Representation simple(AlgebraPtr algebra, std::size_t v);
  static Representation projective(AlgebraPtr algebra, std::size_t v);
  static Representation injective(AlgebraPtr algebra, std::size_t v);

  const AlgebraPtr &algebra() const { return algebra_; }
  const std::vector<std::size_t> &dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t totalDim() const;
  bool isZero() const { return totalDim() == 0; }
  const Matrix &map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix> &maps() const { return maps_; }

  /// Composite of the arrow maps along a path (identity for trivial paths).
  Matrix pathMap(const Path &p) const;

  /// Exact equality of dimension vectors and matrices.
  bool operator==(const Representation &o) const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// Throws Error(AlgebraMismatch) when the modules live over different algebras.
void requireSameAlgebra(const Representation &a, const Representation &b);

/// A vertex-indexed family of matrices intertwining two representations.
class Morphism {
 public:
  Morphism() = default;
  /// Checks the intertwining identity exactly; throws Error(InvalidModule).
  Morphism(Representation source, Representation target, std::vector<Matrix> vertexMaps);

  static Morphism zero(const Representation &source, const Representation &target);
  static Morphism identity(const Representation &m);

  const Representation &source() const { return source_; }
  const Representation &target() const { return target_; }
  const Matrix &at(std::size_t v) const { return maps_[v]; }
  const std::vector<Matrix> &maps() const { return maps_; }

  bool isZero() const;
  bool isInjective() const;
  bool isSurjective() const;
  bool isIsomorphism() const;

  /// this after `first`: source(first) -> target(this).
  Morphism after(const Morphism &first) const;
  Morphism operator+(const Morphism &o) const;
  Morphism operator*(const Scalar &s) const;

  /// All vertex matrices concatenated row-major.
  Vector flatten() const;

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> maps_;
};

/// Linear combination sum coeffs[i] * basis[i]; basis must be nonempty.
Morphism combine(const std::vector<Morphism> &basis, const std::vector<Scalar> &coeffs);

/// Basis of Hom_A(M, N).
std::vector<Morphism> homBasis(const Representation &m, const Representation &n);
std::size_t homDim(const Representation &m, const Representation &n);

/// A submodule or quotient with its canonical morphism.
struct Subobject {
  Representation module;
  Morphism inclusion;  // module -> ambient
};
struct Quotient {
  Representation module;
  Morphism projection;  // ambient -> module
};

/// Submodule spanned per vertex by the columns of `spans` (closure under the
/// arrows is checked; throws Error(InvalidModule) otherwise).
Subobject submodule(const Representation &m, const std::vector<Matrix> &spans);
Quotient quotient(const Representation &m, const std::vector<Matrix> &spans);

Subobject kernel(const Morphism &f);
Subobject image(const Morphism &f);
Quotient cokernel(const Morphism &f);

/// Unique g with g o p = f when ker p is contained in ker f and p is onto.
Morphism factorThroughQuotient(const Morphism &f, const Quotient &p);
/// Unique g with i o g = f when im f lies in the image of the injective i.
Morphism factorThroughSubobject(const Morphism &f, const Subobject &i);

struct DirectSum {
  Representation module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};
/// Direct sum over `algebra` (needed to make the empty sum well-defined).
DirectSum directSum(AlgebraPtr algebra, const std::vector<Representation> &parts);
DirectSum directSum(const std::vector<Representation> &parts);

/// Sum of the images of all maps from the generators into x.
Subobject traceOf(const std::vector<Representation> &generators, const Representation &x);
/// Intersection of the kernels of all maps from x into the cogenerators.
Subobject rejectOf(const std::vector<Representation> &cogenerators, const Representation &x);

/// Dual representation over the opposite algebra.
Representation dual(const Representation &m);
Morphism dual(const Morphism &f);

/// Tuning knobs of the deterministic search for invertible or surjective
/// combinations of basis morphisms.
struct SweepConfig {
  int coefficientBound = 2;
  std::size_t maxCombinations = 4096;
};

/// Deterministic sequence of coefficient vectors: unit vectors first, then
/// small-integer combinations of growing support.
std::vector<std::vector<Scalar>> sweepCoefficients(std::size_t n, const SweepConfig &cfg);

/// Nilpotent endomorphism test (each vertex block nilpotent).
bool isNilpotent(const Morphism &f);

struct Summand {
  Representation module;
  std::size_t multiplicity = 1;
  /// One split embedding/projection pair per copy.
  std::vector<Morphism> embeddings;
  std::vector<Morphism> projections;
};

struct DecomposedModule {
  std::vector<Summand> summands;
  std::size_t distinctCount() const { return summands.size(); }
};

/// dim End(M) / rad End(M), with the radical taken as the radical of the
/// trace form.
std::size_t endomorphismTopDimension(const Representation &m);
/// Basis of rad End(M).
std::vector<Morphism> endomorphismRadical(const Representation &m);
bool isIndecomposable(const Representation &m);

/// Splits M into indecomposables with multiplicities. Throws
/// Error(NonSplitEndomorphismRing) when no idempotent can be found over Q.
DecomposedModule decompose(const Representation &m, const SweepConfig &cfg = {});

/// Isomorphism test for indecomposable modules (exact, no search).
bool isIsomorphicIndecomposable(const Representation &x, const Representation &y);
bool isIsomorphic(const Representation &m, const Representation &n, const SweepConfig &cfg = {});
/// Basic: no two isomorphic indecomposable summands.
bool isBasic(const Representation &m);

}  // namespace strat
