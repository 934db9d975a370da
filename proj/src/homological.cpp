#include "strat/homological.hpp"

#include <algorithm>

#include "strat/error.hpp"

namespace strat {

namespace {

Matrix incomingImages(const Representation &m, std::size_t v) {
  const Quiver &q = m.algebra()->quiver();
  Matrix span(m.dim(v), 0);
  for (auto a : q.arrowsInto(v)) span = hstack(span, m.map(a));
  return span;
}

std::size_t positionOf(const std::vector<std::size_t> &list, std::size_t value) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), value) - list.begin());
}

}  // namespace

std::vector<std::size_t> topDimensions(const Representation &m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.dims().size(); ++v)
    out.push_back(m.dim(v) - rank(incomingImages(m, v)));
  return out;
}

ProjectiveCover projectiveCover(const Representation &m) {
  const AlgebraPtr &alg = m.algebra();
  const Algebra &A = *alg;
  const std::size_t nv = A.vertexCount();
  ProjectiveCover out;
  std::vector<Representation> parts;
  // one column block per generator, per vertex of the projective
  std::vector<Matrix> maps;
  for (std::size_t w = 0; w < nv; ++w) maps.emplace_back(m.dim(w), 0);
  for (std::size_t v = 0; v < nv; ++v) {
    SplitBasis top(incomingImages(m, v), m.dim(v));
    const Matrix &gens = top.complement();
    for (std::size_t g = 0; g < gens.cols(); ++g) {
      Vector x = gens.column(g);
      out.vertices.push_back(v);
      parts.push_back(Representation::projective(alg, v));
      for (std::size_t w = 0; w < nv; ++w) {
        const auto &paths = A.basisBetween(v, w);
        Matrix block(m.dim(w), paths.size());
        for (std::size_t c = 0; c < paths.size(); ++c) {
          Vector img = m.pathMap(A.pathBasis()[paths[c]]) * x;
          for (std::size_t r = 0; r < img.size(); ++r) block(r, c) = img[r];
        }
        maps[w] = hstack(maps[w], block);
      }
    }
  }
  out.projective = directSum(alg, parts).module;
  out.cover = Morphism(out.projective, m, std::move(maps));
  return out;
}

ProjectivePresentation minimalPresentation(const Representation &m) {
  ProjectivePresentation p;
  p.module = m;
  p.zero = projectiveCover(m);
  p.syzygy = kernel(p.zero.cover);
  p.first = projectiveCover(p.syzygy.module);
  p.p1 = p.syzygy.inclusion.after(p.first.cover);
  auto tops = topDimensions(m);
  std::size_t topTotal = 0;
  for (auto t : tops) topTotal += t;
  p.minimal = topTotal == p.zero.vertices.size() && p.zero.cover.isSurjective();
  if (!p.minimal) throw Error(ErrorCode::Precondition, "projective cover is not minimal");
  return p;
}

Representation injectiveSum(const AlgebraPtr &algebra, const std::vector<std::size_t> &vertices) {
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(Representation::injective(algebra, v));
  return directSum(algebra, parts).module;
}

Morphism nakayama(const Morphism &f, const std::vector<std::size_t> &sourceVertices,
                  const std::vector<std::size_t> &targetVertices) {
  const AlgebraPtr &alg = f.source().algebra();
  const Algebra &A = *alg;
  const std::size_t nv = A.vertexCount();

  // Offsets of each summand inside a sum of projectives (or injectives) at a vertex.
  auto offsets = [&](const std::vector<std::size_t> &verts, std::size_t w, bool injective) {
    std::vector<std::size_t> off{0};
    for (auto v : verts)
      off.push_back(off.back() +
                    (injective ? A.basisBetween(w, v).size() : A.basisBetween(v, w).size()));
    return off;
  };

  // x[j][i] in e_{t_j} A e_{s_i}: image of the generator of the i-th source summand
  // in the j-th target summand.
  std::vector<std::vector<Vector>> x(targetVertices.size(),
                                     std::vector<Vector>(sourceVertices.size()));
  for (std::size_t i = 0; i < sourceVertices.size(); ++i) {
    const std::size_t s = sourceVertices[i];
    auto srcOff = offsets(sourceVertices, s, false);
    auto tgtOff = offsets(targetVertices, s, false);
    std::size_t gen = srcOff[i] + positionOf(A.basisBetween(s, s), A.trivialIndex(s));
    Vector img = f.at(s).column(gen);
    for (std::size_t j = 0; j < targetVertices.size(); ++j) {
      Vector full(A.dimension());
      const auto &paths = A.basisBetween(targetVertices[j], s);
      for (std::size_t k = 0; k < paths.size(); ++k) full[paths[k]] = img[tgtOff[j] + k];
      x[j][i] = std::move(full);
    }
  }

  Representation src = injectiveSum(alg, sourceVertices);
  Representation tgt = injectiveSum(alg, targetVertices);
  std::vector<Matrix> maps;
  for (std::size_t u = 0; u < nv; ++u) {
    auto rOff = offsets(targetVertices, u, true);
    auto cOff = offsets(sourceVertices, u, true);
    Matrix m(tgt.dim(u), src.dim(u));
    for (std::size_t j = 0; j < targetVertices.size(); ++j) {
      const auto &qs = A.basisBetween(u, targetVertices[j]);
      for (std::size_t i = 0; i < sourceVertices.size(); ++i) {
        const auto &ps = A.basisBetween(u, sourceVertices[i]);
        // q |-> q x, from paths u -> t_j to paths u -> s_i, transposed
        for (std::size_t c = 0; c < qs.size(); ++c) {
          Vector img = A.multiply(A.basisVector(qs[c]), x[j][i]);
          for (std::size_t r = 0; r < ps.size(); ++r) m(rOff[j] + c, cOff[i] + r) = img[ps[r]];
        }
      }
    }
    maps.push_back(std::move(m));
  }
  return Morphism(src, tgt, std::move(maps));
}

// ------------------------------------------------------------ Ext

ExtSpace::ExtSpace(const Representation &b, const Representation &a) : b_(b), a_(a) {
  requireSameAlgebra(b, a);
  pres_ = minimalPresentation(b);
  const Representation &omega = pres_.syzygy.module;
  homOmega_ = homBasis(omega, a);
  const std::size_t n = homOmega_.size();
  std::vector<Vector> cols;
  for (const auto &h : homOmega_) cols.push_back(h.flatten());
  std::size_t len = 0;
  for (std::size_t v = 0; v < omega.dims().size(); ++v) len += omega.dim(v) * a.dim(v);
  homMatrix_ = Matrix::fromColumns(cols, len);

  Matrix restricted(n, 0);
  if (n > 0) {
    for (const auto &h : homBasis(pres_.zero.projective, a)) {
      auto c = solve(homMatrix_, h.after(pres_.syzygy.inclusion).flatten());
      restricted = hstack(restricted, Matrix::fromColumns({*c}, n));
    }
  }
  SplitBasis split(restricted, n);
  quotCoords_ = split.quotCoords();
  lift_ = split.complement();
  for (std::size_t k = 0; k < lift_.cols(); ++k) {
    Vector e(lift_.cols());
    e[k] = 1;
    basis_.push_back(element(e));
  }
}

Vector ExtSpace::coordinates(const Morphism &cocycle) const {
  if (homOmega_.empty()) return {};
  auto c = solve(homMatrix_, cocycle.flatten());
  if (!c) throw Error(ErrorCode::Precondition, "not a map out of the syzygy");
  return quotCoords_ * *c;
}

ExtElement ExtSpace::element(const Vector &coords) const {
  Morphism cocycle = homOmega_.empty()
                         ? Morphism::zero(pres_.syzygy.module, a_)
                         : combine(homOmega_, lift_ * coords);
  return {b_, a_, cocycle, pres_.syzygy.inclusion, pres_.zero.cover};
}

std::vector<ExtElement> ext1Basis(const Representation &b, const Representation &a) {
  return ExtSpace(b, a).basis();
}

std::size_t ext1Dim(const Representation &b, const Representation &a) {
  return ExtSpace(b, a).dim();
}

ShortExactSequence realizeExtension(const ExtElement &e) {
  const Representation &a = e.target;
  const Representation &p0 = e.cover.source();
  DirectSum s = directSum(a.algebra(), {a, p0});
  Morphism g = s.injections[0].after(e.cocycle) +
               s.injections[1].after(e.syzygyInclusion) * Scalar(-1);
  Quotient q = cokernel(g);
  Morphism inclusion = q.projection.after(s.injections[0]);
  Morphism projection = factorThroughQuotient(e.cover.after(s.projections[1]), q);
  return {q.module, inclusion, projection};
}

// ------------------------------------------------------------ AR translates

Representation tau(const Representation &m) {
  if (m.isZero()) return m;
  ProjectivePresentation p = minimalPresentation(m);
  if (p.first.vertices.empty()) return Representation::zero(m.algebra());
  Morphism nu = nakayama(p.p1, p.first.vertices, p.zero.vertices);
  return kernel(nu).module;
}

Representation tauInverse(const Representation &m) {
  Representation t = tau(dual(m));
  return dual(t);
}

bool isTauRigid(const Representation &m) { return homDim(m, tau(m)) == 0; }

bool isTauMinusRigid(const Representation &m) { return homDim(tauInverse(m), m) == 0; }

std::optional<ShortExactSequence> almostSplitSequence(const Representation &x) {
  Representation t = tau(x);
  if (t.isZero()) return std::nullopt;
  ExtSpace ext(x, t);
  if (ext.dim() == 0) throw Error(ErrorCode::Precondition, "Ext(x, tau x) vanishes");
  // socle under the pushout action of rad End(tau x)
  Matrix action(0, ext.dim());
  for (const auto &psi : endomorphismRadical(t)) {
    Matrix block(ext.dim(), ext.dim());
    for (std::size_t k = 0; k < ext.dim(); ++k) {
      Vector c = ext.coordinates(psi.after(ext.basis()[k].cocycle));
      for (std::size_t r = 0; r < c.size(); ++r) block(r, k) = c[r];
    }
    action = vstack(action, block);
  }
  Vector pick(ext.dim());
  if (action.rows() == 0) {
    pick[0] = 1;
  } else {
    auto socle = kernelBasis(action);
    if (socle.empty()) throw Error(ErrorCode::Precondition, "Ext(x, tau x) has zero socle");
    pick = socle.front();
  }
  return realizeExtension(ext.element(pick));
}

}  // namespace strat
