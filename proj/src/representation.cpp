#include "strat/representation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "strat/error.hpp"

namespace strat {

// ------------------------------------------------------------ Representation

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!algebra_) throw Error(ErrorCode::InvalidModule, "representation without an algebra");
  const Quiver &q = algebra_->quiver();
  if (dims_.size() != q.vertexCount())
    throw Error(ErrorCode::InvalidModule, "dimension vector length does not match the quiver");
  if (maps_.size() != q.arrowCount())
    throw Error(ErrorCode::InvalidModule, "arrow map count does not match the quiver");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow &arr = q.arrow(a);
    if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
      throw Error(ErrorCode::InvalidModule, "map for arrow " + arr.name + " has the wrong shape");
  }
  for (const auto &rel : algebra_->relations()) {
    Matrix sum(dims_[rel.target()], dims_[rel.source()]);
    for (const auto &t : rel.terms) sum += pathMap(t.path) * t.coefficient;
    if (!sum.isZero())
      throw Error(ErrorCode::InvalidModule,
                  "relation does not vanish: " + formatPath(q, rel.terms.front().path));
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  std::vector<std::size_t> dims(algebra->vertexCount(), 0);
  std::vector<Matrix> maps(algebra->arrowCount());
  return Representation(std::move(algebra), std::move(dims), std::move(maps));
}

Representation Representation::simple(AlgebraPtr algebra, std::size_t v) {
  const Quiver &q = algebra->quiver();
  if (v >= q.vertexCount()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::vector<std::size_t> dims(q.vertexCount(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto &a : q.arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return Representation(std::move(algebra), std::move(dims), std::move(maps));
}

Representation Representation::projective(AlgebraPtr algebra, std::size_t v) {
  const Algebra &A = *algebra;
  const Quiver &q = A.quiver();
  if (v >= q.vertexCount()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::vector<std::size_t> dims(q.vertexCount());
  for (std::size_t w = 0; w < dims.size(); ++w) dims[w] = A.basisBetween(v, w).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const Arrow &arr = q.arrow(a);
    const auto &from = A.basisBetween(v, arr.source);
    const auto &to = A.basisBetween(v, arr.target);
    Matrix m(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      Vector img = A.actArrow(A.basisVector(from[c]), a);
      for (std::size_t r = 0; r < to.size(); ++r) m(r, c) = img[to[r]];
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(algebra), std::move(dims), std::move(maps));
}

// I(v)_u is dual to the residue paths u -> v; an arrow a: u -> u' acts as the
// transpose of q |-> a q. Built in the algebra's own path coordinates (rather
// than through the opposite algebra) so that Nakayama images of maps between
// projectives land on exactly these matrices.
Representation Representation::injective(AlgebraPtr algebra, std::size_t v) {
  const Algebra &A = *algebra;
  const Quiver &q = A.quiver();
  if (v >= q.vertexCount()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  std::vector<std::size_t> dims(q.vertexCount());
  for (std::size_t u = 0; u < dims.size(); ++u) dims[u] = A.basisBetween(u, v).size();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const Arrow &arr = q.arrow(a);
    const auto &rows = A.basisBetween(arr.source, v);
    const auto &cols = A.basisBetween(arr.target, v);
    Vector arrow = A.residue(Path{arr.source, arr.target, {a}});
    Matrix left(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Vector img = A.multiply(arrow, A.basisVector(cols[c]));
      for (std::size_t r = 0; r < rows.size(); ++r) left(r, c) = img[rows[r]];
    }
    maps.push_back(left.transpose());
  }
  return Representation(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Representation::totalDim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Representation::pathMap(const Path &p) const {
  Matrix m = Matrix::identity(dims_[p.source]);
  for (auto a : p.arrows) m = maps_[a] * m;
  return m;
}

bool Representation::operator==(const Representation &o) const {
  if (!algebra_ || !o.algebra_) return !algebra_ && !o.algebra_;
  return algebra_->sameAs(*o.algebra_) && dims_ == o.dims_ && maps_ == o.maps_;
}

void requireSameAlgebra(const Representation &a, const Representation &b) {
  if (!a.algebra() || !b.algebra() || !a.algebra()->sameAs(*b.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "modules are defined over different algebras");
}

// ------------------------------------------------------------ Morphism

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> vertexMaps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(vertexMaps)) {
  requireSameAlgebra(source_, target_);
  const Quiver &q = source_.algebra()->quiver();
  if (maps_.size() != q.vertexCount())
    throw Error(ErrorCode::InvalidModule, "morphism needs one matrix per vertex");
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (maps_[v].rows() != target_.dim(v) || maps_[v].cols() != source_.dim(v))
      throw Error(ErrorCode::InvalidModule, "morphism matrix has the wrong shape at vertex " +
                                                q.vertexName(v));
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const Arrow &arr = q.arrow(a);
    if (!(maps_[arr.target] * source_.map(a) == target_.map(a) * maps_[arr.source]))
      throw Error(ErrorCode::InvalidModule, "morphism does not commute with arrow " + arr.name);
  }
}

Morphism Morphism::zero(const Representation &source, const Representation &target) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    maps.emplace_back(target.dim(v), source.dim(v));
  return Morphism(source, target, std::move(maps));
}

Morphism Morphism::identity(const Representation &m) {
  std::vector<Matrix> maps;
  for (auto d : m.dims()) maps.push_back(Matrix::identity(d));
  return Morphism(m, m, std::move(maps));
}

bool Morphism::isZero() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const Matrix &m) { return m.isZero(); });
}

bool Morphism::isInjective() const {
  for (const auto &m : maps_)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool Morphism::isSurjective() const {
  for (const auto &m : maps_)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool Morphism::isIsomorphism() const {
  if (source_.dims() != target_.dims()) return false;
  return isInjective();
}

Morphism Morphism::after(const Morphism &first) const {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) {
    if (first.maps_[v].rows() != maps_[v].cols())
      throw Error(ErrorCode::DimensionMismatch, "morphisms are not composable");
    maps.push_back(maps_[v] * first.maps_[v]);
  }
  return Morphism(first.source_, target_, std::move(maps));
}

Morphism Morphism::operator+(const Morphism &o) const {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + o.maps_[v]);
  return Morphism(source_, target_, std::move(maps));
}

Morphism Morphism::operator*(const Scalar &s) const {
  std::vector<Matrix> maps;
  for (const auto &m : maps_) maps.push_back(m * s);
  return Morphism(source_, target_, std::move(maps));
}

Vector Morphism::flatten() const {
  Vector out;
  for (const auto &m : maps_) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

Morphism combine(const std::vector<Morphism> &basis, const std::vector<Scalar> &coeffs) {
  if (basis.empty() || basis.size() != coeffs.size())
    throw Error(ErrorCode::DimensionMismatch, "combine: basis and coefficients disagree");
  const auto &b0 = basis.front();
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < b0.maps().size(); ++v) {
    Matrix m(b0.at(v).rows(), b0.at(v).cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeffs[i] != 0) m += basis[i].at(v) * coeffs[i];
    maps.push_back(std::move(m));
  }
  return Morphism(b0.source(), b0.target(), std::move(maps));
}

// ------------------------------------------------------------ Hom

std::vector<Morphism> homBasis(const Representation &m, const Representation &n) {
  requireSameAlgebra(m, n);
  const Quiver &q = m.algebra()->quiver();
  const std::size_t nv = q.vertexCount();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};

  auto var = [&](std::size_t v, std::size_t r, std::size_t c) {
    return offset[v] + r * m.dim(v) + c;
  };
  std::size_t eqCount = 0;
  for (const auto &arr : q.arrows()) eqCount += n.dim(arr.target) * m.dim(arr.source);
  Matrix sys(eqCount, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const Arrow &arr = q.arrow(a);
    const std::size_t i = arr.source, j = arr.target;
    const Matrix &ma = m.map(a);
    const Matrix &na = n.map(a);
    // F_j M_a - N_a F_i = 0, entry (r, c)
    for (std::size_t r = 0; r < n.dim(j); ++r)
      for (std::size_t c = 0; c < m.dim(i); ++c, ++row) {
        for (std::size_t k = 0; k < m.dim(j); ++k)
          if (ma(k, c) != 0) sys(row, var(j, r, k)) += ma(k, c);
        for (std::size_t k = 0; k < n.dim(i); ++k)
          if (na(r, k) != 0) sys(row, var(i, k, c)) -= na(r, k);
      }
  }
  std::vector<Morphism> out;
  for (const auto &x : kernelBasis(sys)) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix f(n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c) f(r, c) = x[var(v, r, c)];
      maps.push_back(std::move(f));
    }
    out.emplace_back(m, n, std::move(maps));
  }
  return out;
}

std::size_t homDim(const Representation &m, const Representation &n) {
  return homBasis(m, n).size();
}

// ------------------------------------------------------------ sub / quotient

Subobject submodule(const Representation &m, const std::vector<Matrix> &spans) {
  const Quiver &q = m.algebra()->quiver();
  std::vector<SplitBasis> split;
  for (std::size_t v = 0; v < q.vertexCount(); ++v) split.emplace_back(spans[v], m.dim(v));
  std::vector<std::size_t> dims;
  for (const auto &s : split) dims.push_back(s.subDim());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const Arrow &arr = q.arrow(a);
    Matrix moved = m.map(a) * split[arr.source].sub();
    Matrix coords = split[arr.target].subCoords() * moved;
    if (!(split[arr.target].sub() * coords == moved))
      throw Error(ErrorCode::InvalidModule, "subspace is not closed under arrow " + arr.name);
    maps.push_back(std::move(coords));
  }
  Representation sub(m.algebra(), std::move(dims), std::move(maps));
  std::vector<Matrix> incl;
  for (const auto &s : split) incl.push_back(s.sub());
  Morphism inclusion(sub, m, std::move(incl));
  return {std::move(sub), std::move(inclusion)};
}

Quotient quotient(const Representation &m, const std::vector<Matrix> &spans) {
  const Quiver &q = m.algebra()->quiver();
  std::vector<SplitBasis> split;
  for (std::size_t v = 0; v < q.vertexCount(); ++v) split.emplace_back(spans[v], m.dim(v));
  std::vector<std::size_t> dims;
  for (const auto &s : split) dims.push_back(s.quotDim());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const Arrow &arr = q.arrow(a);
    Matrix proj = split[arr.target].quotCoords();
    if (!(proj * m.map(a) * split[arr.source].sub()).isZero())
      throw Error(ErrorCode::InvalidModule, "subspace is not closed under arrow " + arr.name);
    maps.push_back(proj * m.map(a) * split[arr.source].complement());
  }
  Representation quot(m.algebra(), std::move(dims), std::move(maps));
  std::vector<Matrix> pr;
  for (const auto &s : split) pr.push_back(s.quotCoords());
  Morphism projection(m, quot, std::move(pr));
  return {std::move(quot), std::move(projection)};
}

Subobject kernel(const Morphism &f) {
  std::vector<Matrix> spans;
  for (const auto &m : f.maps()) spans.push_back(kernelMatrix(m));
  return submodule(f.source(), spans);
}

namespace {

std::vector<Matrix> imageSpans(const Morphism &f) {
  std::vector<Matrix> spans;
  for (const auto &m : f.maps()) spans.push_back(imageMatrix(m));
  return spans;
}

}  // namespace

Subobject image(const Morphism &f) { return submodule(f.target(), imageSpans(f)); }

Quotient cokernel(const Morphism &f) { return quotient(f.target(), imageSpans(f)); }

Morphism factorThroughQuotient(const Morphism &f, const Quotient &p) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) {
    auto gt = solve(p.projection.at(v).transpose(), f.at(v).transpose());
    if (!gt) throw Error(ErrorCode::Precondition, "morphism does not factor through the quotient");
    maps.push_back(gt->transpose());
  }
  return Morphism(p.module, f.target(), std::move(maps));
}

Morphism factorThroughSubobject(const Morphism &f, const Subobject &i) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) {
    auto g = solve(i.inclusion.at(v), f.at(v));
    if (!g) throw Error(ErrorCode::Precondition, "morphism does not factor through the submodule");
    maps.push_back(std::move(*g));
  }
  return Morphism(f.source(), i.module, std::move(maps));
}

// ------------------------------------------------------------ direct sums

DirectSum directSum(AlgebraPtr algebra, const std::vector<Representation> &parts) {
  const Quiver &q = algebra->quiver();
  for (const auto &p : parts)
    if (!p.algebra() || !p.algebra()->sameAs(*algebra))
      throw Error(ErrorCode::AlgebraMismatch, "direct sum of modules over different algebras");
  std::vector<std::size_t> dims(q.vertexCount(), 0);
  for (const auto &p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto &p : parts) blocks.push_back(p.map(a));
    maps.push_back(blockDiagonal(blocks));
  }
  Representation sum(algebra, dims, std::move(maps));

  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> off(q.vertexCount(), 0);
  for (const auto &p : parts) {
    std::vector<Matrix> inj, pr;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      Matrix i(dims[v], p.dim(v));
      for (std::size_t k = 0; k < p.dim(v); ++k) i(off[v] + k, k) = 1;
      pr.push_back(i.transpose());
      inj.push_back(std::move(i));
      off[v] += p.dim(v);
    }
    out.injections.emplace_back(p, sum, std::move(inj));
    out.projections.emplace_back(sum, p, std::move(pr));
  }
  return out;
}

DirectSum directSum(const std::vector<Representation> &parts) {
  if (parts.empty())
    throw Error(ErrorCode::Precondition, "empty direct sum needs an explicit algebra");
  return directSum(parts.front().algebra(), parts);
}

// ------------------------------------------------------------ trace / reject

Subobject traceOf(const std::vector<Representation> &generators, const Representation &x) {
  const std::size_t nv = x.dims().size();
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < nv; ++v) spans.emplace_back(x.dim(v), 0);
  for (const auto &g : generators)
    for (const auto &f : homBasis(g, x))
      for (std::size_t v = 0; v < nv; ++v)
        if (!f.at(v).isZero()) spans[v] = hstack(spans[v], f.at(v));
  return submodule(x, spans);
}

Subobject rejectOf(const std::vector<Representation> &cogenerators, const Representation &x) {
  const std::size_t nv = x.dims().size();
  std::vector<Matrix> stacked;
  for (std::size_t v = 0; v < nv; ++v) stacked.emplace_back(0, x.dim(v));
  for (const auto &c : cogenerators)
    for (const auto &f : homBasis(x, c))
      for (std::size_t v = 0; v < nv; ++v)
        if (!f.at(v).isZero()) stacked[v] = vstack(stacked[v], f.at(v));
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < nv; ++v)
    spans.push_back(stacked[v].rows() == 0 ? Matrix::identity(x.dim(v)) : kernelMatrix(stacked[v]));
  return submodule(x, spans);
}

// ------------------------------------------------------------ duality

Representation dual(const Representation &m) {
  std::vector<Matrix> maps;
  for (const auto &a : m.maps()) maps.push_back(a.transpose());
  return Representation(m.algebra()->opposite(), m.dims(), std::move(maps));
}

Morphism dual(const Morphism &f) {
  std::vector<Matrix> maps;
  for (const auto &a : f.maps()) maps.push_back(a.transpose());
  return Morphism(dual(f.target()), dual(f.source()), std::move(maps));
}

// ------------------------------------------------------------ search helpers

std::vector<std::vector<Scalar>> sweepCoefficients(std::size_t n, const SweepConfig &cfg) {
  std::vector<std::vector<Scalar>> out;
  if (n == 0) return out;
  auto full = [&] { return out.size() >= cfg.maxCombinations; };
  for (std::size_t i = 0; i < n && !full(); ++i) {
    std::vector<Scalar> e(n, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  if (n > 1 && !full()) out.emplace_back(n, Scalar(1));

  std::vector<Scalar> values;
  for (int c = 1; c <= cfg.coefficientBound; ++c) {
    values.emplace_back(c);
    values.emplace_back(-c);
  }
  // supports of growing size; the leading coefficient is kept positive
  for (std::size_t k = 2; k <= n && !full(); ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) support.push_back(i);
      std::vector<std::size_t> digit(k, 0);
      while (!full()) {
        std::vector<Scalar> c(n, 0);
        for (std::size_t t = 0; t < k; ++t) c[support[t]] = values[digit[t]];
        if (c[support[0]] > 0) out.push_back(std::move(c));
        std::size_t t = 0;
        while (t < k && ++digit[t] == values.size()) digit[t++] = 0;
        if (t == k) break;
      }
    } while (!full() && std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

namespace {

bool isNilpotentMatrix(const Matrix &m) {
  if (m.rows() == 0) return true;
  Matrix p = m;
  for (std::size_t k = 1; k < m.rows() && !p.isZero(); ++k) p = p * m;
  return p.isZero();
}

Morphism inverseOf(const Morphism &f) {
  std::vector<Matrix> maps;
  for (const auto &m : f.maps()) {
    auto inv = inverse(m);
    if (!inv) throw Error(ErrorCode::Precondition, "morphism is not invertible");
    maps.push_back(std::move(*inv));
  }
  return Morphism(f.target(), f.source(), std::move(maps));
}

// Some isomorphism x -> y between indecomposables, if one exists.
std::optional<Morphism> isoIndecomposable(const Representation &x, const Representation &y) {
  if (x.dims() != y.dims()) return std::nullopt;
  auto xy = homBasis(x, y);
  if (xy.empty()) return std::nullopt;
  for (const auto &f : xy)
    if (f.isIsomorphism()) return f;
  auto yx = homBasis(y, x);
  for (const auto &f : xy)
    for (const auto &g : yx)
      if (!isNilpotent(g.after(f))) return f;  // g f is a unit of the local ring End(x)
  return std::nullopt;
}

struct Piece {
  Representation module;
  Morphism embedding;   // module -> M
  Morphism projection;  // M -> module
};

// Fitting splitting of x along an endomorphism with a rational eigenvalue that
// is not its only eigenvalue.
std::optional<std::pair<Subobject, Subobject>> fittingSplit(const Morphism &phi) {
  const Representation &x = phi.source();
  std::vector<Scalar> eigen;
  for (const auto &m : phi.maps()) {
    if (m.rows() == 0) continue;
    auto roots = rationalRoots(characteristicPolynomial(m));
    if (!roots) continue;
    for (const auto &r : *roots)
      if (std::find(eigen.begin(), eigen.end(), r) == eigen.end()) eigen.push_back(r);
  }
  for (const auto &lambda : eigen) {
    std::vector<Matrix> kerSpans, imSpans;
    bool kerZero = true, imZero = true;
    for (std::size_t v = 0; v < x.dims().size(); ++v) {
      const std::size_t d = x.dim(v);
      Matrix psi = phi.at(v) - Matrix::identity(d) * lambda;
      Matrix pw = Matrix::identity(d);
      for (std::size_t k = 0; k < d; ++k) pw = pw * psi;
      kerSpans.push_back(kernelMatrix(pw));
      imSpans.push_back(imageMatrix(pw));
      kerZero = kerZero && kerSpans.back().cols() == 0;
      imZero = imZero && imSpans.back().cols() == 0;
    }
    if (kerZero || imZero) continue;
    return std::make_pair(submodule(x, kerSpans), submodule(x, imSpans));
  }
  return std::nullopt;
}

// Projections x -> a, x -> b for an internal direct sum x = a + b.
std::pair<Morphism, Morphism> complementaryProjections(const Subobject &a, const Subobject &b) {
  const Representation &x = a.inclusion.target();
  std::vector<Matrix> pa, pb;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    Matrix inv = *inverse(hstack(a.inclusion.at(v), b.inclusion.at(v)));
    pa.push_back(inv.block(0, 0, a.module.dim(v), x.dim(v)));
    pb.push_back(inv.block(a.module.dim(v), 0, b.module.dim(v), x.dim(v)));
  }
  return {Morphism(x, a.module, std::move(pa)), Morphism(x, b.module, std::move(pb))};
}

void splitInto(const Piece &piece, const SweepConfig &cfg, std::vector<Piece> &out) {
  const Representation &x = piece.module;
  if (x.isZero()) return;
  auto end = homBasis(x, x);
  if (endomorphismTopDimension(x) == 1) {
    out.push_back(piece);
    return;
  }
  std::optional<std::pair<Subobject, Subobject>> split;
  for (const auto &phi : end) {
    if ((split = fittingSplit(phi))) break;
  }
  if (!split) {
    for (const auto &c : sweepCoefficients(end.size(), cfg))
      if ((split = fittingSplit(combine(end, c)))) break;
  }
  if (!split)
    throw Error(ErrorCode::NonSplitEndomorphismRing,
                "no idempotent endomorphism found over the rationals");
  auto [pa, pb] = complementaryProjections(split->first, split->second);
  splitInto({split->first.module, piece.embedding.after(split->first.inclusion),
             pa.after(piece.projection)},
            cfg, out);
  splitInto({split->second.module, piece.embedding.after(split->second.inclusion),
             pb.after(piece.projection)},
            cfg, out);
}

}  // namespace

bool isNilpotent(const Morphism &f) {
  for (const auto &m : f.maps())
    if (!isNilpotentMatrix(m)) return false;
  return true;
}

namespace {

Matrix traceForm(const std::vector<Morphism> &end) {
  const std::size_t n = end.size();
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar tr = 0;
      for (std::size_t v = 0; v < end[i].maps().size(); ++v) {
        const Matrix &a = end[i].at(v);
        const Matrix &b = end[j].at(v);
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t k = 0; k < a.cols(); ++k) tr += a(r, k) * b(k, r);
      }
      form(i, j) = tr;
      form(j, i) = tr;
    }
  return form;
}

}  // namespace

std::size_t endomorphismTopDimension(const Representation &m) {
  return rank(traceForm(homBasis(m, m)));
}

std::vector<Morphism> endomorphismRadical(const Representation &m) {
  auto end = homBasis(m, m);
  std::vector<Morphism> out;
  for (const auto &k : kernelBasis(traceForm(end))) out.push_back(combine(end, k));
  return out;
}

bool isIndecomposable(const Representation &m) {
  return !m.isZero() && endomorphismTopDimension(m) == 1;
}

DecomposedModule decompose(const Representation &m, const SweepConfig &cfg) {
  DecomposedModule out;
  if (m.isZero()) return out;
  std::vector<Piece> pieces;
  splitInto({m, Morphism::identity(m), Morphism::identity(m)}, cfg, pieces);
  for (const auto &p : pieces) {
    bool placed = false;
    for (auto &s : out.summands) {
      auto iso = isoIndecomposable(s.module, p.module);
      if (!iso) continue;
      s.embeddings.push_back(p.embedding.after(*iso));
      s.projections.push_back(inverseOf(*iso).after(p.projection));
      ++s.multiplicity;
      placed = true;
      break;
    }
    if (!placed) out.summands.push_back({p.module, 1, {p.embedding}, {p.projection}});
  }
  return out;
}

bool isIsomorphicIndecomposable(const Representation &x, const Representation &y) {
  requireSameAlgebra(x, y);
  return isoIndecomposable(x, y).has_value();
}

bool isIsomorphic(const Representation &m, const Representation &n, const SweepConfig &cfg) {
  requireSameAlgebra(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.isZero()) return true;
  auto basis = homBasis(m, n);
  if (basis.empty()) return false;
  for (const auto &f : basis)
    if (f.isIsomorphism()) return true;
  for (const auto &c : sweepCoefficients(basis.size(), cfg))
    if (combine(basis, c).isIsomorphism()) return true;

  auto dm = decompose(m, cfg);
  auto dn = decompose(n, cfg);
  if (dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto &s : dm.summands) {
    bool found = false;
    for (std::size_t j = 0; j < dn.summands.size() && !found; ++j) {
      if (used[j] || dn.summands[j].multiplicity != s.multiplicity) continue;
      if (isIsomorphicIndecomposable(s.module, dn.summands[j].module)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool isBasic(const Representation &m) {
  auto d = decompose(m);
  return std::all_of(d.summands.begin(), d.summands.end(),
                     [](const Summand &s) { return s.multiplicity == 1; });
}

}  // namespace strat
