#include "strat/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strat/error.hpp"

namespace strat {

namespace {

constexpr std::size_t kMaxEnumeratedPaths = 200000;

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto &v : vertices_)
    if (!seen.insert(v).second)
      throw Error(ErrorCode::DuplicateName, "duplicate vertex \"" + v + "\"");
  seen.clear();
  for (const auto &a : arrows_) {
    if (!seen.insert(a.name).second)
      throw Error(ErrorCode::DuplicateName, "duplicate arrow \"" + a.name + "\"");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw Error(ErrorCode::UnknownVertex, "arrow \"" + a.name + "\" has an undeclared endpoint");
  }
}

std::optional<std::size_t> Quiver::findVertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::findArrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Quiver::vertexIndex(std::string_view name) const {
  auto v = findVertex(name);
  if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex \"" + std::string(name) + "\"");
  return *v;
}

std::vector<std::size_t> Quiver::arrowsInto(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::arrowsOutOf(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::string formatPath(const Quiver &q, const Path &p) {
  if (p.arrows.empty()) return "e" + q.vertexName(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

std::size_t Relation::maxLength() const {
  std::size_t m = 0;
  for (const auto &t : terms) m = std::max(m, t.path.length());
  return m;
}

Relation reverseRelation(const Relation &r) {
  Relation out;
  for (const auto &t : r.terms) {
    Path p;
    p.source = t.path.target;
    p.target = t.path.source;
    p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
    out.terms.push_back({t.coefficient, std::move(p)});
  }
  return out;
}

// ------------------------------------------------------------ path basis

namespace {

Path concat(const Path &a, const Path &b) {
  Path p;
  p.source = a.source;
  p.target = b.target;
  p.arrows = a.arrows;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

std::vector<Path> allPathsUpTo(const Quiver &q, std::size_t maxLen) {
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertexCount(); ++v) paths.push_back(Path{v, v, {}});
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxLen; ++len) {
    std::size_t end = paths.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t a = 0; a < q.arrowCount(); ++a) {
        if (q.arrow(a).source != paths[i].target) continue;
        Path p = paths[i];
        p.arrows.push_back(a);
        p.target = q.arrow(a).target;
        paths.push_back(std::move(p));
        if (paths.size() > kMaxEnumeratedPaths)
          throw Error(ErrorCode::CapExceeded,
                      "path enumeration exceeded " + std::to_string(kMaxEnumeratedPaths) +
                          " paths; the algebra may be infinite-dimensional");
      }
    begin = end;
  }
  return paths;
}

// Longer paths first so that pivots land on the longest paths.
bool reductionOrder(const Path &a, const Path &b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.arrows < b.arrows;
}

}  // namespace

PathBasisResult pathBasisUpTo(const Quiver &quiver, const std::vector<Relation> &relations,
                              std::size_t level) {
  const std::size_t top = level + 1;
  const std::size_t nv = quiver.vertexCount();
  std::vector<Path> paths = allPathsUpTo(quiver, top);

  // Group by endpoints.
  std::vector<std::vector<Path>> group(nv * nv);
  for (auto &p : paths) group[p.source * nv + p.target].push_back(p);
  std::vector<std::map<Path, std::size_t>> column(nv * nv);
  for (auto &g : group) {
    std::sort(g.begin(), g.end(), reductionOrder);
  }
  for (std::size_t k = 0; k < group.size(); ++k)
    for (std::size_t i = 0; i < group[k].size(); ++i) column[k][group[k][i]] = i;

  // Products p * r * q with every term of length <= top.
  std::vector<std::vector<Vector>> rows(nv * nv);
  for (const auto &r : relations) {
    const std::size_t m = r.maxLength();
    if (m > top) continue;
    for (const auto &p : paths) {
      if (p.target != r.source() || p.length() + m > top) continue;
      for (const auto &q : paths) {
        if (q.source != r.target() || p.length() + m + q.length() > top) continue;
        std::size_t k = p.source * nv + q.target;
        Vector row(group[k].size());
        for (const auto &t : r.terms) row[column[k].at(concat(concat(p, t.path), q))] += t.coefficient;
        rows[k].push_back(std::move(row));
      }
    }
  }

  PathBasisResult res;
  res.level = level;
  bool allReduce = true;
  // basis index of each non-pivot path
  std::map<Path, std::size_t> basisIndex;
  std::vector<std::pair<std::size_t, Echelon>> echelons;
  std::vector<std::vector<bool>> pivotMask(nv * nv);
  for (std::size_t k = 0; k < group.size(); ++k) {
    const auto &g = group[k];
    pivotMask[k].assign(g.size(), false);
    Echelon e;
    if (!rows[k].empty()) {
      e = rowReduce(Matrix::fromRows(rows[k], g.size()));
      for (auto p : e.pivots) pivotMask[k][p] = true;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (pivotMask[k][i]) continue;
      if (g[i].length() == top) {
        allReduce = false;
        continue;
      }
      basisIndex[g[i]] = 0;
    }
    echelons.emplace_back(k, std::move(e));
  }
  // Stable global order: by source, then length, then arrows.
  std::vector<Path> basis;
  for (auto &[p, idx] : basisIndex) basis.push_back(p);
  std::sort(basis.begin(), basis.end(), [](const Path &a, const Path &b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.target < b.target;
  });
  for (std::size_t i = 0; i < basis.size(); ++i) basisIndex[basis[i]] = i;
  res.basis = basis;

  // Reduction of every pivot path (of any length <= top) in basis coordinates.
  std::map<Path, Vector> reduction;
  for (auto &[k, e] : echelons) {
    const auto &g = group[k];
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      Vector v(basis.size());
      bool ok = true;
      for (std::size_t c = 0; c < g.size(); ++c) {
        if (pivotMask[k][c] || sgn(e.reduced(i, c)) == 0) continue;
        auto it = basisIndex.find(g[c]);
        if (it == basisIndex.end()) {
          ok = false;  // reduces onto an unreduced path of maximal length
          break;
        }
        v[it->second] = -e.reduced(i, c);
      }
      if (ok) reduction[g[e.pivots[i]]] = std::move(v);
    }
  }
  for (const auto &[p, v] : reduction)
    if (p.length() == top) res.reductions[p] = v;
  if (!allReduce) return res;

  // Candidate right regular representation; verify it realizes kQ/I.
  const std::size_t dim = basis.size();
  auto image = [&](const Path &p) -> Vector {
    auto it = basisIndex.find(p);
    if (it != basisIndex.end()) {
      Vector v(dim);
      v[it->second] = 1;
      return v;
    }
    return reduction.at(p);
  };
  std::vector<Matrix> act(quiver.arrowCount(), Matrix(dim, dim));
  for (std::size_t a = 0; a < quiver.arrowCount(); ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (basis[b].target != quiver.arrow(a).source) continue;
      Path p = basis[b];
      p.arrows.push_back(a);
      p.target = quiver.arrow(a).target;
      Vector v = image(p);
      for (std::size_t i = 0; i < dim; ++i) act[a](i, b) = v[i];
    }
  auto applyPath = [&](Vector x, const Path &p) {
    for (auto a : p.arrows) x = act[a] * x;
    return x;
  };
  for (const auto &r : relations)
    for (std::size_t b = 0; b < dim; ++b) {
      if (basis[b].target != r.source()) continue;
      Vector e(dim);
      e[b] = 1;
      Vector sum(dim);
      for (const auto &t : r.terms) {
        Vector y = applyPath(e, t.path);
        for (std::size_t i = 0; i < dim; ++i) sum[i] += t.coefficient * y[i];
      }
      for (const auto &s : sum)
        if (sgn(s) != 0) return res;
    }
  // The trivial paths must generate everything under the arrow action.
  std::vector<Vector> span;
  for (std::size_t b = 0; b < dim; ++b)
    if (basis[b].length() == 0) {
      Vector e(dim);
      e[b] = 1;
      span.push_back(e);
    }
  std::size_t r = 0;
  for (;;) {
    std::vector<Vector> next = span;
    for (const auto &x : span)
      for (std::size_t a = 0; a < quiver.arrowCount(); ++a) next.push_back(act[a] * x);
    Matrix m = Matrix::fromColumns(next, dim);
    std::size_t nr = rank(m);
    span = imageBasis(m);
    if (nr == r) break;
    r = nr;
  }
  if (r != dim) return res;
  res.terminated = true;
  res.rightAction = std::move(act);
  return res;
}

// --------------------------------------------------------------- Algebra

AlgebraPtr Algebra::create(Quiver quiver, std::vector<Relation> relations, std::size_t lengthCap) {
  for (const auto &r : relations) {
    if (r.terms.empty())
      throw Error(ErrorCode::Schema, "relation with no terms");
    for (const auto &t : r.terms) {
      if (t.path.arrows.empty())
        throw Error(ErrorCode::Schema, "relation term with an empty path");
      if (sgn(t.coefficient) == 0)
        throw Error(ErrorCode::InvalidScalar, "relation coefficient must be nonzero");
      for (std::size_t i = 0; i + 1 < t.path.arrows.size(); ++i)
        if (quiver.arrow(t.path.arrows[i]).target != quiver.arrow(t.path.arrows[i + 1]).source)
          throw Error(ErrorCode::NonComposablePath,
                      "path " + formatPath(quiver, t.path) + " is not composable");
      if (t.path.source != r.source() || t.path.target != r.target())
        throw Error(ErrorCode::MixedRelationEndpoints,
                    "relation mixes paths with different sources or targets");
    }
  }

  std::shared_ptr<Algebra> alg(new Algebra());
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);
  alg->lengthCap_ = lengthCap;
  const Quiver &q = alg->quiver_;

  std::optional<PathBasisResult> found;
  for (std::size_t level = 0; level < lengthCap; ++level) {
    PathBasisResult res = pathBasisUpTo(q, alg->relations_, level);
    if (res.terminated) {
      found = std::move(res);
      break;
    }
  }
  if (!found)
    throw Error(ErrorCode::NotFiniteDimensional,
                "paths do not reduce within length cap " + std::to_string(lengthCap) +
                    "; the algebra is not finite-dimensional or the cap is too small");

  alg->basis_ = found->basis;
  const std::size_t dim = alg->basis_.size();
  const std::size_t nv = q.vertexCount();
  alg->between_.assign(nv * nv, {});
  alg->trivial_.assign(nv, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    const Path &p = alg->basis_[i];
    alg->between_[p.source * nv + p.target].push_back(i);
    if (p.length() == 0) alg->trivial_[p.source] = i;
    alg->maxPathLength_ = std::max(alg->maxPathLength_, p.length());
  }
  alg->rightAction_ = std::move(found->rightAction);

  std::ostringstream fp;
  fp << "V";
  for (const auto &v : q.vertices()) fp << "|" << v;
  fp << ";A";
  for (const auto &a : q.arrows()) fp << "|" << a.name << ":" << a.source << ">" << a.target;
  fp << ";R";
  for (const auto &r : alg->relations_) {
    fp << "|";
    for (const auto &t : r.terms) fp << formatScalar(t.coefficient) << "*" << formatPath(q, t.path) << "+";
  }
  alg->fingerprint_ = fp.str();
  return alg;
}

Vector Algebra::basisVector(std::size_t i) const {
  Vector v(dimension());
  v.at(i) = 1;
  return v;
}

Vector Algebra::actArrow(const Vector &x, std::size_t arrow) const {
  return rightAction_.at(arrow) * x;
}

Vector Algebra::actPath(Vector x, const Path &p) const {
  if (p.arrows.empty()) {
    // x e_v keeps only the paths ending at v
    for (std::size_t i = 0; i < x.size(); ++i)
      if (basis_[i].target != p.source) x[i] = 0;
    return x;
  }
  for (auto a : p.arrows) x = actArrow(x, a);
  return x;
}

Vector Algebra::residue(const Path &p) const {
  return actPath(basisVector(trivialIndex(p.source)), p);
}

Vector Algebra::multiply(const Vector &x, const Vector &y) const {
  Vector out(dimension());
  for (std::size_t b = 0; b < dimension(); ++b) {
    if (sgn(y[b]) == 0) continue;
    Vector xb = actPath(x, basis_[b]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[b] * xb[i];
  }
  return out;
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(oppositeMutex_);
  if (oppositeStrong_) return oppositeStrong_;
  if (auto sp = oppositeWeak_.lock()) return sp;
  std::vector<Arrow> arrows;
  for (const auto &a : quiver_.arrows()) arrows.push_back({a.name, a.target, a.source});
  Quiver q(quiver_.vertices(), std::move(arrows));
  std::vector<Relation> rels;
  for (const auto &r : relations_) rels.push_back(reverseRelation(r));
  AlgebraPtr op = Algebra::create(std::move(q), std::move(rels), lengthCap_);
  {
    std::lock_guard<std::mutex> opLock(op->oppositeMutex_);
    op->oppositeWeak_ = shared_from_this();
  }
  oppositeStrong_ = op;
  return op;
}

}  // namespace strat
