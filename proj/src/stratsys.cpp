#include "strat/stratsys.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "strat/error.hpp"
#include "strat/homological.hpp"

namespace strat {

namespace {

void ensure(bool ok, const std::string &what) {
  if (!ok) throw std::logic_error("internal check failed: " + what);
}

OrderedIndex indexFor(const OrderedIndex &index, std::size_t n) {
  if (!index.empty()) return index;
  OrderedIndex out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(std::to_string(k));
  return out;
}

std::string memberLabel(const IndecUniverse &u, const Representation &x) {
  auto i = u.find(x);
  return i ? u.label(*i) : dimensionLabel(x);
}

// Indecomposable summands of m, one per isomorphism class, ordered by label.
std::vector<Representation> distinctSummands(const IndecUniverse &u, const Representation &m) {
  std::vector<std::pair<std::string, Representation>> tagged;
  for (const auto &s : decompose(m).summands) tagged.emplace_back(memberLabel(u, s.module), s.module);
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<Representation> out;
  for (auto &t : tagged) out.push_back(std::move(t.second));
  return out;
}

std::vector<std::size_t> multiplicitiesOf(const std::vector<std::size_t> &factors, std::size_t n) {
  std::vector<std::size_t> out(n, 0);
  for (auto k : factors) ++out[k];
  return out;
}

class FiltrationSearch {
 public:
  FiltrationSearch(const Representation &x, const StratifyingSystem &delta, std::size_t maxResults,
                   const SweepConfig &cfg)
      : x_(x), delta_(delta), max_(maxResults), cfg_(cfg) {}

  std::vector<FiltrationResult> run() {
    if (max_ > 0) search(x_, Morphism::identity(x_));
    return std::move(results_);
  }

 private:
  struct Step {
    std::size_t k;
    Morphism inclusion;  // the submodule left after removing this factor, into X
  };

  bool fits(const Representation &y, const Representation &d) const {
    for (std::size_t v = 0; v < y.dims().size(); ++v)
      if (d.dim(v) > y.dim(v)) return false;
    return true;
  }

  bool done() const { return results_.size() >= max_; }

  void record() {
    FiltrationResult r;
    // steps run from the top of X downwards
    r.chain.push_back(Morphism::zero(Representation::zero(x_.algebra()), x_));
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      r.factors.push_back(it->k);
      if (std::next(it) != path_.rend()) r.chain.push_back(std::next(it)->inclusion);
    }
    r.chain.push_back(Morphism::identity(x_));
    r.multiplicities = multiplicitiesOf(r.factors, delta_.size());
    results_.push_back(std::move(r));
  }

  void search(const Representation &y, const Morphism &intoX) {
    if (y.isZero()) {
      record();
      return;
    }
    // modules already searched without success stay unfilterable
    for (const auto &d : dead_)
      if (d.dims() == y.dims() && isIsomorphic(d, y)) return;
    const std::size_t before = results_.size();
    for (std::size_t k = 0; k < delta_.size() && !done(); ++k) {
      const Representation &d = delta_.modules[k];
      if (!fits(y, d)) continue;
      auto basis = homBasis(y, d);
      if (basis.empty()) continue;
      std::vector<Representation> explored;
      for (const auto &c : sweepCoefficients(basis.size(), cfg_)) {
        if (done()) return;
        Morphism f = combine(basis, c);
        if (!f.isSurjective()) continue;
        Subobject kf = kernel(f);
        bool seen = std::any_of(explored.begin(), explored.end(), [&](const Representation &e) {
          return e.dims() == kf.module.dims() && isIsomorphic(e, kf.module);
        });
        if (seen) continue;
        explored.push_back(kf.module);
        Morphism inc = intoX.after(kf.inclusion);
        path_.push_back({k, inc});
        search(kf.module, inc);
        path_.pop_back();
      }
    }
    if (results_.size() == before) dead_.push_back(y);
  }

  const Representation &x_;
  const StratifyingSystem &delta_;
  std::size_t max_;
  SweepConfig cfg_;
  std::vector<Step> path_;
  std::vector<FiltrationResult> results_;
  std::vector<Representation> dead_;
};

}  // namespace

Representation StratifyingSystem::characteristicModule() const {
  return directSum(modules).module;
}

std::optional<std::string> systemViolation(const std::vector<Representation> &modules,
                                           const OrderedIndex &index) {
  if (modules.empty()) return "a stratifying system needs at least one module";
  OrderedIndex idx = indexFor(index, modules.size());
  for (std::size_t k = 0; k < modules.size(); ++k) {
    requireSameAlgebra(modules[0], modules[k]);
    if (modules[k].isZero() || !isIndecomposable(modules[k]))
      return "not indecomposable at " + idx[k];
  }
  for (std::size_t k = 0; k < modules.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      if (j < k)
        if (auto h = homDim(modules[k], modules[j]))
          return "Hom violation (" + idx[k] + "," + idx[j] + "): dimension " + std::to_string(h);
      if (auto e = ext1Dim(modules[k], modules[j]))
        return "Ext violation (" + idx[k] + "," + idx[j] + "): dimension " + std::to_string(e);
    }
  return std::nullopt;
}

StratifyingSystem verifySystem(std::vector<Representation> modules, OrderedIndex index) {
  index = indexFor(index, modules.size());
  if (index.size() != modules.size())
    throw Error(ErrorCode::Precondition, "index and module list differ in length");
  if (auto w = systemViolation(modules, index))
    throw Error(ErrorCode::CheckFailed, "not a stratifying system: " + *w);
  const std::size_t n = modules.size();
  StratifyingSystem s{std::move(index), std::move(modules), {}, {}};
  s.homDims.assign(n, std::vector<std::size_t>(n, 0));
  s.extDims.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      s.homDims[k][j] = homDim(s.modules[k], s.modules[j]);
      s.extDims[k][j] = ext1Dim(s.modules[k], s.modules[j]);
    }
  return s;
}

bool sameSystem(const StratifyingSystem &a, const StratifyingSystem &b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!isIsomorphicIndecomposable(a.modules[k], b.modules[k])) return false;
  return true;
}

InducedSystems::InducedSystems(Stratum stratum, std::vector<std::vector<Representation>> choices)
    : stratum_(std::move(stratum)), choices_(std::move(choices)) {}

std::size_t InducedSystems::count() const {
  std::size_t n = 1;
  for (const auto &c : choices_) {
    if (c.empty()) return 0;
    if (n > std::numeric_limits<std::size_t>::max() / c.size())
      throw Error(ErrorCode::CapExceeded, "cap exceeded: the number of induced systems overflows");
    n *= c.size();
  }
  return n;
}

StratifyingSystem InducedSystems::at(std::size_t i) const {
  if (i >= count()) throw Error(ErrorCode::Precondition, "system index out of range");
  std::vector<Representation> picked(choices_.size());
  for (std::size_t k = choices_.size(); k-- > 0;) {
    picked[k] = choices_[k][i % choices_[k].size()];
    i /= choices_[k].size();
  }
  return verifySystem(std::move(picked), stratum_.index);
}

std::vector<StratifyingSystem> InducedSystems::all(std::size_t cap) const {
  const std::size_t n = count();
  if (n > cap)
    throw Error(ErrorCode::CapExceeded, "cap exceeded: " + std::to_string(n) +
                                            " induced systems, more than " + std::to_string(cap));
  std::vector<StratifyingSystem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

InducedSystems induceSystems(const OrderedDecomposition &dec, const NestedFamily &family,
                             Side side) {
  Compatibility c = side == Side::M ? classifyM(dec, family) : classifyN(dec, family);
  if (!c.dagger)
    throw Error(ErrorCode::CheckFailed,
                std::string("the decomposition is not compatible in ") +
                    (side == Side::M ? "M" : "N") + "-dagger: " + c.daggerFailure.value_or(""));
  Stratum s = side == Side::M ? stratum(dec, family) : substratum(dec, family);
  std::vector<std::vector<Representation>> choices;
  for (const auto &p : s.parts) choices.push_back(distinctSummands(*family.universe, p));
  return InducedSystems(std::move(s), std::move(choices));
}

Inducers recoverInducers(const UniversePtr &u, const StratifyingSystem &delta) {
  OrderedDecomposition dec(delta.index, delta.modules);
  Inducers out{dec, inducedFacFamily(u, dec), inducedSubFamily(u, dec)};
  ensure(classifyM(dec, out.fac).dagger, "characteristic module not in M-dagger");
  ensure(classifyN(dec, out.sub).dagger, "characteristic module not in N-dagger");
  auto s = stratum(dec, out.fac), t = substratum(dec, out.sub);
  for (std::size_t k = 0; k < delta.size(); ++k) {
    ensure(isIsomorphic(s.parts[k], delta.modules[k]), "stratum differs from the system");
    ensure(isIsomorphic(t.parts[k], delta.modules[k]), "substratum differs from the system");
  }
  return out;
}

std::vector<OrderedDecomposition> tfAdmissibleOrderings(const UniversePtr &u,
                                                        const Representation &m) {
  if (m.isZero()) throw Error(ErrorCode::Precondition, "the module is zero");
  auto d = decompose(m);
  for (const auto &s : d.summands)
    if (s.multiplicity > 1)
      throw Error(ErrorCode::CheckFailed,
                  "not basic: " + memberLabel(*u, s.module) + " occurs " +
                      std::to_string(s.multiplicity) + " times");
  std::vector<Representation> parts = distinctSummands(*u, m);
  std::vector<std::size_t> perm(parts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<OrderedDecomposition> out;
  do {
    std::vector<Representation> ordered;
    for (auto i : perm) ordered.push_back(parts[i]);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < ordered.size() && ok; ++i) {
      Representation later =
          directSum(m.algebra(), {ordered.begin() + static_cast<std::ptrdiff_t>(i + 1), ordered.end()})
              .module;
      ok = !inGen(later, ordered[i]);
    }
    if (ok) out.emplace_back(std::move(ordered));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<PipelineResult> tauRigidPipeline(const UniversePtr &u, const Representation &m) {
  if (m.isZero()) throw Error(ErrorCode::Precondition, "the module is zero");
  if (!isTauRigid(m)) throw Error(ErrorCode::CheckFailed, "not tau-rigid: Hom(M, tau M) is nonzero");
  auto orderings = tfAdmissibleOrderings(u, m);
  ensure(!orderings.empty(), "a basic tau-rigid module has a torsion-free admissible ordering");

  std::vector<PipelineResult> out;
  for (auto &dec : orderings) {
    NestedFamily family = inducedFacFamily(u, dec);
    // for tau-rigid modules T(M_j : j >= k) is Fac(M_j : j >= k)
    for (std::size_t k = 0; k < dec.size(); ++k) {
      Representation gen =
          directSum(m.algebra(), {dec.parts.begin() + static_cast<std::ptrdiff_t>(k), dec.parts.end()})
              .module;
      MemberSet fac;
      for (std::size_t i = 0; i < u->size(); ++i)
        if (inGen(gen, u->module(i))) fac.insert(i);
      ensure(fac == family.pairs[k].torsion, "Fac and T differ for a tau-rigid module");
    }
    // M is Ext-projective in T_1
    for (auto i : family.pairs[0].torsion)
      ensure(ext1Dim(m, u->module(i)) == 0, "tau-rigid module not Ext-projective in Fac(M)");
    ensure(classifyM(dec, family).dagger, "tau-rigid ordering not in M-dagger");
    Stratum s = stratum(dec, family);
    for (const auto &p : s.parts) ensure(isIndecomposable(p), "stratum part decomposes");
    StratifyingSystem sys = verifySystem(s.parts, dec.index);
    out.push_back({std::move(dec), std::move(family), std::move(sys)});
  }
  return out;
}

std::vector<FiltrationResult> deltaFiltrations(const Representation &x,
                                               const StratifyingSystem &delta,
                                               std::size_t maxResults, const SweepConfig &cfg) {
  for (const auto &d : delta.modules) requireSameAlgebra(x, d);
  return FiltrationSearch(x, delta, maxResults, cfg).run();
}

std::optional<FiltrationResult> deltaFiltration(const Representation &x,
                                                const StratifyingSystem &delta,
                                                const SweepConfig &cfg) {
  // Delta_n is Ext-projective in F(Delta) and maps to no earlier member, so the
  // trace of Delta_n is the bottom block of some filtration; peel it off and
  // go on with the quotient.
  const auto &a = x.algebra();
  FiltrationResult r;
  r.chain.push_back(Morphism::zero(Representation::zero(a), x));
  Morphism q = Morphism::identity(x);  // X -> X / (current bottom)
  for (std::size_t k = delta.size(); k-- > 0;) {
    const Representation &d = delta.modules[k];
    Subobject u = traceOf({d}, q.target());
    if (u.module.isZero()) continue;
    auto dec = decompose(u.module, cfg);
    if (dec.summands.size() != 1 || !isIsomorphicIndecomposable(dec.summands[0].module, d))
      return std::nullopt;
    const Summand &block = dec.summands[0];
    for (std::size_t j = 1; j <= block.multiplicity; ++j) {
      auto copies = directSum(a, std::vector<Representation>(j, block.module));
      Morphism g = Morphism::zero(copies.module, q.target());
      for (std::size_t i = 0; i < j; ++i)
        g = g + u.inclusion.after(block.embeddings[i]).after(copies.projections[i]);
      Morphism next = cokernel(g).projection.after(q);
      r.chain.push_back(kernel(next).inclusion);
      r.factors.push_back(k);
      if (j == block.multiplicity) q = next;
    }
  }
  if (!q.target().isZero()) return std::nullopt;
  r.chain.back() = Morphism::identity(x);
  r.multiplicities = multiplicitiesOf(r.factors, delta.size());
  return r;
}

}  // namespace strat
