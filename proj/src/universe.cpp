#include "strat/universe.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "strat/error.hpp"
#include "strat/homological.hpp"

namespace strat {

IndecUniverse::IndecUniverse(AlgebraPtr algebra, std::vector<UniverseMember> members)
    : algebra_(std::move(algebra)), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!byLabel_.emplace(members_[i].label, i).second)
      throw Error(ErrorCode::DuplicateName, "duplicate universe label " + members_[i].label);
  }
  tau_.assign(members_.size(), std::nullopt);
  tauInverse_.assign(members_.size(), std::nullopt);
  homDims_.assign(members_.size() * members_.size(), std::nullopt);
}

std::optional<std::size_t> IndecUniverse::indexOf(const std::string &label) const {
  auto it = byLabel_.find(label);
  if (it == byLabel_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> IndecUniverse::find(const Representation &x) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].module.dims() == x.dims() &&
        isIsomorphicIndecomposable(members_[i].module, x))
      return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> IndecUniverse::summandsOf(
    const Representation &m) const {
  std::map<std::size_t, std::size_t> count;
  for (const auto &s : decompose(m).summands) {
    auto i = find(s.module);
    if (!i)
      throw Error(ErrorCode::Precondition,
                  "module has a summand " + dimensionLabel(s.module) + " outside the universe");
    count[*i] += s.multiplicity;
  }
  return {count.begin(), count.end()};
}

std::size_t IndecUniverse::homDim(std::size_t i, std::size_t j) const {
  auto &slot = homDims_.at(i * members_.size() + j);
  if (!slot) slot = strat::homDim(members_[i].module, members_[j].module);
  return *slot;
}

std::optional<std::size_t> IndecUniverse::tauOf(std::size_t i) const { return tau_.at(i); }

std::optional<std::size_t> IndecUniverse::tauInverseOf(std::size_t i) const {
  return tauInverse_.at(i);
}

void IndecUniverse::setTau(std::vector<std::optional<std::size_t>> tau,
                           std::vector<std::optional<std::size_t>> tauInverse) {
  tau_ = std::move(tau);
  tauInverse_ = std::move(tauInverse);
}

void IndecUniverse::setIrreducible(std::map<std::pair<std::size_t, std::size_t>, std::size_t> a) {
  irreducible_ = std::move(a);
}

std::string dimensionLabel(const Representation &m) {
  std::string s = "X(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    if (v) s += ",";
    s += std::to_string(m.dim(v));
  }
  return s + ")";
}

namespace {

class Enumerator {
 public:
  Enumerator(AlgebraPtr algebra, std::size_t dimCap, std::size_t countCap)
      : alg_(std::move(algebra)), dimCap_(dimCap), countCap_(countCap) {}

  IndecUniverse run();

 private:
  struct Entry {
    std::string label;
    Representation module;
    std::optional<std::size_t> tau, tauInverse;
    bool orbitDone = false;
    bool meshDone = false;
  };

  std::size_t add(const Representation &x, std::string label);
  std::vector<std::pair<std::size_t, std::size_t>> addSummands(const Representation &m);
  void saturateOrbits();
  void recordArrow(std::size_t from, std::size_t to, std::size_t mult);

  AlgebraPtr alg_;
  std::size_t dimCap_, countCap_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> projective_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows_;
  std::vector<std::string> log_;
};

std::size_t Enumerator::add(const Representation &x, std::string label) {
  if (x.totalDim() > dimCap_)
    throw Error(ErrorCode::CapExceeded,
                "cap exceeded: found an indecomposable of dimension " +
                    std::to_string(x.totalDim()) + " > " + std::to_string(dimCap_) +
                    "; the algebra may be representation-infinite");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].module.dims() == x.dims() &&
        isIsomorphicIndecomposable(entries_[i].module, x))
      return i;
  if (entries_.size() >= countCap_)
    throw Error(ErrorCode::CapExceeded,
                "cap exceeded: more than " + std::to_string(countCap_) +
                    " indecomposables; the algebra may be representation-infinite");
  if (label.empty()) {
    std::string base = dimensionLabel(x);
    label = base;
    for (int k = 2; std::any_of(entries_.begin(), entries_.end(),
                                [&](const Entry &e) { return e.label == label; });
         ++k)
      label = base + "_" + std::to_string(k);
  }
  log_.push_back("add " + label);
  entries_.push_back({label, x, std::nullopt, std::nullopt});
  return entries_.size() - 1;
}

std::vector<std::pair<std::size_t, std::size_t>> Enumerator::addSummands(const Representation &m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (m.isZero()) return out;
  for (const auto &s : decompose(m).summands) out.emplace_back(add(s.module, ""), s.multiplicity);
  return out;
}

// tau and tau^- of an indecomposable are indecomposable or zero, so orbits are
// cheap to walk and run into the caps first on representation-infinite input.
void Enumerator::saturateOrbits() {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].orbitDone) continue;
    entries_[i].orbitDone = true;
    Representation x = entries_[i].module;
    if (!entries_[i].tau) {
      Representation t = tau(x);
      if (!t.isZero()) {
        std::size_t j = add(t, "");
        entries_[i].tau = j;
        entries_[j].tauInverse = i;
      }
    }
    if (!entries_[i].tauInverse) {
      Representation ti = tauInverse(x);
      if (!ti.isZero()) {
        std::size_t j = add(ti, "");
        entries_[i].tauInverse = j;
        entries_[j].tau = i;
      }
    }
  }
}

void Enumerator::recordArrow(std::size_t from, std::size_t to, std::size_t mult) {
  auto &slot = arrows_[{from, to}];
  slot = std::max(slot, mult);
}

IndecUniverse Enumerator::run() {
  const Quiver &q = alg_->quiver();
  for (std::size_t v = 0; v < q.vertexCount(); ++v)
    projective_.push_back(
        add(Representation::projective(alg_, v), "P(" + q.vertexName(v) + ")"));
  for (std::size_t v = 0; v < q.vertexCount(); ++v)
    add(Representation::simple(alg_, v), "S(" + q.vertexName(v) + ")");
  for (std::size_t v = 0; v < q.vertexCount(); ++v)
    add(Representation::injective(alg_, v), "I(" + q.vertexName(v) + ")");

  for (;;) {
    saturateOrbits();
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [](const Entry &e) { return !e.meshDone; });
    if (it == entries_.end()) break;
    const std::size_t i = static_cast<std::size_t>(it - entries_.begin());
    entries_[i].meshDone = true;
    Representation x = entries_[i].module;
    if (std::find(projective_.begin(), projective_.end(), i) != projective_.end()) {
      // irreducible maps into a projective come from the summands of its radical
      std::vector<Matrix> spans;
      for (std::size_t v = 0; v < q.vertexCount(); ++v) {
        Matrix s(x.dim(v), 0);
        for (auto a : q.arrowsInto(v)) s = hstack(s, x.map(a));
        spans.push_back(s);
      }
      for (auto [j, m] : addSummands(submodule(x, spans).module)) recordArrow(j, i, m);
      continue;
    }
    auto seq = almostSplitSequence(x);
    if (!seq) continue;
    log_.push_back("mesh at " + entries_[i].label);
    auto t = entries_[i].tau;
    for (auto [j, m] : addSummands(seq->middle)) {
      recordArrow(j, i, m);
      if (t) recordArrow(*t, j, m);
    }
  }

  for (const auto &e : entries_)
    if (endomorphismTopDimension(e.module) != 1)
      throw Error(ErrorCode::NonSplitEndomorphismRing,
                  "enumerated module " + e.label + " is not absolutely indecomposable");

  // deterministic order: by label
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return entries_[a].label < entries_[b].label; });
  std::vector<std::size_t> rank(entries_.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  std::vector<UniverseMember> members;
  std::vector<std::optional<std::size_t>> tauv, tauInv;
  for (auto k : order) {
    members.push_back({entries_[k].label, entries_[k].module});
    tauv.push_back(entries_[k].tau ? std::optional(rank[*entries_[k].tau]) : std::nullopt);
    tauInv.push_back(entries_[k].tauInverse ? std::optional(rank[*entries_[k].tauInverse])
                                            : std::nullopt);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows;
  for (const auto &[key, m] : arrows_) arrows[{rank[key.first], rank[key.second]}] = m;

  IndecUniverse u(alg_, std::move(members));
  u.setTau(std::move(tauv), std::move(tauInv));
  u.setIrreducible(std::move(arrows));
  log_.push_back("complete with " + std::to_string(u.size()) + " indecomposables");
  u.setLog(std::move(log_));
  return u;
}

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

IndecUniverse enumerateIndecomposables(const AlgebraPtr &algebra, std::size_t dimCap,
                                       std::size_t countCap) {
  if (dimCap == 0 || countCap == 0)
    throw Error(ErrorCode::Precondition, "enumeration caps must be positive");
  return Enumerator(algebra, dimCap, countCap).run();
}

std::string arQuiverDot(const IndecUniverse &u) {
  std::ostringstream out;
  out << "digraph AR {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < u.size(); ++i) out << "  " << quoted(u.label(i)) << ";\n";
  for (const auto &[key, m] : u.irreducible()) {
    out << "  " << quoted(u.label(key.first)) << " -> " << quoted(u.label(key.second));
    if (m > 1) out << " [label=\"" << m << "\"]";
    out << ";\n";
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    if (auto t = u.tauOf(i))
      out << "  " << quoted(u.label(i)) << " -> " << quoted(u.label(*t))
          << " [style=dotted];\n";
  out << "}\n";
  return out.str();
}

}  // namespace strat
