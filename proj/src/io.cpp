#include "strat/io.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "strat/error.hpp"
#include "strat/homological.hpp"

namespace strat::io {

namespace {

[[noreturn]] void schema(const std::string &what) { throw Error(ErrorCode::Schema, what); }

const Json &field(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object() || !j.contains(key)) schema(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string text(const Json &j, const std::string &where) {
  if (!j.is_string()) schema(where + ": expected a string");
  return j.get<std::string>();
}

Scalar scalarOf(const Json &j, const std::string &where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parseScalar(j.get<std::string>());
  schema(where + ": expected a scalar string");
}

Path pathOf(const Quiver &q, const Json &names, const std::string &where) {
  if (!names.is_array() || names.empty()) schema(where + ": a path needs at least one arrow");
  Path p;
  for (const auto &n : names) {
    auto name = text(n, where);
    auto a = q.findArrow(name);
    if (!a) throw Error(ErrorCode::UnknownArrow, where + ": unknown arrow \"" + name + "\"");
    if (!p.arrows.empty() && q.arrow(p.arrows.back()).target != q.arrow(*a).source)
      throw Error(ErrorCode::NonComposablePath,
                  where + ": arrow \"" + name + "\" does not start where the path ends");
    p.arrows.push_back(*a);
  }
  p.source = q.arrow(p.arrows.front()).source;
  p.target = q.arrow(p.arrows.back()).target;
  return p;
}

bool looksLikeJson(const std::string &s) {
  auto i = s.find_first_not_of(" \t\r\n");
  return i != std::string::npos && (s[i] == '{' || s[i] == '[');
}

std::string describeSum(const IndecUniverse &u, const Representation &x) {
  std::string s;
  for (auto [i, mult] : u.summandsOf(x)) {
    if (!s.empty()) s += " + ";
    s += u.label(i);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s;
}

}  // namespace

Json parseJson(std::string_view input, const std::string &source) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error &e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < input.size(); ++i) {
      if (input[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto colon = msg.rfind(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw Error(ErrorCode::Syntax, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(column) + ": " + msg);
  }
}

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AlgebraPtr parseAlgebra(const Json &j, std::size_t lengthCap) {
  std::vector<std::string> vertices;
  for (const auto &v : field(j, "vertices", "algebra")) vertices.push_back(text(v, "vertices"));
  auto vertexOf = [&](const std::string &name) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return i;
    throw Error(ErrorCode::UnknownVertex, "unknown vertex \"" + name + "\"");
  };
  std::vector<Arrow> arrows;
  if (j.contains("arrows"))
    for (const auto &a : j.at("arrows")) {
      auto name = text(field(a, "name", "arrow"), "arrow name");
      arrows.push_back({name, vertexOf(text(field(a, "from", "arrow " + name), "from")),
                        vertexOf(text(field(a, "to", "arrow " + name), "to"))});
    }
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Relation> relations;
  if (j.contains("relations"))
    for (const auto &r : j.at("relations")) {
      const std::string where = "relation " + std::to_string(relations.size() + 1);
      if (!r.is_array() || r.empty()) schema(where + ": expected a nonempty list of terms");
      Relation rel;
      for (const auto &t : r)
        rel.terms.push_back({scalarOf(field(t, "coef", where), where),
                             pathOf(q, field(t, "path", where), where)});
      relations.push_back(std::move(rel));
    }
  return Algebra::create(std::move(q), std::move(relations), lengthCap);
}

AlgebraPtr loadAlgebra(const std::string &path) {
  return parseAlgebra(parseJson(readFile(path), path));
}

Json algebraToJson(const Algebra &a) {
  const Quiver &q = a.quiver();
  Json j;
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto &arr : q.arrows())
    j["arrows"].push_back(
        {{"name", arr.name}, {"from", q.vertexName(arr.source)}, {"to", q.vertexName(arr.target)}});
  j["relations"] = Json::array();
  for (const auto &r : a.relations()) {
    Json terms = Json::array();
    for (const auto &t : r.terms) {
      Json path = Json::array();
      for (auto i : t.path.arrows) path.push_back(q.arrow(i).name);
      terms.push_back({{"coef", formatScalar(t.coefficient)}, {"path", path}});
    }
    j["relations"].push_back(terms);
  }
  return j;
}

ModuleReader::ModuleReader(AlgebraPtr algebra, UniverseSource universe)
    : algebra_(std::move(algebra)), universe_(std::move(universe)) {}

Representation ModuleReader::atom(const std::string &name, const std::string &arg) const {
  const Quiver &q = algebra_->quiver();
  if (name == "P" || name == "I" || name == "S") {
    std::size_t v = q.vertexIndex(arg);
    if (name == "P") return Representation::projective(algebra_, v);
    if (name == "I") return Representation::injective(algebra_, v);
    return Representation::simple(algebra_, v);
  }
  const std::string label = name + "(" + arg + ")";
  if (!universe_) schema("unknown module \"" + label + "\"");
  const IndecUniverse &u = universe_();
  auto i = u.indexOf(label);
  if (!i) schema("no indecomposable labelled \"" + label + "\"");
  return u.module(*i);
}

Representation ModuleReader::readShorthand(std::string_view s) const {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto bad = [&](const std::string &what) {
    throw Error(ErrorCode::Syntax, "module \"" + std::string(s) + "\" at position " +
                                       std::to_string(pos + 1) + ": " + what);
  };
  std::vector<Representation> parts;
  skip();
  if (pos == s.size()) bad("empty module expression");
  if (s.substr(pos) == "0") return Representation::zero(algebra_);
  while (true) {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != '(' && s[pos] != '+' && s[pos] != '^' &&
           !std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) bad("expected a module name");
    std::string name(s.substr(start, pos - start));
    skip();
    if (pos == s.size() || s[pos] != '(') bad("expected \"(\"");
    std::size_t depth = 0, open = pos;
    for (; pos < s.size(); ++pos) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')' && --depth == 0) break;
    }
    if (pos == s.size()) bad("unbalanced parentheses");
    std::string arg(s.substr(open + 1, pos - open - 1));
    ++pos;
    Representation m = atom(name, arg);
    skip();
    std::size_t power = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      std::size_t digits = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == digits) bad("expected an exponent");
      power = std::stoul(std::string(s.substr(digits, pos - digits)));
      skip();
    }
    for (std::size_t k = 0; k < power; ++k) parts.push_back(m);
    if (pos == s.size()) break;
    if (s[pos] != '+') bad("expected \"+\"");
    ++pos;
  }
  return parts.size() == 1 ? parts.front() : directSum(algebra_, parts).module;
}

Representation ModuleReader::read(const Json &j) const {
  if (j.is_string()) return readShorthand(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Representation> parts;
    for (const auto &p : j) parts.push_back(read(p));
    return directSum(algebra_, parts).module;
  }
  if (!j.is_object()) schema("expected a module");
  const Quiver &q = algebra_->quiver();
  std::vector<std::size_t> dims(q.vertexCount(), 0);
  if (j.contains("dims"))
    for (const auto &[name, d] : j.at("dims").items()) {
      if (!d.is_number_unsigned()) schema("dims: expected a nonnegative integer");
      dims[q.vertexIndex(name)] = d.get<std::size_t>();
    }
  std::vector<Matrix> maps;
  for (const auto &a : q.arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  if (j.contains("maps"))
    for (const auto &[name, rows] : j.at("maps").items()) {
      auto a = q.findArrow(name);
      if (!a) throw Error(ErrorCode::UnknownArrow, "maps: unknown arrow \"" + name + "\"");
      Matrix &m = maps[*a];
      if (!rows.is_array() || rows.size() != m.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    "map " + name + ": expected " + std::to_string(m.rows()) + " rows");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != m.cols())
          throw Error(ErrorCode::DimensionMismatch,
                      "map " + name + ": expected " + std::to_string(m.cols()) + " columns");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalarOf(rows[r][c], "map " + name);
      }
    }
  return Representation(algebra_, dims, maps);
}

Representation ModuleReader::readArgument(const std::string &arg) const {
  if (looksLikeJson(arg)) return read(parseJson(arg, "argument"));
  if (arg.find('(') == std::string::npos && std::filesystem::is_regular_file(arg))
    return read(parseJson(readFile(arg), arg));
  return readShorthand(arg);
}

Json moduleToJson(const Representation &m) {
  const Quiver &q = m.algebra()->quiver();
  Json j;
  j["dims"] = Json::object();
  for (std::size_t v = 0; v < q.vertexCount(); ++v) j["dims"][q.vertexName(v)] = m.dim(v);
  j["maps"] = Json::object();
  for (std::size_t a = 0; a < q.arrowCount(); ++a) {
    const Matrix &mat = m.map(a);
    Json rows = Json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(formatScalar(mat(r, c)));
      rows.push_back(row);
    }
    j["maps"][q.arrow(a).name] = rows;
  }
  return j;
}

Json readJsonArgument(const std::string &arg) {
  if (looksLikeJson(arg)) return parseJson(arg, "argument");
  return parseJson(readFile(arg), arg);
}

ClassSpec parseClass(const Json &j, const ModuleReader &reader) {
  ClassSpec spec;
  const Json *mods = &j;
  if (j.is_object()) {
    if (j.contains("mode")) {
      auto mode = text(j.at("mode"), "mode");
      if (mode == "add")
        spec.mode = ClassMode::Add;
      else if (mode != "generators")
        schema("mode must be \"generators\" or \"add\"");
    }
    mods = &field(j, "modules", "torsion class");
  }
  if (!mods->is_array()) schema("torsion class: expected a list of modules");
  for (const auto &m : *mods) spec.modules.push_back(reader.read(m));
  return spec;
}

MemberSet resolveClass(const IndecUniverse &u, const ClassSpec &spec, ClassSide side) {
  if (spec.mode == ClassMode::Generators)
    return side == ClassSide::Torsion ? smallestTorsionClass(u, spec.modules)
                                      : smallestTorsionFreeClass(u, spec.modules);
  MemberSet s;
  for (const auto &m : spec.modules)
    for (auto [i, mult] : u.summandsOf(m)) s.insert(i);
  return s;
}

NestedFamily parseFamily(const Json &j, const ModuleReader &reader, const UniversePtr &u) {
  ClassSide side = ClassSide::Torsion;
  const Json *classes = &j;
  OrderedIndex index;
  if (j.is_object()) {
    if (j.contains("side")) {
      auto s = text(j.at("side"), "side");
      if (s == "torsionfree")
        side = ClassSide::TorsionFree;
      else if (s != "torsion")
        schema("side must be \"torsion\" or \"torsionfree\"");
    }
    if (j.contains("index"))
      for (const auto &k : j.at("index")) index.push_back(text(k, "index"));
    classes = &field(j, "classes", "family");
  }
  if (!classes->is_array() || classes->empty()) schema("family: expected a nonempty list of classes");
  if (!index.empty() && index.size() != classes->size())
    schema("family: index and classes differ in length");
  std::vector<TorsionPair> pairs;
  for (const auto &c : *classes) {
    MemberSet s = resolveClass(*u, parseClass(c, reader), side);
    pairs.push_back(side == ClassSide::Torsion ? completeToPair(u, s) : completeFromFree(u, s));
  }
  if (index.empty())
    for (std::size_t k = 1; k <= pairs.size(); ++k) index.push_back(std::to_string(k));
  return verifyNested(u, std::move(index), std::move(pairs));
}

Json familyToJson(const NestedFamily &g) {
  const IndecUniverse &u = *g.universe;
  Json out = Json::array();
  for (std::size_t k = 0; k < g.size(); ++k) {
    Json t = Json::array(), f = Json::array();
    for (auto i : g.pairs[k].torsion) t.push_back(u.label(i));
    for (auto i : g.pairs[k].free) f.push_back(u.label(i));
    out.push_back({{"index", g.index[k]}, {"torsion", t}, {"free", f}});
  }
  return out;
}

OrderedDecomposition parseDecomposition(const Json &j, const ModuleReader &reader) {
  const Json *parts = &j;
  OrderedIndex index;
  if (j.is_object()) {
    if (j.contains("index"))
      for (const auto &k : j.at("index")) index.push_back(text(k, "index"));
    parts = &field(j, "parts", "decomposition");
  }
  if (!parts->is_array() || parts->empty()) schema("decomposition: expected a nonempty list of parts");
  std::vector<Representation> mods;
  for (const auto &p : *parts) mods.push_back(reader.read(p));
  if (index.empty()) return OrderedDecomposition(std::move(mods));
  if (index.size() != mods.size()) schema("decomposition: index and parts differ in length");
  return OrderedDecomposition(std::move(index), std::move(mods));
}

std::pair<OrderedIndex, std::vector<Representation>> parseSystem(const Json &j,
                                                                 const ModuleReader &reader) {
  if (j.is_array()) {
    OrderedIndex index;
    std::vector<Representation> mods;
    for (const auto &m : j) {
      mods.push_back(reader.read(m));
      index.push_back(std::to_string(mods.size()));
    }
    return {index, mods};
  }
  const Json &order = field(j, "order", "system");
  const Json &modules = field(j, "modules", "system");
  OrderedIndex index;
  std::vector<Representation> mods;
  for (const auto &k : order) {
    auto key = text(k, "order");
    if (!modules.contains(key)) schema("system: no module for index \"" + key + "\"");
    index.push_back(key);
    mods.push_back(reader.read(modules.at(key)));
  }
  if (modules.size() != index.size()) schema("system: modules not listed in order");
  return {index, mods};
}

std::string describe(const IndecUniverse *u, const Representation &x) {
  if (x.isZero()) return "0";
  if (u) {
    try {
      return describeSum(*u, x);
    } catch (const Error &) {
    }
  }
  return dimensionLabel(x);
}

Json systemToJson(const IndecUniverse *u, const StratifyingSystem &s) {
  Json j;
  j["order"] = s.index;
  j["modules"] = Json::object();
  for (std::size_t k = 0; k < s.size(); ++k) j["modules"][s.index[k]] = describe(u, s.modules[k]);
  j["hom"] = s.homDims;
  j["ext"] = s.extDims;
  return j;
}

Json universeToJson(const IndecUniverse &u) {
  Json members = Json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    Json m{{"label", u.label(i)}, {"module", moduleToJson(u.module(i))}};
    auto t = u.tauOf(i), ti = u.tauInverseOf(i);
    m["tau"] = t ? Json(u.label(*t)) : Json(nullptr);
    m["tauInverse"] = ti ? Json(u.label(*ti)) : Json(nullptr);
    members.push_back(m);
  }
  Json arrows = Json::array();
  for (const auto &[edge, mult] : u.irreducible())
    arrows.push_back({{"from", u.label(edge.first)}, {"to", u.label(edge.second)}, {"multiplicity", mult}});
  return {{"algebra", algebraToJson(*u.algebra())}, {"members", members}, {"irreducible", arrows}};
}

std::string fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void saveUniverse(const IndecUniverse &u, const std::string &path) {
  Json body = universeToJson(u);
  body["log"] = u.log();
  Json doc{{"checksum", fnv1a(body.dump())}, {"universe", body}};
  std::ofstream out(path, std::ios::binary);
  if (!out) schema("cannot write " + path);
  out << doc.dump(1) << "\n";
}

std::optional<IndecUniverse> loadUniverse(const std::string &path, const AlgebraPtr &algebra,
                                          std::string *why) {
  auto reject = [&](const std::string &reason) -> std::optional<IndecUniverse> {
    if (why) *why = reason;
    return std::nullopt;
  };
  if (!std::filesystem::exists(path)) return reject("no cache at " + path);
  try {
    Json doc = Json::parse(readFile(path));
    const Json &body = doc.at("universe");
    if (doc.at("checksum").get<std::string>() != fnv1a(body.dump()))
      return reject("checksum mismatch in " + path);
    if (body.at("algebra") != algebraToJson(*algebra))
      return reject(path + " was written for another algebra");
    ModuleReader reader(algebra);
    std::vector<UniverseMember> members;
    std::map<std::string, std::size_t> at;
    for (const auto &m : body.at("members")) {
      at[m.at("label").get<std::string>()] = members.size();
      members.push_back({m.at("label").get<std::string>(), reader.read(m.at("module"))});
    }
    std::vector<std::optional<std::size_t>> tau, tauInverse;
    for (const auto &m : body.at("members")) {
      auto index = [&](const Json &l) {
        return l.is_null() ? std::nullopt : std::optional(at.at(l.get<std::string>()));
      };
      tau.push_back(index(m.at("tau")));
      tauInverse.push_back(index(m.at("tauInverse")));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows;
    for (const auto &e : body.at("irreducible"))
      arrows[{at.at(e.at("from").get<std::string>()), at.at(e.at("to").get<std::string>())}] =
          e.at("multiplicity").get<std::size_t>();
    IndecUniverse u(algebra, std::move(members));
    u.setTau(std::move(tau), std::move(tauInverse));
    u.setIrreducible(std::move(arrows));
    u.setLog(body.at("log").get<std::vector<std::string>>());
    return u;
  } catch (const std::exception &e) {
    return reject(std::string("unreadable cache ") + path + ": " + e.what());
  }
}

}  // namespace strat::io
