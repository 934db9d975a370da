#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "strat/stratsys.hpp"

namespace strat::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Error(Syntax) with line and column.
Json parseJson(std::string_view text, const std::string &source = "input");
/// Reads a file; throws Error(Schema) when it cannot be opened.
std::string readFile(const std::string &path);

/// {"vertices": [...], "arrows": [{"name","from","to"}], "relations": [[{"coef","path"}]]}
AlgebraPtr parseAlgebra(const Json &j, std::size_t lengthCap = kDefaultPathLengthCap);
AlgebraPtr loadAlgebra(const std::string &path);
Json algebraToJson(const Algebra &a);

/// Resolves module descriptions over one algebra. Shorthand strings are sums
/// like "P(2) + S(3)^2"; P, I and S are built directly and any other name is
/// looked up among the universe labels, so the universe is only computed when
/// such a name appears.
class ModuleReader {
 public:
  using UniverseSource = std::function<const IndecUniverse &()>;

  ModuleReader(AlgebraPtr algebra, UniverseSource universe = {});

  const AlgebraPtr &algebra() const { return algebra_; }
  Representation read(const Json &j) const;
  Representation readShorthand(std::string_view text) const;
  /// A string argument: a module file path, inline JSON or shorthand.
  Representation readArgument(const std::string &arg) const;

 private:
  Representation atom(const std::string &name, const std::string &arg) const;

  AlgebraPtr algebra_;
  UniverseSource universe_;
};

/// {"dims": {"1": 1}, "maps": {"a": [["1"]]}}
Json moduleToJson(const Representation &m);

/// A command-line argument holding JSON: a file path or inline text.
Json readJsonArgument(const std::string &arg);

enum class ClassMode { Generators, Add };
enum class ClassSide { Torsion, TorsionFree };

/// {"mode": "generators" | "add", "modules": [...]}; a bare list means
/// generators.
struct ClassSpec {
  ClassMode mode = ClassMode::Generators;
  std::vector<Representation> modules;
};
ClassSpec parseClass(const Json &j, const ModuleReader &reader);
/// The members of the class: closure of the generators on the given side, or
/// the summands of the listed modules.
MemberSet resolveClass(const IndecUniverse &u, const ClassSpec &spec, ClassSide side);

/// {"side": "torsion" | "torsionfree", "index": [...], "classes": [...]} or a
/// bare list of torsion classes.
NestedFamily parseFamily(const Json &j, const ModuleReader &reader, const UniversePtr &u);
Json familyToJson(const NestedFamily &g);

/// A list of parts or {"index": [...], "parts": [...]}.
OrderedDecomposition parseDecomposition(const Json &j, const ModuleReader &reader);

/// {"order": [...], "modules": {"1": ..., ...}}; returns the unverified modules
/// with their index.
std::pair<OrderedIndex, std::vector<Representation>> parseSystem(const Json &j,
                                                                 const ModuleReader &reader);
Json systemToJson(const IndecUniverse *u, const StratifyingSystem &s);

/// Label of the universe member isomorphic to x, or a sum of labels, or the
/// dimension vector when x is not made of members.
std::string describe(const IndecUniverse *u, const Representation &x);

Json universeToJson(const IndecUniverse &u);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a(std::string_view text);

/// Writes the universe with a checksum over its serialized body.
void saveUniverse(const IndecUniverse &u, const std::string &path);
/// The cached universe, or nullopt (with the reason in *why) when the file
/// is missing, corrupt, or belongs to another algebra.
std::optional<IndecUniverse> loadUniverse(const std::string &path, const AlgebraPtr &algebra,
                                          std::string *why = nullptr);

}  // namespace strat::io
