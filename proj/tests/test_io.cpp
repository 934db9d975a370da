#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "strat/error.hpp"
#include "strat/homological.hpp"
#include "strat/io.hpp"

using namespace strat;
using namespace strat::fixtures;

namespace {

std::string dataFile(const std::string &name) { return std::string(STRAT_DATA_DIR) + "/" + name; }

ErrorCode codeOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::Syntax;
}

std::string tempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST(Io, AlgebraFiles) {
  auto a = io::loadAlgebra(dataFile("a3.json"));
  EXPECT_EQ(a->dimension(), 6u);
  auto g = io::loadAlgebra(dataFile("g8.json"));
  EXPECT_EQ(g->dimension(), 7u);
  EXPECT_TRUE(g->sameAs(*g8()));
  EXPECT_TRUE(io::loadAlgebra(dataFile("ex64.json"))->sameAs(*ex64()));
  // writing and reading back gives the same presentation
  EXPECT_TRUE(io::parseAlgebra(io::algebraToJson(*g))->sameAs(*g));
}

TEST(Io, AlgebraErrors) {
  auto parse = [](const std::string &t) { return io::parseAlgebra(io::parseJson(t)); };
  EXPECT_EQ(codeOf([&] {
              parse(R"({"vertices":["1","2"],"arrows":[{"name":"a","from":"2","to":"1"}],
                        "relations":[[{"coef":"1","path":["δ"]}]]})");
            }),
            ErrorCode::UnknownArrow);
  EXPECT_EQ(codeOf([&] { parse(R"({"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"9"}]})"); }),
            ErrorCode::UnknownVertex);
  EXPECT_EQ(codeOf([&] {
              parse(R"({"vertices":["1","2","3"],"arrows":[{"name":"a","from":"2","to":"1"},
                        {"name":"b","from":"3","to":"2"}],"relations":[[{"coef":"1","path":["a","b"]}]]})");
            }),
            ErrorCode::NonComposablePath);
  EXPECT_EQ(codeOf([&] { parse(R"({"arrows":[]})"); }), ErrorCode::Schema);
  EXPECT_EQ(codeOf([&] { parse(R"({"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"1"}]})"); }),
            ErrorCode::NotFiniteDimensional);
  try {
    io::parseJson("{\n  \"vertices\": [\"1\",\n  ]\n}", "bad.json");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Syntax);
    EXPECT_EQ(std::string(e.what()).rfind("bad.json:3:", 0), 0u) << e.what();
  }
}

TEST(Io, Shorthand) {
  auto a = a3();
  io::ModuleReader r(a);
  EXPECT_EQ(r.readShorthand("P(2)"), P(a, "2"));
  EXPECT_TRUE(isIsomorphic(r.readShorthand("P(1) + S(2)^2"), sum(a, {P(a, "1"), S(a, "2"), S(a, "2")})));
  EXPECT_TRUE(r.readShorthand("0").isZero());
  EXPECT_EQ(codeOf([&] { r.readShorthand("P(7)"); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(codeOf([&] { r.readShorthand("P(1) +"); }), ErrorCode::Syntax);
  EXPECT_EQ(codeOf([&] { r.readShorthand("P(1"); }), ErrorCode::Syntax);
  EXPECT_EQ(codeOf([&] { r.readShorthand("X(1,1,0)"); }), ErrorCode::Schema);

  // other labels come from the universe
  auto g = g8();
  IndecUniverse u = enumerateIndecomposables(g);
  io::ModuleReader rg(g, [&]() -> const IndecUniverse & { return u; });
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(rg.readShorthand(u.label(i)), u.module(i));
}

TEST(Io, ModuleJson) {
  auto e = ex64();
  io::ModuleReader r(e);
  auto m1 = r.readArgument(R"({"dims": {"1": 1, "2": 1, "3": 1}, "maps": {"μ": [["1"]], "ν": [["1"]]}})");
  EXPECT_TRUE(isIsomorphic(m1, ex64M1(e)));
  EXPECT_EQ(r.read(io::moduleToJson(m1)), m1);
  EXPECT_EQ(codeOf([&] { r.readArgument(R"({"dims": {"1": 1, "2": 1}, "maps": {"μ": [["1", "2"]]}})"); }),
            ErrorCode::DimensionMismatch);
  // a relation that fails
  EXPECT_EQ(codeOf([&] {
              r.readArgument(R"({"dims": {"1":1,"2":1,"3":1,"4":1},
                                 "maps": {"μ":[["1"]],"λ":[["1"]],"β":[["1"]],"ν":[["2"]]}})");
            }),
            ErrorCode::InvalidModule);
}

TEST(Io, FamilyAndSystemFiles) {
  auto g = g8();
  auto u = std::make_shared<const IndecUniverse>(enumerateIndecomposables(g));
  io::ModuleReader r(g, [&]() -> const IndecUniverse & { return *u; });
  auto family = io::parseFamily(io::readJsonArgument(dataFile("g8_family.json")), r, u);
  ASSERT_EQ(family.size(), 5u);
  MemberSet f2;
  for (auto l : {"P(1)", "P(2)", "S(2)"}) f2.insert(*u->indexOf(l));
  EXPECT_EQ(family.pairs[1].free, f2);

  // the same family given by its torsion-free classes
  auto fromFree = io::parseFamily(io::parseJson(R"j({"side": "torsionfree", "classes": [
      {"mode": "add", "modules": ["P(1)"]},
      {"mode": "add", "modules": ["P(1)", "P(2)", "S(2)"]},
      {"mode": "add", "modules": ["P(1)", "P(2)", "P(3)", "I(1)", "S(2)"]},
      {"mode": "add", "modules": ["P(1)", "P(2)", "P(3)", "P(4)", "I(1)", "S(2)", "S(3)"]},
      {"mode": "generators", "modules": ["I(1)", "I(2)", "I(3)", "I(4)"]}]})j"),
                                  r, u);
  EXPECT_TRUE(fromFree == family);

  // not nested
  EXPECT_EQ(codeOf([&] {
              io::parseFamily(io::parseJson(R"j([["S(4)"], ["S(4)"]])j"), r, u);
            }),
            ErrorCode::CheckFailed);

  auto dec = io::parseDecomposition(io::readJsonArgument(dataFile("g8_decomposition.json")), r);
  EXPECT_EQ(dec.size(), 5u);
  EXPECT_TRUE(classifyN(dec, family).dagger);

  auto [index, mods] = io::parseSystem(io::readJsonArgument(dataFile("g8_system.json")), r);
  auto delta = verifySystem(mods, index);
  auto j = io::systemToJson(u.get(), delta);
  EXPECT_EQ(j["modules"]["5"], "S(4)");
  auto back = io::parseSystem(j, r);
  EXPECT_TRUE(sameSystem(verifySystem(back.second, back.first), delta));
  EXPECT_EQ(codeOf([&] { io::parseSystem(io::parseJson(R"({"order": ["1"], "modules": {}})"), r); }),
            ErrorCode::Schema);
}

TEST(Io, UniverseCache) {
  auto g = g8();
  IndecUniverse u = enumerateIndecomposables(g);
  const auto path = tempPath("strat_test_cache.json");
  io::saveUniverse(u, path);
  std::string why;
  auto loaded = io::loadUniverse(path, g, &why);
  ASSERT_TRUE(loaded) << why;
  ASSERT_EQ(loaded->size(), 8u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    EXPECT_EQ(loaded->label(i), u.label(i));
    EXPECT_EQ(loaded->module(i), u.module(i));
    EXPECT_EQ(loaded->tauOf(i), u.tauOf(i));
  }
  EXPECT_EQ(loaded->irreducible(), u.irreducible());
  // a second save is byte-identical
  const auto path2 = tempPath("strat_test_cache2.json");
  io::saveUniverse(*loaded, path2);
  EXPECT_EQ(io::readFile(path), io::readFile(path2));

  // another algebra
  EXPECT_FALSE(io::loadUniverse(path, a3(), &why));
  EXPECT_NE(why.find("another algebra"), std::string::npos);

  // truncated
  auto text = io::readFile(path);
  std::ofstream(path, std::ios::binary | std::ios::trunc) << text.substr(0, text.size() / 2);
  EXPECT_FALSE(io::loadUniverse(path, g, &why));
  EXPECT_NE(why.find("unreadable"), std::string::npos);

  // tampered body
  auto tampered = text;
  tampered.replace(tampered.find("\"P(1)\""), 6, "\"P(9)\"");
  std::ofstream(path, std::ios::binary | std::ios::trunc) << tampered;
  EXPECT_FALSE(io::loadUniverse(path, g, &why));
  EXPECT_NE(why.find("checksum"), std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}
