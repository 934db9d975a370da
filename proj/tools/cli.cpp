#include "cli.hpp"

#include <filesystem>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "strat/error.hpp"
#include "strat/homological.hpp"
#include "strat/io.hpp"

namespace strat::cli {

namespace {

using io::Json;

enum class Format { Json, Text, Dot };

bool primitive(const Json &j) {
  if (!j.is_structured()) return true;
  if (!j.is_array()) return false;
  for (const auto &x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string inlineText(const Json &j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (!j.is_array()) return j.dump();
  std::string s;
  for (const auto &x : j) s += (s.empty() ? "" : ", ") + inlineText(x);
  return "[" + s + "]";
}

void renderText(const Json &j, std::ostream &out, const std::string &pad) {
  if (j.is_object()) {
    for (const auto &[k, v] : j.items()) {
      if (primitive(v)) {
        out << pad << k << ": " << inlineText(v) << "\n";
      } else {
        out << pad << k << ":\n";
        renderText(v, out, pad + "  ");
      }
    }
  } else if (j.is_array() && !primitive(j)) {
    for (const auto &x : j) {
      if (primitive(x)) {
        out << pad << "- " << inlineText(x) << "\n";
      } else {
        out << pad << "-\n";
        renderText(x, out, pad + "  ");
      }
    }
  } else {
    out << pad << inlineText(j) << "\n";
  }
}

class Emitter {
 public:
  Emitter(Format f, std::ostream &out) : format_(f), out_(out) {}

  void emit(const Json &doc) {
    if (format_ == Format::Text)
      renderText(doc, out_, "");
    else
      out_ << doc.dump(2) << "\n";
  }
  Format format() const { return format_; }
  std::ostream &stream() { return out_; }

 private:
  Format format_;
  std::ostream &out_;
};

class Session {
 public:
  Session(AlgebraPtr algebra, std::string cache, std::ostream &err)
      : algebra_(std::move(algebra)), cache_(std::move(cache)), err_(err) {}

  const AlgebraPtr &algebra() const { return algebra_; }

  const UniversePtr &universe() {
    if (universe_) return universe_;
    if (!cache_.empty()) {
      std::string why;
      if (auto u = io::loadUniverse(cache_, algebra_, &why))
        universe_ = std::make_shared<const IndecUniverse>(std::move(*u));
      else if (std::filesystem::exists(cache_))
        err_ << "warning: " << why << "; recomputing\n";
    }
    if (!universe_) {
      universe_ = std::make_shared<const IndecUniverse>(enumerateIndecomposables(algebra_));
      if (!cache_.empty()) io::saveUniverse(*universe_, cache_);
    }
    return universe_;
  }

  /// The universe when the algebra is small enough to have one.
  const IndecUniverse *tryUniverse() {
    if (!universeFailed_) {
      try {
        return universe().get();
      } catch (const Error &e) {
        if (!isCapabilityError(e.code())) throw;
        universeFailed_ = true;
      }
    }
    return nullptr;
  }

  io::ModuleReader reader() {
    return io::ModuleReader(algebra_, [this]() -> const IndecUniverse & { return *universe(); });
  }
  Representation module(const std::string &arg) { return reader().readArgument(arg); }

  std::string name(const Representation &m) { return io::describe(tryUniverse(), m); }
  Json names(const std::vector<Representation> &ms) {
    Json j = Json::array();
    for (const auto &m : ms) j.push_back(name(m));
    return j;
  }

 private:
  AlgebraPtr algebra_;
  std::string cache_;
  std::ostream &err_;
  UniversePtr universe_;
  bool universeFailed_ = false;
};

Json labels(const IndecUniverse &u, const MemberSet &s) {
  Json j = Json::array();
  for (auto i : s) j.push_back(u.label(i));
  return j;
}

Json pairJson(const TorsionPair &p) {
  return {{"torsion", labels(*p.universe, p.torsion)}, {"free", labels(*p.universe, p.free)}};
}

Json compatibilityJson(const Compatibility &c) {
  Json j{{"compatible", c.compatible}, {"star", c.star}, {"dagger", c.dagger}};
  if (c.failure) j["failure"] = *c.failure;
  if (c.starFailure) j["starFailure"] = *c.starFailure;
  if (c.daggerFailure) j["daggerFailure"] = *c.daggerFailure;
  return j;
}

Json stratumJson(Session &s, const Stratum &st) {
  Json parts = Json::object();
  for (std::size_t k = 0; k < st.parts.size(); ++k) parts[st.index[k]] = s.name(st.parts[k]);
  return {{"index", st.index}, {"parts", parts}};
}

Json decompositionJson(Session &s, const OrderedDecomposition &d) {
  return {{"index", d.index}, {"parts", s.names(d.parts)}};
}

Side sideOf(const std::string &side) {
  if (side == "m") return Side::M;
  if (side == "n") return Side::N;
  throw Error(ErrorCode::Schema, "--side must be m or n");
}

io::ClassSide classSideOf(const std::string &side) {
  if (side == "torsion") return io::ClassSide::Torsion;
  if (side == "torsionfree") return io::ClassSide::TorsionFree;
  throw Error(ErrorCode::Schema, "--side must be torsion or torsionfree");
}

struct Options {
  std::string algebra, output = "json", cache;
  std::string m, n, dec, family, family2, system, classArg;
  std::vector<std::string> gens;
  std::string side, classSide = "torsion";
  bool inverse = false, minus = false;
  std::size_t limit = 0;
};

struct Result {
  int code = kTrue;
  Json doc;
};

using Handler = std::function<Result(Session &, Emitter &)>;

}  // namespace

int execute(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Torsion pairs, strata and stratifying systems over bound quiver algebras", "strat"};
  Options o;
  app.add_option("--algebra", o.algebra, "Algebra JSON file")->required();
  app.add_option("--output", o.output, "json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--universe-cache", o.cache, "Cache file for the indecomposables");
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::map<CLI::App *, Handler> handlers;
  auto command = [&](const char *name, const char *help, Handler h) {
    auto *sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(h);
    return sub;
  };
  auto familyOf = [](Session &s, const std::string &arg) {
    return io::parseFamily(io::readJsonArgument(arg), s.reader(), s.universe());
  };
  auto decOf = [](Session &s, const std::string &arg) {
    return io::parseDecomposition(io::readJsonArgument(arg), s.reader());
  };
  auto systemOf = [](Session &s, const std::string &arg) {
    auto [index, mods] = io::parseSystem(io::readJsonArgument(arg), s.reader());
    return verifySystem(std::move(mods), std::move(index));
  };

  command("check", "Validate the algebra", [](Session &s, Emitter &) {
    const Algebra &a = *s.algebra();
    Json basis = Json::array();
    for (const auto &p : a.pathBasis()) basis.push_back(formatPath(a.quiver(), p));
    return Result{kTrue, {{"valid", true},
                          {"vertices", a.vertexCount()},
                          {"arrows", a.arrowCount()},
                          {"dimension", a.dimension()},
                          {"pathBasis", basis}}};
  });

  command("indecs", "List the indecomposable modules", [](Session &s, Emitter &) {
    const auto &u = *s.universe();
    Json mods = Json::array();
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto t = u.tauOf(i);
      mods.push_back({{"label", u.label(i)},
                      {"dims", u.module(i).dims()},
                      {"tau", t ? Json(u.label(*t)) : Json(nullptr)},
                      {"module", io::moduleToJson(u.module(i))}});
    }
    return Result{kTrue, {{"count", u.size()}, {"indecomposables", mods}}};
  });

  command("ar-quiver", "Auslander-Reiten quiver", [](Session &s, Emitter &e) {
    const auto &u = *s.universe();
    if (e.format() == Format::Dot) {
      e.stream() << arQuiverDot(u);
      return Result{kTrue, nullptr};
    }
    return Result{kTrue, io::universeToJson(u)};
  });

  auto *hom = command("hom", "dim Hom(M, N)", [&](Session &s, Emitter &) {
    return Result{kTrue, {{"dim", homDim(s.module(o.m), s.module(o.n))}}};
  });
  hom->add_option("M", o.m)->required();
  hom->add_option("N", o.n)->required();

  auto *ext = command("ext", "dim Ext^1(M, N)", [&](Session &s, Emitter &) {
    return Result{kTrue, {{"dim", ext1Dim(s.module(o.m), s.module(o.n))}}};
  });
  ext->add_option("M", o.m)->required();
  ext->add_option("N", o.n)->required();

  auto *tauCmd = command("tau", "Auslander-Reiten translate", [&](Session &s, Emitter &) {
    auto m = s.module(o.m);
    auto t = o.inverse ? tauInverse(m) : tau(m);
    return Result{kTrue, {{o.inverse ? "tauInverse" : "tau", s.name(t)}, {"module", io::moduleToJson(t)}}};
  });
  tauCmd->add_option("M", o.m)->required();
  tauCmd->add_flag("--inverse", o.inverse, "Compute tau^- instead");

  auto *rigid = command("tau-rigid", "Hom(M, tau M) = 0", [&](Session &s, Emitter &) {
    auto m = s.module(o.m);
    bool r = o.minus ? isTauMinusRigid(m) : isTauRigid(m);
    Json doc{{o.minus ? "tauMinusRigid" : "tauRigid", r}};
    if (!r) {
      doc["witness"] = o.minus ? "Hom(tau^- M, M) = " + std::to_string(homDim(tauInverse(m), m))
                               : "Hom(M, tau M) = " + std::to_string(homDim(m, tau(m)));
    }
    return Result{r ? kTrue : kFalse, doc};
  });
  rigid->add_option("M", o.m)->required();
  rigid->add_flag("--minus", o.minus, "Test Hom(tau^- M, M) = 0");

  auto *closure = command("torsion-closure", "Smallest torsion (or torsion-free) class", [&](Session &s, Emitter &) {
    const auto &u = s.universe();
    std::vector<Representation> gens;
    for (const auto &g : o.gens) gens.push_back(s.module(g));
    bool torsion = classSideOf(o.classSide) == io::ClassSide::Torsion;
    auto members = torsion ? smallestTorsionClass(*u, gens) : smallestTorsionFreeClass(*u, gens);
    auto pair = torsion ? completeToPair(u, members) : completeFromFree(u, members);
    return Result{kTrue, {{"members", labels(*u, members)}, {"pair", pairJson(pair)}}};
  });
  closure->add_option("--gens", o.gens, "Generating modules")->required();
  closure->add_option("--side", o.classSide, "torsion or torsionfree");

  auto *complete = command("pair-complete", "Complete a class to a torsion pair", [&](Session &s, Emitter &) {
    const auto &u = s.universe();
    auto side = classSideOf(o.classSide);
    auto members = io::resolveClass(*u, io::parseClass(io::readJsonArgument(o.classArg), s.reader()), side);
    auto pair = side == io::ClassSide::Torsion ? completeToPair(u, members) : completeFromFree(u, members);
    Json doc = pairJson(pair);
    doc["splitting"] = isSplitting(pair);
    return Result{kTrue, doc};
  });
  complete->add_option("CLASS", o.classArg, "Torsion class JSON")->required();
  complete->add_option("--side", o.classSide, "torsion or torsionfree");

  auto *nested = command("nested-verify", "Check a nested family", [&](Session &s, Emitter &) {
    auto g = familyOf(s, o.family);
    return Result{kTrue, {{"nested", true}, {"family", io::familyToJson(g)}}};
  });
  nested->add_option("FAMILY", o.family)->required();

  auto *classify = command("classify", "Compatibility of a decomposition", [&](Session &s, Emitter &) {
    auto dec = decOf(s, o.dec);
    auto g = familyOf(s, o.family);
    auto c = sideOf(o.side) == Side::M ? classifyM(dec, g) : classifyN(dec, g);
    Json doc = compatibilityJson(c);
    const std::string p = o.side == "m" ? "inM" : "inN";
    doc = Json{{p, c.compatible}, {p + "*", c.star}, {p + "†", c.dagger}, {"details", doc}};
    return Result{c.compatible ? kTrue : kFalse, doc};
  });
  classify->add_option("--dec", o.dec)->required();
  classify->add_option("--family", o.family)->required();
  classify->add_option("--side", o.side)->required();

  auto *stratumCmd = command("stratum", "Stratum of a decomposition", [&](Session &s, Emitter &) {
    return Result{kTrue, stratumJson(s, stratum(decOf(s, o.dec), familyOf(s, o.family)))};
  });
  stratumCmd->add_option("--dec", o.dec)->required();
  stratumCmd->add_option("--family", o.family)->required();

  auto *substratumCmd = command("substratum", "Substratum of a decomposition", [&](Session &s, Emitter &) {
    return Result{kTrue, stratumJson(s, substratum(decOf(s, o.dec), familyOf(s, o.family)))};
  });
  substratumCmd->add_option("--dec", o.dec)->required();
  substratumCmd->add_option("--family", o.family)->required();

  auto *induced = command("induced-families", "Families induced by a decomposition", [&](Session &s, Emitter &) {
    auto f = inducedFamilies(s.universe(), decOf(s, o.dec));
    Json doc{{"fac", io::familyToJson(f.fac)}, {"sub", io::familyToJson(f.sub)}, {"homOrdered", f.homOrdered}};
    doc["distinctAt"] = f.distinctAt ? Json(f.fac.index[*f.distinctAt]) : Json(nullptr);
    return Result{kTrue, doc};
  });
  induced->add_option("--dec", o.dec)->required();

  auto *expandsCmd = command("expands", "Whether F1 expands F2", [&](Session &s, Emitter &) {
    bool r = expands(familyOf(s, o.family), familyOf(s, o.family2));
    return Result{r ? kTrue : kFalse, {{"expands", r}}};
  });
  expandsCmd->add_option("F1", o.family)->required();
  expandsCmd->add_option("F2", o.family2)->required();

  auto *induce = command("induce", "Stratifying systems induced by a decomposition", [&](Session &s, Emitter &e) {
    auto systems = induceSystems(decOf(s, o.dec), familyOf(s, o.family), sideOf(o.side));
    std::size_t count = systems.count();
    std::size_t shown = o.limit ? std::min(o.limit, count) : count;
    const IndecUniverse *u = s.tryUniverse();
    // written one system at a time, the product can be large
    if (e.format() == Format::Text) {
      e.stream() << "count: " << count << "\n";
      for (std::size_t i = 0; i < shown; ++i) {
        e.stream() << "-\n";
        renderText(io::systemToJson(u, systems.at(i)), e.stream(), "  ");
      }
    } else {
      e.stream() << "{\n  \"count\": " << count << ",\n  \"systems\": [";
      for (std::size_t i = 0; i < shown; ++i)
        e.stream() << (i ? ",\n    " : "\n    ") << io::systemToJson(u, systems.at(i)).dump();
      e.stream() << (shown ? "\n  ]\n}\n" : "]\n}\n");
    }
    return Result{kTrue, nullptr};
  });
  induce->add_option("--dec", o.dec)->required();
  induce->add_option("--family", o.family)->required();
  induce->add_option("--side", o.side)->required();
  induce->add_option("--limit", o.limit, "Emit at most this many systems");

  auto *verify = command("verify-ss", "Verify a stratifying system", [&](Session &s, Emitter &) {
    auto delta = systemOf(s, o.system);
    return Result{kTrue, {{"valid", true}, {"certificate", io::systemToJson(s.tryUniverse(), delta)}}};
  });
  verify->add_option("SYSTEM", o.system)->required();

  auto *recover = command("recover", "Decomposition and families inducing a system", [&](Session &s, Emitter &) {
    auto inducers = recoverInducers(s.universe(), systemOf(s, o.system));
    return Result{kTrue, {{"decomposition", decompositionJson(s, inducers.dec)},
                          {"fac", io::familyToJson(inducers.fac)},
                          {"sub", io::familyToJson(inducers.sub)}}};
  });
  recover->add_option("SYSTEM", o.system)->required();

  auto *orderings = command("tf-orderings", "Torsion-free admissible orderings", [&](Session &s, Emitter &) {
    Json list = Json::array();
    for (const auto &d : tfAdmissibleOrderings(s.universe(), s.module(o.m))) list.push_back(s.names(d.parts));
    return Result{kTrue, {{"count", list.size()}, {"orderings", list}}};
  });
  orderings->add_option("M", o.m)->required();

  auto *pipeline = command("tau-pipeline", "Stratifying systems from a tau-rigid module", [&](Session &s, Emitter &) {
    Json list = Json::array();
    for (const auto &r : tauRigidPipeline(s.universe(), s.module(o.m)))
      list.push_back({{"ordering", s.names(r.ordering.parts)},
                      {"family", io::familyToJson(r.family)},
                      {"system", io::systemToJson(s.tryUniverse(), r.system)}});
    return Result{kTrue, {{"count", list.size()}, {"results", list}}};
  });
  pipeline->add_option("M", o.m)->required();

  auto *filtration = command("filtration", "Delta-filtration of a module", [&](Session &s, Emitter &) {
    auto x = s.module(o.m);
    auto delta = systemOf(s, o.system);
    auto f = deltaFiltration(x, delta);
    if (!f) return Result{kFalse, {{"filtered", false}, {"witness", "not in F(Delta)"}}};
    Json factors = Json::array(), chain = Json::array(), mult = Json::object();
    for (auto k : f->factors) factors.push_back(delta.index[k]);
    for (const auto &c : f->chain) chain.push_back(c.source().dims());
    for (std::size_t k = 0; k < delta.size(); ++k) mult[delta.index[k]] = f->multiplicities[k];
    return Result{kTrue, {{"filtered", true}, {"factors", factors}, {"multiplicities", mult}, {"chain", chain}}};
  });
  filtration->add_option("X", o.m)->required();
  filtration->add_option("SYSTEM", o.system)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kInputError;
  }

  const Format format = o.output == "text" ? Format::Text : o.output == "dot" ? Format::Dot : Format::Json;
  CLI::App *chosen = app.get_subcommands().front();
  Emitter emitter(format == Format::Dot && chosen->get_name() != "ar-quiver" ? Format::Json : format, out);
  auto failure = [&](int code, const std::string &name, const std::string &message) {
    err << "error: " << message << "\n";
    if (code == kFalse)
      emitter.emit({{"ok", false}, {"witness", message}});
    else if (emitter.format() != Format::Dot)
      emitter.emit({{"error", {{"code", name}, {"message", message}}}});
    return code;
  };
  if (format == Format::Dot && chosen->get_name() != "ar-quiver")
    return failure(kInputError, "usage", "dot output is only available for ar-quiver");

  try {
    Session session(io::loadAlgebra(o.algebra), o.cache, err);
    Result r = handlers.at(chosen)(session, emitter);
    if (!r.doc.is_null()) emitter.emit(r.doc);
    return r.code;
  } catch (const Error &e) {
    int code = e.code() == ErrorCode::CheckFailed ? kFalse
               : isCapabilityError(e.code())      ? kCapability
                                                  : kInputError;
    return failure(code, errorCodeName(e.code()), e.what());
  } catch (const std::logic_error &e) {
    return failure(kCapability, "internal", e.what());
  }
}

}  // namespace strat::cli
