#include "koszuldual/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "koszuldual/classifier.hpp"
#include "koszuldual/corpus.hpp"
#include "koszuldual/covering.hpp"
#include "koszuldual/dual.hpp"
#include "koszuldual/errors.hpp"
#include "koszuldual/homotopy.hpp"
#include "koszuldual/io.hpp"
#include "koszuldual/json.hpp"
#include "koszuldual/reflections.hpp"
#include "koszuldual/resolution.hpp"

namespace koszuldual {

namespace {

struct Options {
  std::string field;
  int cutoff = -1;
  std::string format = "text";
  std::string out;
  std::vector<std::string> inputs;
  std::string reflect_file;
  std::vector<std::string> steps;
  std::string group;
  std::string weights;
  int window = -1;
  int max_depth = kDefaultMaxDepth;
  std::string simple;
};

struct Output {
  Json json;
  std::string text;
  std::string dot;
};

class Painter {
 public:
  explicit Painter(bool on) : on_(on) {}
  std::string good(const std::string& s) const { return wrap(s, "32"); }
  std::string bad(const std::string& s) const { return wrap(s, "31"); }
  std::string dim(const std::string& s) const { return wrap(s, "33"); }
  std::string verdict(const std::string& s) const {
    if (s == "equivalent" || s == "yes" || s == "trivial" || s == "finite" || s == "PASS" || s == "true") return good(s);
    if (s == "unknown" || s == "depth-exceeded") return dim(s);
    return bad(s);
  }

 private:
  std::string wrap(const std::string& s, const char* code) const {
    return on_ ? "\x1b[" + std::string(code) + "m" + s + "\x1b[0m" : s;
  }
  bool on_;
};

std::optional<int> cutoff_of(const Options& o) { return o.cutoff >= 0 ? std::optional<int>(o.cutoff) : std::nullopt; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// a path that does not exist may name a bundled example: "ex4" or ".../ex4.quiver"
QuadraticPresentation load(const std::string& path, const Options& o) {
  std::optional<Field> f;
  if (!o.field.empty()) f = parse_field(o.field);
  if (std::filesystem::exists(path)) return parse_file(path, f);
  std::string stem = std::filesystem::path(path).stem().string();
  for (const auto& e : bundled_corpus())
    if (e.name == stem) return parse(e.text, f);
  throw Error(ErrorKind::InvalidArgument, "no such file: " + path);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string dims_string(const std::vector<int>& d) {
  std::vector<std::string> s;
  for (int x : d) s.push_back(std::to_string(x));
  return join(s, " ");
}

Output run_dual(const Options& o, const Painter& p) {
  auto a = load(o.inputs[0], o);
  auto d = dual(a);
  auto fin = is_finite_dimensional(d, cutoff_of(o));
  Output r;
  r.json["input"] = a.name();
  r.json["dual"] = to_json(d);
  r.json["dual_finite"] = to_json(fin);
  r.text = serialize(d);
  r.text += "# dual is " + p.verdict(to_string(fin.verdict)) + "; dims by degree: " + dims_string(fin.dims);
  if (!fin.witness_cycle.empty()) r.text += "; nonzero cycle: " + join(fin.witness_cycle, " ");
  if (fin.cutoff > 0) r.text += "; cutoff " + std::to_string(fin.cutoff);
  r.text += "\n";
  r.dot = to_dot(d);
  return r;
}

Output run_koszul(const Options& o, const Painter& p) {
  auto a = load(o.inputs[0], o);
  ResolutionOptions ro;
  ro.cutoff = o.cutoff;
  auto res = minimal_resolution(a, {}, ro);
  auto k = koszul_check(res);
  auto g = gldim(res);
  Output r;
  r.json = to_json(k, a.quiver());
  r.json["gldim"] = to_json(g);
  std::ostringstream t;
  t << a.name() << ": " << (k.koszul ? p.good("koszul") : p.bad("not koszul")) << " (checked up to step " << k.cutoff << ")"
    << (k.certified ? "" : " (uncertified: degree bound reached)") << "\n";
  if (!k.koszul)
    t << "  first non-linear generator: step " << k.step << ", degree " << k.degree << ", simple "
      << a.quiver().vertex(k.simple) << "\n";
  t << "  gldim: " << (g.value ? std::to_string(*g.value) : std::string("> ") + std::to_string(g.cutoff))
    << " (cutoff " << g.cutoff << ")\n";
  r.text = t.str();
  return r;
}

Output run_resolve(const Options& o, const Painter&) {
  auto a = load(o.inputs[0], o);
  std::optional<int> simple;
  if (!o.simple.empty()) {
    int v = a.quiver().vertex_index(o.simple);
    if (v < 0) throw Error(ErrorKind::InvalidArgument, "unknown vertex " + o.simple);
    simple = v;
  }
  ResolutionOptions ro;
  ro.cutoff = o.cutoff;
  auto res = minimal_resolution(a, simple, ro);
  Output r;
  r.json = to_json(res, a.quiver());
  std::ostringstream t;
  t << a.name() << ": cutoff " << res.cutoff << ", degree bound " << res.degree_bound << "\n";
  for (const auto& s : res.simples) {
    t << "S_" << a.quiver().vertex(s.simple) << ": pd "
      << (s.projective_dimension ? std::to_string(*s.projective_dimension) : std::string("unknown")) << "\n";
    for (size_t k = 0; k < s.steps.size(); ++k) {
      std::vector<std::string> gens;
      for (const auto& g : s.steps[k].generators)
        gens.push_back("e_" + a.quiver().vertex(g.vertex) + "[" + std::to_string(g.degree) + "]");
      t << "  P^" << k << ": " << (gens.empty() ? "0" : join(gens, " + ")) << "\n";
    }
    if (s.cutoff_reached) t << "  ... (cutoff reached)\n";
  }
  r.text = t.str();
  return r;
}

Output run_pi1(const Options& o, const Painter& p) {
  auto a = load(o.inputs[0], o);
  auto s = simply_connected(a);
  Output r;
  r.json = to_json(s);
  std::ostringstream t;
  t << a.name() << ": pi1 " << p.verdict(to_string(s.pi1.verdict)) << ", abelianization "
    << s.pi1.abelianization.to_string() << "\n";
  t << "  simply connected: " << p.verdict(to_string(s.verdict)) << "\n";
  for (size_t i = 0; i < s.pi1.generators.size(); ++i)
    t << "  generator " << s.pi1.generators[i] << ": " << s.pi1.generator_walks[i] << "\n";
  for (size_t i = 0; i < s.pi1.relators.size(); ++i)
    t << "  relator " << s.pi1.word_to_string(s.pi1.relators[i]) << "  (" << s.pi1.relator_sources[i] << ")\n";
  for (const auto& c : s.pi1.certificate) t << "  eliminate " << c << "\n";
  for (const auto& c : s.caveats) t << "  caveat: " << c << "\n";
  r.text = t.str();
  return r;
}

Output run_smash(const Options& o, const Painter& p) {
  auto a = load(o.inputs[0], o);
  Group g = parse_group(o.group);
  std::string wtext = o.weights;
  if (!wtext.empty() && std::filesystem::exists(wtext)) wtext = read_file(wtext);
  Weighting w = parse_weighting(wtext, a.quiver(), g);
  auto s = smash(a, w, o.window);
  Output r;
  r.json = to_json(s);
  std::ostringstream t;
  t << a.name() << " # " << g.to_string() << ": " << s.components.size() << " component(s)";
  if (g.is_integers()) t << " in the window [-" << s.window << ", " << s.window << "]";
  t << "\n";
  for (size_t i = 0; i < s.components.size(); ++i)
    t << "  " << join(s.components[i], " ") << "  "
      << (s.component_isomorphic_to_base[i] ? p.good("isomorphic to the base") : p.dim("not isomorphic to the base"))
      << "\n";
  if (!g.is_integers()) {
    int expected = expected_components(a.quiver(), w);
    auto d = dual_smash_commutes(a, w);
    r.json["expected_components"] = expected;
    r.json["dual_smash"] = to_json(d);
    t << "  expected components: " << expected << "\n";
    t << "  smash commutes with the dual: " << p.verdict(d.commutes ? "yes" : "no") << "\n";
  }
  for (const auto& n : s.notes) t << "  note: " << n << "\n";
  r.text = t.str();
  r.dot = to_dot(s.covering);
  return r;
}

Output run_reflect(const Options& o, const Painter&) {
  auto a = load(o.reflect_file, o);
  std::vector<ReflectionStep> word;
  for (const auto& s : o.steps) word.push_back(parse_reflection_step(s));
  Quiver q = reflect(a.quiver(), word);
  QuadraticPresentation out(a.name() + "_reflected", q, a.field(), {});
  Output r;
  Json w = Json::array();
  for (const auto& s : word) w.push_back(to_string(s));
  r.json["word"] = w;
  r.json["quiver"] = to_json(out);
  std::vector<std::string> notes;
  if (!a.relations().empty()) notes.push_back("relations dropped: reflections act on the quiver only");
  r.json["notes"] = notes;
  r.text = serialize(out);
  for (const auto& n : notes) r.text += "# " + n + "\n";
  r.dot = to_dot(out);
  return r;
}

Output run_equiv_quiver(const Options& o, const Painter& p) {
  auto a = load(o.inputs[0], o);
  auto b = load(o.inputs[1], o);
  auto rep = equivalent_quivers(a.quiver(), b.quiver(), o.max_depth);
  Output r;
  r.json = to_json(rep);
  std::ostringstream t;
  t << a.name() << " vs " << b.name() << ": " << p.verdict(to_string(rep.verdict)) << "\n";
  if (!rep.word.empty()) {
    std::vector<std::string> w;
    for (const auto& s : rep.word) w.push_back(to_string(s));
    t << "  word: " << join(w, " ") << "\n";
  }
  t << "  " << rep.certificate << "\n";
  t << "  orbit classes seen: " << rep.orbit_size << ", depth " << rep.depth << " of " << rep.max_depth << "\n";
  r.text = t.str();
  return r;
}

Output run_classify(const Options& o, const Painter&) {
  auto a = load(o.inputs[0], o);
  auto c = classify(a);
  auto gentle = is_gentle(a);
  Output r;
  r.json["class"] = to_json(c);
  r.json["gentle"] = gentle.gentle;
  if (!gentle.gentle) r.json["gentle_violation"] = gentle.violation;
  std::optional<DerivedClass> d;
  if (c.tag != ClassTag::Unknown) d = dual_class(c);
  r.json["dual_class"] = d ? to_json(*d) : Json(nullptr);
  if (c.tag == ClassTag::Discrete || c.tag == ClassTag::EuclideanA) {
    r.json["delta"] = c.delta;
    r.json["balance"] = c.balance;
  }
  r.json["cycle"] = c.cycle ? to_json(*c.cycle) : Json(nullptr);
  r.json["trace"] = c.trace;
  std::ostringstream t;
  t << a.name() << ": " << to_string(c) << "\n";
  t << "  gentle: " << (gentle.gentle ? "yes" : "no (" + gentle.violation + ")") << "\n";
  if (d) t << "  dual class: " << to_string(*d) << "\n";
  if (c.cycle) {
    t << "  cycle: " << join(c.cycle->arrows, " ") << "\n";
    t << "  cycle relations: " << (c.cycle->relations.empty() ? "none" : join(c.cycle->relations, ", ")) << "\n";
  }
  for (const auto& s : c.trace) t << "  " << s << "\n";
  r.text = t.str();
  return r;
}

Output run_decide(const Options& o, const Painter& p) {
  auto a = load(o.inputs[0], o);
  auto v = decide_equiv(a, cutoff_of(o));
  Output r;
  r.json = to_json(v);
  std::ostringstream t;
  t << a.name() << ": " << p.verdict(to_string(v.verdict)) << " (" << v.rule << ")\n";
  t << "  class: " << to_string(v.algebra_class) << "\n";
  if (v.dual_class) t << "  dual class: " << to_string(*v.dual_class) << "\n";
  t << "  koszul up to step " << v.cutoff << ": " << (v.koszul ? "yes" : "no") << "\n";
  t << "  simply connected: " << v.simply_connected << "\n";
  for (const auto& n : v.notes) t << "  note: " << n << "\n";
  r.text = t.str();
  return r;
}

// facts about one example, computed per expectation key
Json corpus_fact(const std::string& key, const QuadraticPresentation& a) {
  if (key == "pi1") return to_string(pi1(a).verdict);
  if (key == "simply_connected") return to_string(simply_connected(a).verdict);
  if (key == "gentle") return is_gentle(a).gentle;
  if (key == "class") return to_json(classify(a));
  if (key == "dual_class") {
    auto c = classify(a);
    return c.tag == ClassTag::Unknown ? Json(nullptr) : to_json(dual_class(c));
  }
  if (key == "verdict") return to_string(decide_equiv(a).verdict);
  if (key == "rule") return decide_equiv(a).rule;
  if (key == "pd") {
    Json j = Json::object();
    for (const auto& s : minimal_resolution(a).simples)
      j[a.quiver().vertex(s.simple)] = s.projective_dimension ? Json(*s.projective_dimension) : Json(nullptr);
    return j;
  }
  if (key == "koszul") {
    auto k = koszul_check(a);
    if (k.koszul) return Json{{"koszul", true}};
    return Json{{"step", k.step}, {"degree", k.degree}};
  }
  if (key == "dual_finite") return to_string(is_finite_dimensional(dual(a)).verdict);
  if (key == "witness_length") return static_cast<int>(is_finite_dimensional(dual(a)).witness_cycle.size());
  if (key == "dual_relations") return static_cast<int>(dual(a).relations().size());
  if (key == "dual_gldim") {
    auto g = gldim(dual(a));
    return g.value ? Json(*g.value) : Json(nullptr);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expectation key " + key);
}

bool contains(const Json& actual, const Json& expected) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (auto it = expected.begin(); it != expected.end(); ++it)
      if (!actual.contains(it.key()) || !contains(actual[it.key()], it.value())) return false;
    return true;
  }
  return actual == expected;
}

Output run_corpus(const Options&, const Painter& p) {
  Json expectations = Json::parse(corpus_expectations());
  Output r;
  Json rows = Json::array();
  int passed = 0, total = 0;
  std::ostringstream t;
  for (const auto& e : bundled_corpus()) {
    if (!expectations.contains(e.name)) continue;
    ++total;
    Json row;
    row["example"] = e.name;
    std::vector<std::string> checked, failed;
    Json got = Json::object();
    try {
      auto a = parse(e.text);
      for (auto it = expectations[e.name].begin(); it != expectations[e.name].end(); ++it) {
        checked.push_back(it.key());
        Json actual = corpus_fact(it.key(), a);
        got[it.key()] = actual;
        if (!contains(actual, it.value())) failed.push_back(it.key());
      }
    } catch (const std::exception& ex) {
      failed.push_back(std::string("error: ") + ex.what());
    }
    bool ok = failed.empty();
    passed += ok;
    row["pass"] = ok;
    row["checked"] = checked;
    row["failed"] = failed;
    row["actual"] = got;
    rows.push_back(row);
    t << e.name << "  " << p.verdict(ok ? "PASS" : "FAIL") << "  " << join(checked, ", ");
    if (!ok) t << "  mismatched: " << join(failed, ", ");
    t << "\n";
  }
  t << passed << "/" << total << " examples match\n";
  r.json["rows"] = rows;
  r.json["passed"] = passed;
  r.json["total"] = total;
  r.text = t.str();
  if (passed != total) r.json["failed"] = true;
  return r;
}

bool color_enabled(bool terminal, bool to_file) {
  if (to_file) return false;
  if (const char* c = std::getenv("KOSZULDUAL_COLOR")) return std::string(c) == "1";
  return terminal;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool terminal) {
  Options o;
  CLI::App app{"Koszul duals, resolutions and derived classes of quadratic quiver algebras", "koszuldual"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--field", o.field, "Q or GF:<p> (overrides the file)");
  app.add_option("--cutoff", o.cutoff, "homological cutoff (default #vertices + 4)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--out", o.out, "write the report to a file");

  using Runner = std::function<Output(const Options&, const Painter&)>;
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto one_file = [&](const char* name, const char* help, Runner run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.inputs, "presentation (.quiver) or bundled example name")->required()->expected(1);
    commands.emplace_back(sub, run);
    return sub;
  };
  one_file("dual", "quadratic dual and its finiteness", run_dual);
  one_file("koszul", "Koszulity and global dimension up to the cutoff", run_koszul);
  one_file("resolve", "minimal graded projective resolutions of the simples", run_resolve)
      ->add_option("--simple", o.simple, "only this vertex");
  one_file("pi1", "fundamental group and simple connectedness", run_pi1);
  auto* sm = one_file("smash", "smash product (covering) for a group grading", run_smash);
  sm->add_option("--group", o.group, "zk:<k> or z")->required();
  sm->add_option("--weights", o.weights, "\"a=1,b=0\", a JSON object, or a file holding either")->required();
  sm->add_option("--window", o.window, "sheets -t..t for the group Z (default #vertices)")
      ->check(CLI::NonNegativeNumber);
  auto* rf = app.add_subcommand("reflect", "apply sink (+v) and source (-v) reflections");
  rf->add_option("file", o.reflect_file, "presentation (.quiver) or bundled example name")->required();
  rf->add_option("steps", o.steps, "+v, -v, sink:v or source:v")->required();
  commands.emplace_back(rf, run_reflect);
  auto* eq = app.add_subcommand("equiv-quiver", "reflection equivalence of two acyclic quivers");
  eq->add_option("files", o.inputs)->required()->expected(2);
  eq->add_option("--max-depth", o.max_depth, "BFS depth limit")->check(CLI::NonNegativeNumber);
  commands.emplace_back(eq, run_equiv_quiver);
  one_file("classify", "derived class of a gentle one-cycle or tree algebra", run_classify);
  one_file("decide-equiv", "is A derived equivalent to its Koszul dual", run_decide);
  commands.emplace_back(app.add_subcommand("corpus", "check the bundled examples against their expectations"),
                        run_corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  bool dot_ok = chosen->get_name() == "dual" || chosen->get_name() == "smash" || chosen->get_name() == "reflect";
  if (o.format == "dot" && !dot_ok) {
    err << "error: --format dot is only available for dual, smash and reflect\n";
    return 2;
  }

  Painter painter(color_enabled(terminal, !o.out.empty()));
  Output result;
  try {
    for (auto& [sub, run] : commands)
      if (sub == chosen) result = run(o, painter);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string text;
  if (o.format == "json") {
    Json j;
    j["command"] = chosen->get_name();
    for (auto it = result.json.begin(); it != result.json.end(); ++it) j[it.key()] = it.value();
    text = with_schema(j).dump(2) + "\n";
  } else if (o.format == "dot") {
    text = result.dot;
  } else {
    text = result.text;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  if (chosen->get_name() == "corpus" && result.json.value("failed", false)) return 1;
  return 0;
}

}  // namespace koszuldual
