#include "koszuldual/json.hpp"

#include <set>

#include "koszuldual/errors.hpp"
#include "koszuldual/io.hpp"

namespace koszuldual {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json string_list(const std::vector<std::string>& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s);
  return j;
}

void require_object(const Json& j, const std::set<std::string>& allowed, const std::set<std::string>& required,
                    const char* what) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw Error(ErrorKind::InvalidArgument, std::string(what) + ": unknown field \"" + it.key() + "\"");
  for (const auto& k : required)
    if (!j.contains(k)) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": missing field \"" + k + "\"");
}

int get_int(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw Error(ErrorKind::InvalidArgument, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_string()) throw Error(ErrorKind::InvalidArgument, std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

Json with_schema(Json j) {
  j.erase("schema_version");
  j["schema_version"] = kSchemaVersion;
  return j;
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  return {{"vertices", string_list(q.vertices())}, {"arrows", arrows}};
}

Json to_json(const QuadraticPresentation& a) {
  Json j;
  j["name"] = a.name();
  j["field"] = a.field().to_string();
  Json q = to_json(a.quiver());
  j["vertices"] = q["vertices"];
  j["arrows"] = q["arrows"];
  Json rels = Json::array();
  for (const auto& r : a.relations()) rels.push_back(combo_to_string(a.quiver(), r));
  j["relations"] = rels;
  return j;
}

Json to_json(const DerivedClass& c) {
  Json j;
  j["class"] = tag_name(c.tag);
  switch (c.tag) {
    case ClassTag::Discrete:
      j["r"] = c.r;
      j["n"] = c.n;
      j["m"] = c.m;
      break;
    case ClassTag::EuclideanA:
      j["s"] = c.s;
      j["n"] = c.n;
      j["m"] = c.m;
      break;
    case ClassTag::DynkinA:
      j["n"] = c.n;
      break;
    case ClassTag::DynkinTree: {
      j["type"] = c.tree_type;
      Json edges = Json::array();
      for (const auto& [u, v] : c.tree_edges) edges.push_back({u, v});
      j["edges"] = edges;
      break;
    }
    case ClassTag::Unknown:
      j["diagnostic"] = c.diagnostic;
      break;
  }
  return j;
}

Json to_json(const AbsorbedCycle& c) {
  Json j;
  j["arrows"] = string_list(c.arrows);
  Json cw = Json::array();
  for (bool b : c.clockwise) cw.push_back(b);
  j["clockwise"] = cw;
  j["relations"] = string_list(c.relations);
  j["n"] = c.n;
  j["m"] = c.m;
  j["r_plus"] = c.r_plus;
  j["r_minus"] = c.r_minus;
  j["paths_plus"] = c.paths_plus;
  j["paths_minus"] = c.paths_minus;
  return j;
}

Json to_json(const FinitenessReport& f) {
  Json j;
  j["finite"] = to_string(f.verdict);
  j["dims"] = f.dims;
  j["witness_cycle"] = string_list(f.witness_cycle);
  j["cutoff"] = f.cutoff;
  return j;
}

Json to_json(const KoszulVerdict& k, const Quiver& q) {
  Json j;
  j["koszul"] = k.koszul;
  j["cutoff"] = k.cutoff;
  j["certified"] = k.certified;
  if (!k.koszul) {
    j["step"] = k.step;
    j["degree"] = k.degree;
    j["simple"] = k.simple >= 0 && k.simple < q.num_vertices() ? Json(q.vertex(k.simple)) : Json(nullptr);
  }
  return j;
}

Json to_json(const GldimReport& g) {
  Json j;
  j["gldim"] = optional_int(g.value);
  j["beyond_cutoff"] = g.beyond_cutoff;
  j["certified"] = g.certified;
  j["cutoff"] = g.cutoff;
  return j;
}

Json to_json(const ResolutionReport& r, const Quiver& q) {
  Json j;
  j["cutoff"] = r.cutoff;
  j["degree_bound"] = r.degree_bound;
  j["top_degree"] = r.top_degree;
  Json simples = Json::array();
  for (const auto& s : r.simples) {
    Json sj;
    sj["simple"] = q.vertex(s.simple);
    sj["projective_dimension"] = optional_int(s.projective_dimension);
    sj["cutoff_reached"] = s.cutoff_reached;
    sj["complete"] = s.complete();
    Json steps = Json::array();
    for (size_t k = 0; k < s.steps.size(); ++k) {
      Json st;
      st["step"] = static_cast<int>(k);
      // degree -> number of generators
      std::map<int, int> by_degree;
      Json gens = Json::array();
      for (const auto& g : s.steps[k].generators) {
        gens.push_back({{"vertex", q.vertex(g.vertex)}, {"degree", g.degree}});
        ++by_degree[g.degree];
      }
      Json degrees = Json::object();
      for (const auto& [d, c] : by_degree) degrees[std::to_string(d)] = c;
      st["generators"] = gens;
      st["degrees"] = degrees;
      st["certified"] = k < s.certified.size() ? s.certified[k] : false;
      steps.push_back(st);
    }
    sj["steps"] = steps;
    simples.push_back(sj);
  }
  j["simples"] = simples;
  return j;
}

Json to_json(const Pi1Report& p) {
  Json j;
  j["pi1"] = to_string(p.verdict);
  j["abelianization"] = p.abelianization.to_string();
  j["spanning_tree"] = string_list(p.spanning_tree);
  j["generators"] = string_list(p.generators);
  j["generator_walks"] = string_list(p.generator_walks);
  Json rels = Json::array();
  for (size_t i = 0; i < p.relators.size(); ++i) {
    Json r;
    r["word"] = p.word_to_string(p.relators[i]);
    r["from"] = i < p.relator_sources.size() ? p.relator_sources[i] : std::string();
    rels.push_back(r);
  }
  j["relators"] = rels;
  if (!p.witness.empty()) j["witness"] = p.witness;
  j["certificate"] = string_list(p.certificate);
  return j;
}

Json to_json(const SimplyConnectedReport& s) {
  Json j = to_json(s.pi1);
  j["simply_connected"] = to_string(s.verdict);
  if (!s.witness.empty()) j["witness"] = s.witness;
  j["caveats"] = string_list(s.caveats);
  return j;
}

Json to_json(const SmashQuiver& s) {
  Json j;
  j["group"] = s.weighting.group.to_string();
  Json w = Json::object();
  for (const auto& a : s.base.quiver().arrows()) w[a.id] = s.weighting.of(a.id);
  j["weights"] = w;
  if (s.weighting.group.is_integers()) {
    j["window"] = s.window;
    j["boundary_effects"] = s.boundary_effects;
  }
  j["covering"] = to_json(s.covering);
  Json comps = Json::array();
  for (size_t i = 0; i < s.components.size(); ++i) {
    Json c;
    c["vertices"] = string_list(s.components[i]);
    c["isomorphic_to_base"] = i < s.component_isomorphic_to_base.size() && s.component_isomorphic_to_base[i];
    comps.push_back(c);
  }
  j["component_count"] = static_cast<int>(s.components.size());
  j["components"] = comps;
  j["notes"] = string_list(s.notes);
  return j;
}

Json to_json(const GradabilityReport& g) {
  Json j;
  j["gradable"] = g.gradable;
  if (g.gradable) {
    Json d = Json::object();
    for (const auto& [v, k] : g.degrees) d[v] = k;
    j["degrees"] = d;
  } else {
    j["witness_walk"] = string_list(g.witness_walk);
    j["signed_length"] = g.signed_length;
  }
  return j;
}

Json to_json(const DualSmashReport& d) {
  Json j;
  j["commutes"] = d.commutes;
  Json vm = Json::object(), am = Json::object();
  for (const auto& [k, v] : d.vertex_map) vm[k] = v;
  for (const auto& [k, v] : d.arrow_map) am[k] = v;
  j["vertex_map"] = vm;
  j["arrow_map"] = am;
  return j;
}

Json to_json(const QuiverEquivalenceReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  Json w = Json::array();
  for (const auto& s : r.word) w.push_back(to_string(s));
  j["word"] = w;
  j["certificate"] = r.certificate;
  j["orbit_size"] = r.orbit_size;
  j["depth"] = r.depth;
  j["max_depth"] = r.max_depth;
  return j;
}

Json to_json(const EquivalenceVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["rule"] = v.rule;
  j["class"] = to_json(v.algebra_class);
  j["dual_class"] = v.dual_class ? to_json(*v.dual_class) : Json(nullptr);
  j["simply_connected"] = v.simply_connected;
  j["koszul"] = v.koszul;
  j["cutoff"] = v.cutoff;
  j["notes"] = string_list(v.notes);
  return j;
}

QuadraticPresentation presentation_from_json(const Json& j) {
  require_object(j, {"name", "field", "vertices", "arrows", "relations", "schema_version"},
                 {"vertices", "arrows"}, "presentation");
  std::string text = "quiver " + (j.contains("name") ? get_string(j, "name") : std::string("unnamed")) + "\n";
  if (j.contains("field")) text += "field: " + get_string(j, "field") + "\n";
  if (!j["vertices"].is_array()) throw Error(ErrorKind::InvalidArgument, "presentation: vertices must be an array");
  text += "vertices:";
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw Error(ErrorKind::InvalidArgument, "presentation: vertex ids must be strings");
    text += " " + v.get<std::string>();
  }
  text += "\n";
  if (!j["arrows"].is_array()) throw Error(ErrorKind::InvalidArgument, "presentation: arrows must be an array");
  for (const auto& a : j["arrows"]) {
    require_object(a, {"id", "source", "target"}, {"id", "source", "target"}, "arrow");
    text += "arrows: " + get_string(a, "id") + ": " + get_string(a, "source") + " -> " + get_string(a, "target") + "\n";
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw Error(ErrorKind::InvalidArgument, "presentation: relations must be an array");
    for (const auto& r : j["relations"]) {
      if (!r.is_string()) throw Error(ErrorKind::InvalidArgument, "presentation: relations must be strings");
      text += "relations: " + r.get<std::string>() + "\n";
    }
  }
  return parse(text);
}

DerivedClass class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("class") || !j["class"].is_string())
    throw Error(ErrorKind::InvalidArgument, "class: missing field \"class\"");
  std::string tag = j["class"].get<std::string>();
  if (tag == "discrete") {
    require_object(j, {"class", "r", "n", "m"}, {"r", "n", "m"}, "class");
    return discrete_class(get_int(j, "r"), get_int(j, "n"), get_int(j, "m"));
  }
  if (tag == "euclidean_a") {
    require_object(j, {"class", "s", "n", "m"}, {"n", "m"}, "class");
    DerivedClass c = euclidean_class(get_int(j, "n"), get_int(j, "m"));
    if (j.contains("s") && get_int(j, "s") != c.s) throw Error(ErrorKind::InvalidArgument, "class: s must be n + m - 1");
    return c;
  }
  if (tag == "dynkin_a") {
    require_object(j, {"class", "n"}, {"n"}, "class");
    DerivedClass c;
    c.tag = ClassTag::DynkinA;
    c.n = get_int(j, "n");
    if (c.n < 1) throw Error(ErrorKind::InvalidArgument, "class: n must be positive");
    return c;
  }
  if (tag == "dynkin_tree") {
    require_object(j, {"class", "type", "edges"}, {"type"}, "class");
    DerivedClass c;
    c.tag = ClassTag::DynkinTree;
    c.tree_type = get_string(j, "type");
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
          throw Error(ErrorKind::InvalidArgument, "class: edges are pairs of vertex ids");
        c.tree_edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
    return c;
  }
  if (tag == "unknown") {
    require_object(j, {"class", "diagnostic"}, {}, "class");
    DerivedClass c;
    c.tag = ClassTag::Unknown;
    if (j.contains("diagnostic")) c.diagnostic = get_string(j, "diagnostic");
    return c;
  }
  throw Error(ErrorKind::InvalidArgument, "class: unknown class \"" + tag + "\"");
}

}  // namespace koszuldual
