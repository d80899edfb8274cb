#include "koszuldual/covering.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include <json.hpp>

#include "koszuldual/dual.hpp"
#include "koszuldual/errors.hpp"

namespace koszuldual {

Group Group::cyclic(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  return Group{k};
}

long long Group::normalize(long long g) const {
  if (k == 0) return g;
  long long r = g % k;
  return r < 0 ? r + k : r;
}

std::string Group::to_string() const { return k == 0 ? "Z" : "Z/" + std::to_string(k); }

Group parse_group(const std::string& s) {
  if (s == "z" || s == "Z") return Group::integers();
  if (s.rfind("zk:", 0) == 0 || s.rfind("Zk:", 0) == 0) {
    const std::string n = s.substr(3);
    if (n.empty() || !std::all_of(n.begin(), n.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        n.size() > 9)
      throw Error(ErrorKind::InvalidArgument, "bad group order '" + n + "'");
    return Group::cyclic(std::stoi(n));
  }
  throw Error(ErrorKind::InvalidArgument, "group must be 'z' or 'zk:<k>', got '" + s + "'");
}

long long Weighting::of(const std::string& arrow) const {
  auto it = weight.find(arrow);
  return it == weight.end() ? 0 : group.normalize(it->second);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

long long parse_integer(const std::string& s) {
  std::string t = trim(s);
  std::size_t i = (t.size() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size() || t.size() > 18 ||
      !std::all_of(t.begin() + i, t.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::InvalidArgument, "weight '" + t + "' is not an integer");
  return std::stoll(t);
}

}  // namespace

Weighting parse_weighting(const std::string& text, const Quiver& q, Group g) {
  Weighting w{g, {}};
  auto put = [&](const std::string& arrow, long long value) {
    if (q.arrow_index(arrow) < 0) throw Error(ErrorKind::InvalidArgument, "no arrow named '" + arrow + "'");
    w.weight[arrow] = g.normalize(value);
  };
  std::string t = trim(text);
  if (!t.empty() && t[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("weights: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "weights must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!it.value().is_number_integer()) throw Error(ErrorKind::InvalidArgument, "weight of " + it.key() + " is not an integer");
      put(it.key(), it.value().get<long long>());
    }
    return w;
  }
  std::string item;
  auto flush = [&] {
    std::string s = trim(item);
    item.clear();
    if (s.empty()) return;
    std::size_t eq = s.find_first_of("=:");
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected arrow=weight, got '" + s + "'");
    put(trim(s.substr(0, eq)), parse_integer(s.substr(eq + 1)));
  };
  for (char c : t) {
    if (c == ',' || c == ';' || c == '\n') flush();
    else item += c;
  }
  flush();
  return w;
}

HomogeneityReport check_homogeneous(const QuadraticPresentation& a, const Weighting& w) {
  HomogeneityReport rep;
  const Quiver& q = a.quiver();
  for (const auto& r : a.relations()) {
    std::set<long long> seen;
    for (const auto& t : r.terms) {
      long long s = 0;
      for (int x : t.path.arrows) s += w.of(q.arrow(x).id);
      seen.insert(w.group.normalize(s));
    }
    if (seen.size() > 1) {
      rep.homogeneous = false;
      rep.offending = combo_to_string(q, r);
      return rep;
    }
  }
  return rep;
}

namespace {

std::string sheet(const std::string& id, long long g) { return id + "[" + std::to_string(g) + "]"; }

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

// tree degrees by BFS over the underlying graph; parent arrow per vertex
struct TreeData {
  std::vector<long long> pot;
  std::vector<int> parent_arrow;
  std::vector<char> in_tree;
};

TreeData bfs_tree(const Quiver& q, const std::vector<long long>& weight) {
  const int nv = q.num_vertices();
  TreeData t{std::vector<long long>(nv, 0), std::vector<int>(nv, -1), std::vector<char>(q.num_arrows(), 0)};
  std::vector<char> seen(nv, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    std::vector<int> inc = q.out_arrows(v);
    inc.insert(inc.end(), q.in_arrows(v).begin(), q.in_arrows(v).end());
    std::sort(inc.begin(), inc.end());
    for (int x : inc) {
      bool fwd = q.source(x) == v;
      int u = fwd ? q.target(x) : q.source(x);
      if (seen[u]) continue;
      seen[u] = 1;
      t.pot[u] = t.pot[v] + (fwd ? weight[x] : -weight[x]);
      t.parent_arrow[u] = x;
      t.in_tree[x] = 1;
      queue.push_back(u);
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != nv) throw Error(ErrorKind::Disconnected, "quiver is not connected");
  return t;
}

}  // namespace

SmashQuiver smash(const QuadraticPresentation& a, const Weighting& w, int window) {
  auto h = check_homogeneous(a, w);
  if (!h.homogeneous) throw Error(ErrorKind::NotHomogeneous, "relation " + *h.offending + " is not homogeneous");
  const Quiver& q = a.quiver();
  const Group g = w.group;

  SmashQuiver out;
  out.base = a;
  out.weighting = w;
  std::vector<long long> sheets;
  if (g.is_integers()) {
    out.window = window < 0 ? q.num_vertices() : window;
    for (long long s = -out.window; s <= out.window; ++s) sheets.push_back(s);
  } else {
    for (long long s = 0; s < g.k; ++s) sheets.push_back(s);
  }
  auto inside = [&](long long s) { return g.is_integers() ? (s >= -out.window && s <= out.window) : true; };

  std::vector<std::string> vs;
  for (const auto& v : q.vertices())
    for (long long s : sheets) vs.push_back(sheet(v, s));
  std::vector<Arrow> as;
  int dropped_arrows = 0;
  for (const auto& x : q.arrows())
    for (long long s : sheets) {
      long long e = g.normalize(s + w.of(x.id));
      if (!inside(e)) {
        ++dropped_arrows;
        continue;
      }
      as.push_back({sheet(x.id, s), sheet(x.source, s), sheet(x.target, e)});
    }
  Quiver cq(vs, as);

  std::vector<RelationCombo> rels;
  int dropped_relations = 0;
  for (const auto& r : a.relations())
    for (long long s : sheets) {
      RelationCombo c;
      bool ok = true;
      for (const auto& t : r.terms) {
        int x = t.path.arrows[0], y = t.path.arrows[1];
        long long mid = g.normalize(s + w.of(q.arrow(x).id));
        int lx = cq.arrow_index(sheet(q.arrow(x).id, s));
        int ly = inside(mid) ? cq.arrow_index(sheet(q.arrow(y).id, mid)) : -1;
        if (lx < 0 || ly < 0) {
          ok = false;
          break;
        }
        c.terms.push_back({t.coef, make_path(cq, {lx, ly})});
      }
      if (ok) rels.push_back(std::move(c));
      else ++dropped_relations;
    }
  out.covering = QuadraticPresentation(a.name() + "#" + g.to_string(), cq, a.field(), rels);

  if (g.is_integers()) {
    out.boundary_effects = dropped_arrows > 0 || dropped_relations > 0;
    if (out.boundary_effects)
      out.notes.push_back(std::to_string(dropped_arrows) + " arrow lifts and " + std::to_string(dropped_relations) +
                          " relation lifts leave the window [" + std::to_string(-out.window) + ", " +
                          std::to_string(out.window) + "]; only components away from the edge are reliable");
  }

  // components
  const Quiver& c = out.covering.quiver();
  UnionFind uf(c.num_vertices());
  for (int x = 0; x < c.num_arrows(); ++x) uf.join(c.source(x), c.target(x));
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < c.num_vertices(); ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> comps;
  for (auto& [root, members] : groups) comps.push_back(members);
  std::sort(comps.begin(), comps.end());

  // covering vertex / arrow -> base name
  std::map<std::string, std::string> vbase, abase;
  for (const auto& v : q.vertices())
    for (long long s : sheets) vbase[sheet(v, s)] = v;
  for (const auto& x : q.arrows())
    for (long long s : sheets) abase[sheet(x.id, s)] = x.id;

  for (const auto& comp : comps) {
    std::vector<std::string> names;
    for (int v : comp) names.push_back(c.vertex(v));
    out.components.push_back(names);

    std::set<int> members(comp.begin(), comp.end());
    std::vector<Arrow> sub_arrows;
    std::set<std::string> seen_v, seen_a;
    bool bijective = true;
    for (int v : comp) bijective = bijective && seen_v.insert(vbase[c.vertex(v)]).second;
    for (int x = 0; x < c.num_arrows(); ++x)
      if (members.count(c.source(x))) {
        sub_arrows.push_back(c.arrow(x));
        bijective = bijective && seen_a.insert(abase[c.arrow(x).id]).second;
      }
    bijective = bijective && static_cast<int>(seen_v.size()) == q.num_vertices() &&
                static_cast<int>(seen_a.size()) == q.num_arrows();
    if (!bijective) {
      out.component_isomorphic_to_base.push_back(false);
      continue;
    }
    Quiver sq(names, sub_arrows);
    std::vector<RelationCombo> sub_rels;
    for (const auto& r : out.covering.relations()) {
      if (!members.count(r.source())) continue;
      RelationCombo rc;
      for (const auto& t : r.terms) {
        std::vector<int> ar;
        for (int x : t.path.arrows) ar.push_back(sq.arrow_index(c.arrow(x).id));
        rc.terms.push_back({t.coef, make_path(sq, ar)});
      }
      sub_rels.push_back(std::move(rc));
    }
    QuadraticPresentation sub(a.name(), sq, a.field(), sub_rels);
    out.component_isomorphic_to_base.push_back(relabel(sub, vbase, abase) == a);
  }
  return out;
}

int expected_components(const Quiver& q, const Weighting& w) {
  if (w.group.is_integers()) throw Error(ErrorKind::InvalidArgument, "component count formula needs Z/k");
  std::vector<long long> wt;
  for (const auto& x : q.arrows()) wt.push_back(w.of(x.id));
  TreeData t = bfs_tree(q, wt);
  long long gcd = w.group.k;
  for (int x = 0; x < q.num_arrows(); ++x) {
    if (t.in_tree[x]) continue;
    long long c = t.pot[q.source(x)] + wt[x] - t.pot[q.target(x)];
    gcd = std::gcd(gcd, std::llabs(w.group.normalize(c)));
  }
  return static_cast<int>(gcd);
}

GradabilityReport gradable(const Quiver& q) {
  std::vector<long long> ones(q.num_arrows(), 1);
  TreeData t = bfs_tree(q, ones);
  GradabilityReport rep;
  for (int x = 0; x < q.num_arrows(); ++x) {
    if (t.in_tree[x]) continue;
    long long len = t.pot[q.source(x)] + 1 - t.pot[q.target(x)];
    if (len == 0) continue;
    rep.gradable = false;
    rep.signed_length = static_cast<int>(len);
    // fundamental cycle: up from target to the common ancestor, then down to source, then x
    auto chain = [&](int v) {
      std::vector<int> vs{v};
      while (t.parent_arrow[v] >= 0) {
        int a = t.parent_arrow[v];
        v = q.source(a) == v ? q.target(a) : q.source(a);
        vs.push_back(v);
      }
      return vs;
    };
    auto up_t = chain(q.target(x)), up_s = chain(q.source(x));
    std::set<int> on_s(up_s.begin(), up_s.end());
    int lca = *std::find_if(up_t.begin(), up_t.end(), [&](int v) { return on_s.count(v) > 0; });
    auto step = [&](int a, int from) {
      rep.witness_walk.push_back((q.source(a) == from ? "" : "~") + q.arrow(a).id);
    };
    for (int v = q.target(x); v != lca;) {
      int a = t.parent_arrow[v];
      step(a, v);
      v = q.source(a) == v ? q.target(a) : q.source(a);
    }
    std::vector<int> down;
    for (int v = q.source(x); v != lca;) {
      int a = t.parent_arrow[v];
      down.push_back(a);
      v = q.source(a) == v ? q.target(a) : q.source(a);
    }
    int cur = lca;
    for (auto it = down.rbegin(); it != down.rend(); ++it) {
      step(*it, cur);
      cur = q.source(*it) == cur ? q.target(*it) : q.source(*it);
    }
    step(x, q.source(x));
    return rep;
  }
  long long lo = *std::min_element(t.pot.begin(), t.pot.end());
  for (int v = 0; v < q.num_vertices(); ++v) rep.degrees[q.vertex(v)] = static_cast<int>(t.pot[v] - lo);
  return rep;
}

DualSmashReport dual_smash_commutes(const QuadraticPresentation& a, const Weighting& w) {
  if (w.group.is_integers()) throw Error(ErrorKind::InvalidArgument, "dual/smash comparison needs Z/k");
  const Group g = w.group;
  const Quiver& q = a.quiver();
  QuadraticPresentation left = dual(smash(a, w).covering);
  Weighting wop{g, {}};
  for (const auto& x : q.arrows()) wop.weight[op_id(x.id)] = w.of(x.id);
  QuadraticPresentation right = smash(dual(a), wop).covering;

  DualSmashReport rep;
  for (const auto& v : q.vertices())
    for (long long h = 0; h < g.k; ++h) rep.vertex_map[sheet(v, h)] = sheet(v, g.normalize(-h));
  for (const auto& x : q.arrows())
    for (long long h = 0; h < g.k; ++h)
      rep.arrow_map[sheet(op_id(x.id), h)] = op_id(sheet(x.id, g.normalize(-h - w.of(x.id))));
  rep.commutes = relabel(right, rep.vertex_map, rep.arrow_map) == left;
  return rep;
}

}  // namespace koszuldual
