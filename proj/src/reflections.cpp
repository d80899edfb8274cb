#include "koszuldual/reflections.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_set>

#include "koszuldual/errors.hpp"

namespace koszuldual {

std::string to_string(const ReflectionStep& s) { return (s.at == ReflectAt::Sink ? "+" : "-") + s.vertex; }

ReflectionStep parse_reflection_step(const std::string& s) {
  auto make = [&](ReflectAt at, std::string v) {
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "reflection step '" + s + "' names no vertex");
    return ReflectionStep{std::move(v), at};
  };
  if (s.rfind("sink:", 0) == 0) return make(ReflectAt::Sink, s.substr(5));
  if (s.rfind("source:", 0) == 0) return make(ReflectAt::Source, s.substr(7));
  if (!s.empty() && s[0] == '+') return make(ReflectAt::Sink, s.substr(1));
  if (!s.empty() && s[0] == '-') return make(ReflectAt::Source, s.substr(1));
  throw Error(ErrorKind::InvalidArgument, "reflection step must look like +v, -v, sink:v or source:v, got '" + s + "'");
}

Quiver reflect(const Quiver& q, const ReflectionStep& step) {
  int v = q.vertex_index(step.vertex);
  if (v < 0) throw Error(ErrorKind::InvalidArgument, "no vertex named '" + step.vertex + "'");
  if (step.at == ReflectAt::Sink && !q.is_sink(v))
    throw Error(ErrorKind::NotSinkOrSource, "vertex " + step.vertex + " is not a sink");
  if (step.at == ReflectAt::Source && !q.is_source(v))
    throw Error(ErrorKind::NotSinkOrSource, "vertex " + step.vertex + " is not a source");
  std::vector<Arrow> as = q.arrows();
  for (auto& x : as)
    if (x.source == step.vertex || x.target == step.vertex) std::swap(x.source, x.target);
  return Quiver(q.vertices(), as);
}

Quiver reflect(const Quiver& q, const std::vector<ReflectionStep>& word) {
  Quiver cur = q;
  for (const auto& s : word) cur = reflect(cur, s);
  return cur;
}

namespace {

using Counts = std::vector<std::vector<int>>;

Counts arrow_counts(const Quiver& q, bool undirected) {
  Counts m(q.num_vertices(), std::vector<int>(q.num_vertices(), 0));
  for (int x = 0; x < q.num_arrows(); ++x) {
    ++m[q.source(x)][q.target(x)];
    if (undirected) ++m[q.target(x)][q.source(x)];
  }
  return m;
}

// equitable refinement; colors are renumbered by sorted signature so the result is label-free
std::vector<int> refine(const Counts& m, std::vector<int> color) {
  const int n = static_cast<int>(m.size());
  int classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
  while (true) {
    using Sig = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      auto& [c, out, in] = sig[v];
      c = color[v];
      for (int w = 0; w < n; ++w) {
        if (m[v][w]) out.push_back({color[w], m[v][w]});
        if (m[w][v]) in.push_back({color[w], m[w][v]});
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
    }
    std::vector<Sig> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (static_cast<int>(uniq.size()) == classes) return color;
    classes = static_cast<int>(uniq.size());
  }
}

bool twins(const Counts& m, int u, int v) {
  if (m[u][u] != m[v][v] || m[u][v] != m[v][u]) return false;
  for (int w = 0; w < static_cast<int>(m.size()); ++w) {
    if (w == u || w == v) continue;
    if (m[u][w] != m[v][w] || m[w][u] != m[w][v]) return false;
  }
  return true;
}

std::string encode(const Counts& m, const std::vector<int>& order) {
  std::string s = std::to_string(order.size()) + ":";
  for (int i : order) {
    for (int j : order) s += std::to_string(m[i][j]) + ",";
    s += ";";
  }
  return s;
}

void search(const Counts& m, std::vector<int> color, std::string& best, std::vector<int>& best_order) {
  const int n = static_cast<int>(m.size());
  color = refine(m, color);
  std::vector<std::vector<int>> cells(n);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[color[v]] = v;
    std::string s = encode(m, order);
    if (best.empty() || s < best) {
      best = s;
      best_order = order;
    }
    return;
  }
  std::vector<int> tried;
  for (int v : *target) {
    // swapping twins is an automorphism of the colored graph: one of them is enough
    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(m, u, v); })) continue;
    tried.push_back(v);
    std::vector<int> next(n);
    for (int w = 0; w < n; ++w) next[w] = 2 * color[w] + (color[w] == color[v] && w != v ? 1 : 0);
    search(m, next, best, best_order);
  }
}

std::pair<std::string, std::vector<int>> canonical(const Counts& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> color(n, 0);
  std::string best;
  std::vector<int> order;
  search(m, color, best, order);
  if (n == 0) best = "0:";
  return {best, order};
}

}  // namespace

std::string canonical_form(const Quiver& q) { return canonical(arrow_counts(q, false)).first; }
std::string canonical_graph_form(const Quiver& q) { return canonical(arrow_counts(q, true)).first; }
std::vector<int> canonical_order(const Quiver& q) { return canonical(arrow_counts(q, false)).second; }
bool isomorphic(const Quiver& a, const Quiver& b) {
  return a.num_vertices() == b.num_vertices() && a.num_arrows() == b.num_arrows() &&
         canonical_form(a) == canonical_form(b);
}

namespace {

struct Successor {
  std::string key;
  Quiver q;
  ReflectionStep step;
};

std::vector<Successor> successors(const Quiver& q) {
  std::vector<Successor> out;
  for (int v = 0; v < q.num_vertices(); ++v)
    for (ReflectAt at : {ReflectAt::Sink, ReflectAt::Source}) {
      if (at == ReflectAt::Sink ? !q.is_sink(v) : !q.is_source(v)) continue;
      ReflectionStep s{q.vertex(v), at};
      Quiver r = reflect(q, s);
      out.push_back({canonical_form(r), std::move(r), s});
    }
  return out;
}

// BFS over isomorphism classes; stops early once `target` shows up
ReflectionOrbit bfs(const Quiver& q, int max_depth, bool parallel, const std::optional<std::string>& target) {
  if (q.has_oriented_cycle()) throw Error(ErrorKind::HasOrientedCycle, "quiver has an oriented cycle");
  ReflectionOrbit orbit;
  std::unordered_set<std::string> seen;
  auto add = [&](std::string key, Quiver r, std::vector<ReflectionStep> word) {
    seen.insert(key);
    orbit.keys.push_back(std::move(key));
    orbit.representatives.push_back(std::move(r));
    orbit.words.push_back(std::move(word));
  };
  add(canonical_form(q), q, {});
  if (target && orbit.keys[0] == *target) return orbit;

  std::size_t begin = 0, end = 1;
  int level = 0;
  while (true) {
    const int width = static_cast<int>(end - begin);
    std::vector<std::vector<Successor>> found(width);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel && width > 1)
    for (int i = 0; i < width; ++i) {
      try {
        found[i] = successors(orbit.representatives[begin + i]);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    // merge serially in frontier order so both paths give the same orbit
    std::vector<std::pair<std::size_t, Successor*>> fresh;
    std::unordered_set<std::string> pending;
    for (int i = 0; i < width; ++i)
      for (auto& s : found[i])
        if (!seen.count(s.key) && pending.insert(s.key).second) fresh.push_back({begin + i, &s});
    if (fresh.empty()) {
      orbit.exhausted = true;
      break;
    }
    if (level == max_depth) break;
    for (auto& [parent, s] : fresh) {
      auto word = orbit.words[parent];
      word.push_back(s->step);
      add(s->key, std::move(s->q), std::move(word));
    }
    ++level;
    begin = end;
    end = orbit.keys.size();
    if (target && seen.count(*target)) break;
  }
  orbit.depth = level;
  return orbit;
}

}  // namespace

ReflectionOrbit reflection_orbit(const Quiver& q, int max_depth, bool parallel) {
  return bfs(q, max_depth, parallel, std::nullopt);
}

std::string to_string(QuiverEquivalence v) {
  switch (v) {
    case QuiverEquivalence::Equivalent: return "equivalent";
    case QuiverEquivalence::NotEquivalent: return "not-equivalent";
    case QuiverEquivalence::DepthExceeded: return "depth-exceeded";
  }
  return "?";
}

QuiverEquivalenceReport equivalent_quivers(const Quiver& q, const Quiver& q2, int max_depth, bool parallel) {
  if (q.has_oriented_cycle() || q2.has_oriented_cycle())
    throw Error(ErrorKind::HasOrientedCycle, "reflections need acyclic quivers");
  QuiverEquivalenceReport rep;
  rep.max_depth = max_depth;
  if (q.num_vertices() != q2.num_vertices() || q.num_arrows() != q2.num_arrows() ||
      canonical_graph_form(q) != canonical_graph_form(q2)) {
    rep.verdict = QuiverEquivalence::NotEquivalent;
    rep.certificate = "underlying graphs differ";
    return rep;
  }
  const std::string key = canonical_form(q2);
  ReflectionOrbit orbit = bfs(q, max_depth, parallel, key);
  rep.orbit_size = static_cast<int>(orbit.keys.size());
  rep.depth = orbit.depth;
  auto it = std::find(orbit.keys.begin(), orbit.keys.end(), key);
  if (it != orbit.keys.end()) {
    rep.verdict = QuiverEquivalence::Equivalent;
    rep.word = orbit.words[it - orbit.keys.begin()];
    rep.certificate = "isomorphic after " + std::to_string(rep.word.size()) + " reflections";
  } else if (orbit.exhausted) {
    rep.verdict = QuiverEquivalence::NotEquivalent;
    rep.certificate = "orbit exhausted: " + std::to_string(rep.orbit_size) +
                      " isomorphism classes, none isomorphic to the target";
  } else {
    rep.verdict = QuiverEquivalence::DepthExceeded;
    rep.certificate = "no match within depth " + std::to_string(max_depth) + "; orbit not exhausted";
  }
  return rep;
}

}  // namespace koszuldual
