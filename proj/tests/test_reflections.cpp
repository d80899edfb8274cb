#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "koszuldual/errors.hpp"
#include "koszuldual/reflections.hpp"
#include "random_presentations.hpp"

using namespace koszuldual;

namespace {

Quiver path3() { return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}); }

// relabels vertices and arrows through random permutations of fresh names
Quiver scramble(const Quiver& q, std::mt19937& rng) {
  std::vector<int> p(q.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<std::string> vs;
  for (int v = 0; v < q.num_vertices(); ++v) vs.push_back("w" + std::to_string(p[v]));
  std::vector<Arrow> as;
  for (int x = 0; x < q.num_arrows(); ++x)
    as.push_back({"y" + std::to_string(rng() % 1000) + "_" + std::to_string(x), vs[q.source(x)], vs[q.target(x)]});
  return Quiver(vs, as);
}

bool brute_isomorphic(const Quiver& a, const Quiver& b) {
  int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  auto count = [](const Quiver& q) {
    std::vector<std::vector<int>> m(q.num_vertices(), std::vector<int>(q.num_vertices(), 0));
    for (int x = 0; x < q.num_arrows(); ++x) ++m[q.source(x)][q.target(x)];
    return m;
  };
  auto ma = count(a), mb = count(b);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = ma[i][j] == mb[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::set<std::pair<std::string, std::pair<std::string, std::string>>> edges(const Quiver& q) {
  std::set<std::pair<std::string, std::pair<std::string, std::string>>> out;
  for (const auto& x : q.arrows()) out.insert({x.id, std::minmax(x.source, x.target)});
  return out;
}

Quiver random_acyclic(std::mt19937& rng, int max_vertices) {
  testgen::QuiverShape s;
  s.max_vertices = max_vertices;
  s.acyclic = true;
  s.extra_arrows = 2;
  return testgen::random_quiver(rng, s);
}

// all orientations of an undirected edge list
Quiver orient(int n, const std::vector<std::pair<int, int>>& es, unsigned mask) {
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
  std::vector<Arrow> as;
  for (std::size_t e = 0; e < es.size(); ++e) {
    auto [u, v] = es[e];
    if (mask >> e & 1) std::swap(u, v);
    as.push_back({"e" + std::to_string(e), vs[u], vs[v]});
  }
  return Quiver(vs, as);
}

std::vector<std::pair<int, int>> prufer_tree(const std::vector<int>& seq, int n) {
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::vector<std::pair<int, int>> es;
  for (int x : seq)
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) {
        es.push_back({v, x});
        --deg[v];
        --deg[x];
        break;
      }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) {
      if (u < 0) u = v;
      else es.push_back({u, v});
    }
  return es;
}

}  // namespace

TEST_CASE("reflection at a sink and at a source") {
  auto r = reflect(path3(), ReflectionStep{"3", ReflectAt::Sink});
  CHECK(r == Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "3", "2"}}));
  auto s = reflect(r, ReflectionStep{"1", ReflectAt::Source});
  CHECK(s == Quiver({"1", "2", "3"}, {{"a", "2", "1"}, {"b", "3", "2"}}));
  try {
    reflect(path3(), ReflectionStep{"2", ReflectAt::Sink});
    FAIL("expected NotSinkOrSource");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSinkOrSource);
  }
  CHECK_THROWS_AS(reflect(path3(), ReflectionStep{"3", ReflectAt::Source}), Error);
  CHECK_THROWS_AS(reflect(path3(), ReflectionStep{"9", ReflectAt::Sink}), Error);
}

TEST_CASE("step syntax") {
  CHECK(parse_reflection_step("+3") == ReflectionStep{"3", ReflectAt::Sink});
  CHECK(parse_reflection_step("source:v1") == ReflectionStep{"v1", ReflectAt::Source});
  CHECK(to_string(ReflectionStep{"x", ReflectAt::Source}) == "-x");
  CHECK_THROWS_AS(parse_reflection_step("3"), Error);
  CHECK_THROWS_AS(parse_reflection_step("+"), Error);
}

TEST_CASE("reflections are mutually inverse and keep the graph") {
  std::mt19937 rng(51);
  for (int t = 0; t < 100; ++t) {
    auto q = random_acyclic(rng, 8);
    for (int v = 0; v < q.num_vertices(); ++v) {
      if (q.is_sink(v)) {
        auto r = reflect(q, ReflectionStep{q.vertex(v), ReflectAt::Sink});
        CHECK(reflect(r, ReflectionStep{q.vertex(v), ReflectAt::Source}) == q);
        CHECK(edges(r) == edges(q));
        CHECK(!r.has_oriented_cycle());
      }
      if (q.is_source(v)) {
        auto r = reflect(q, ReflectionStep{q.vertex(v), ReflectAt::Source});
        CHECK(reflect(r, ReflectionStep{q.vertex(v), ReflectAt::Sink}) == q);
        CHECK(edges(r) == edges(q));
      }
    }
    // random words
    Quiver cur = q;
    for (int k = 0; k < 10; ++k) {
      std::vector<ReflectionStep> options;
      for (int v = 0; v < cur.num_vertices(); ++v) {
        if (cur.is_sink(v)) options.push_back({cur.vertex(v), ReflectAt::Sink});
        if (cur.is_source(v)) options.push_back({cur.vertex(v), ReflectAt::Source});
      }
      cur = reflect(cur, options[rng() % options.size()]);
    }
    CHECK(edges(cur) == edges(q));
    CHECK(canonical_graph_form(cur) == canonical_graph_form(q));
  }
}

TEST_CASE("canonical forms decide isomorphism") {
  std::mt19937 rng(52);
  for (int t = 0; t < 150; ++t) {
    testgen::QuiverShape s;
    s.max_vertices = 6;
    s.extra_arrows = 3;
    auto a = testgen::random_quiver(rng, s);
    auto b = scramble(a, rng);
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(isomorphic(a, b));
    auto c = testgen::random_quiver(rng, s);
    CHECK(isomorphic(a, c) == brute_isomorphic(a, c));
  }
  // stars and other twin-heavy graphs stay cheap
  std::vector<std::string> vs{"c"};
  std::vector<Arrow> as;
  for (int i = 0; i < 11; ++i) {
    vs.push_back("l" + std::to_string(i));
    as.push_back({"s" + std::to_string(i), i % 2 ? "c" : vs.back(), i % 2 ? vs.back() : "c"});
  }
  Quiver star(vs, as);
  CHECK(canonical_form(star) == canonical_form(scramble(star, rng)));
}

TEST_CASE("orientations of a tree are one class") {
  auto a = path3();
  auto b = Quiver({"1", "2", "3"}, {{"a", "2", "1"}, {"b", "2", "3"}});
  auto r = equivalent_quivers(a, b);
  CHECK(r.verdict == QuiverEquivalence::Equivalent);
  CHECK(isomorphic(reflect(a, r.word), b));

  std::set<std::string> seen;
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> seq(std::max(0, n - 2), 0);
    while (true) {
      auto es = prufer_tree(seq, n);
      auto base = orient(n, es, 0);
      if (seen.insert(canonical_graph_form(base)).second) {
        auto orbit = reflection_orbit(base, kDefaultMaxDepth);
        CHECK(orbit.exhausted);
        std::set<std::string> keys(orbit.keys.begin(), orbit.keys.end());
        for (unsigned mask = 0; mask < (1u << es.size()); ++mask) {
          INFO("n=" << n << " mask=" << mask);
          CHECK(keys.count(canonical_form(orient(n, es, mask))) == 1);
        }
      }
      int i = static_cast<int>(seq.size()) - 1;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
  // 1 + 1 + 1 + 2 + 3 + 6 + 11 unlabeled trees
  CHECK(seen.size() == 25);
}

TEST_CASE("cycle orientations split by arm counts") {
  for (int len = 3; len <= 6; ++len) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < len; ++i) es.push_back({i, (i + 1) % len});
    std::map<std::pair<int, int>, std::vector<Quiver>> by_counts;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      int m = __builtin_popcount(mask), n = len - m;
      if (n == 0 || m == 0) continue;
      by_counts[std::minmax(n, m)].push_back(orient(len, es, mask));
    }
    for (const auto& [counts, qs] : by_counts) {
      auto orbit = reflection_orbit(qs[0], kDefaultMaxDepth);
      CHECK(orbit.exhausted);
      for (const auto& rep : orbit.representatives) {
        auto shape = underlying_shape(rep);
        REQUIRE(shape.unique_cycle);
        CHECK(std::pair<int, int>(std::minmax(shape.unique_cycle->n, shape.unique_cycle->m)) == counts);
      }
      std::set<std::string> keys(orbit.keys.begin(), orbit.keys.end());
      for (const auto& q : qs) CHECK(keys.count(canonical_form(q)) == 1);
    }
  }
}

TEST_CASE("the A~4 graph has two classes") {
  std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  std::vector<Quiver> qs;
  for (unsigned mask = 0; mask < 32; ++mask)
    if (mask != 0 && mask != 31) qs.push_back(orient(5, es, mask));
  REQUIRE(qs.size() == 30);
  std::vector<int> cls(qs.size(), -1);
  int classes = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      if (cls[j] >= 0) continue;
      auto r = equivalent_quivers(qs[i], qs[j]);
      CHECK(r.verdict != QuiverEquivalence::DepthExceeded);
      if (r.verdict == QuiverEquivalence::Equivalent) {
        cls[j] = classes;
        CHECK(isomorphic(reflect(qs[i], r.word), qs[j]));
      }
    }
    ++classes;
  }
  CHECK(classes == 2);
  std::vector<int> sizes(classes, 0);
  for (int c : cls) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{10, 20});

  // C(3,2) against C(4,1)
  auto c32 = orient(5, es, 0b00011), c41 = orient(5, es, 0b00001);
  auto r = equivalent_quivers(c32, c41);
  CHECK(r.verdict == QuiverEquivalence::NotEquivalent);
  CHECK(r.certificate.find("exhausted") != std::string::npos);
}

TEST_CASE("different graphs and bad input") {
  Quiver a4({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}});
  Quiver d4({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "3", "2"}, {"c", "4", "2"}});
  auto r = equivalent_quivers(a4, d4);
  CHECK(r.verdict == QuiverEquivalence::NotEquivalent);
  CHECK(r.certificate.find("graph") != std::string::npos);
  CHECK(r.orbit_size == 0);

  Quiver tri({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
  try {
    equivalent_quivers(tri, tri);
    FAIL("expected HasOrientedCycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HasOrientedCycle);
  }

  // zero depth only sees the start quiver
  Quiver a4b({"1", "2", "3", "4"}, {{"a", "2", "1"}, {"b", "2", "3"}, {"c", "3", "4"}});
  auto d = equivalent_quivers(a4, a4b, 0);
  CHECK(d.verdict == QuiverEquivalence::DepthExceeded);
  CHECK(equivalent_quivers(a4, a4, 0).verdict == QuiverEquivalence::Equivalent);
}

TEST_CASE("parallel and serial orbits agree") {
  std::mt19937 rng(53);
  for (int t = 0; t < 40; ++t) {
    auto q = random_acyclic(rng, 7);
    auto a = reflection_orbit(q, kDefaultMaxDepth, true);
    auto b = reflection_orbit(q, kDefaultMaxDepth, false);
    CHECK(a.keys == b.keys);
    CHECK(a.words == b.words);
    CHECK(a.exhausted == b.exhausted);
    for (std::size_t i = 0; i < a.words.size(); ++i) CHECK(canonical_form(reflect(q, a.words[i])) == a.keys[i]);
  }
}
