#include "koszuldual/homotopy.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "koszuldual/errors.hpp"

namespace koszuldual {

Word free_reduce(Word w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i].gen == w[j - 1].gen && w[i].exp == -w[j - 1].exp) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

std::string word_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += names[l.gen];
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
  const std::size_t R = m.size(), C = R ? m[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block goes to (t, t)
      std::size_t bi = R, bj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (m[i][j] != 0 && (bi == R || abs(m[i][j]) < abs(m[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == R) return diag;
      std::swap(m[t], m[bi]);
      for (auto& row : m) std::swap(row[t], row[bj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest, else fold the offending row in and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

AbelianGroup abelianization(int generators, const std::vector<Word>& relators) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : relators) {
    std::vector<mpz_class> row(generators, 0);
    for (const auto& l : r) row[l.gen] += l.exp;
    m.push_back(std::move(row));
  }
  AbelianGroup g;
  auto diag = m.empty() || generators == 0 ? std::vector<mpz_class>{} : smith_diagonal(m);
  g.free_rank = generators - static_cast<int>(diag.size());
  for (const auto& d : diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

TietzeResult tietze_eliminate(int generators, std::vector<Word> relators, const std::vector<std::string>& names,
                              int max_rest) {
  TietzeResult res;
  std::vector<char> alive(generators, 1);
  for (auto& r : relators) r = cyclic_reduce(std::move(r));
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t ri = 0; ri < relators.size() && !progress; ++ri) {
      const Word& r = relators[ri];
      if (static_cast<int>(r.size()) - 1 > max_rest) continue;
      std::map<int, int> count;
      for (const auto& l : r) ++count[l.gen];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const int g = r[pos].gen;
        if (count[g] != 1) continue;
        // u g^e v = 1
        Word u(r.begin(), r.begin() + pos), v(r.begin() + pos + 1, r.end());
        Word value;
        if (r[pos].exp > 0) {
          value = inverse(v);
          Word iu = inverse(u);
          value.insert(value.begin(), iu.begin(), iu.end());
        } else {
          value = v;
          value.insert(value.end(), u.begin(), u.end());
        }
        value = free_reduce(std::move(value));
        res.steps.push_back(names[g] + " = " + word_string(value, names));
        alive[g] = 0;
        std::vector<Word> next;
        for (std::size_t k = 0; k < relators.size(); ++k) {
          if (k == ri) continue;
          Word w;
          for (const auto& l : relators[k]) {
            if (l.gen != g) {
              w.push_back(l);
              continue;
            }
            Word rep = l.exp > 0 ? value : inverse(value);
            w.insert(w.end(), rep.begin(), rep.end());
          }
          w = cyclic_reduce(std::move(w));
          if (!w.empty()) next.push_back(std::move(w));
        }
        relators = std::move(next);
        progress = true;
        break;
      }
    }
  }
  res.remaining_generators = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
  res.remaining_relators = relators;
  return res;
}

const char* to_string(Pi1Verdict v) {
  switch (v) {
    case Pi1Verdict::Trivial: return "trivial";
    case Pi1Verdict::NonTrivial: return "nontrivial";
    case Pi1Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(Connectivity c) {
  switch (c) {
    case Connectivity::Yes: return "yes";
    case Connectivity::No: return "no";
    case Connectivity::Unknown: return "unknown";
  }
  return "unknown";
}

std::string Pi1Report::word_to_string(const Word& w) const { return word_string(w, generators); }

std::vector<std::vector<Path>> minimal_relation_supports(const QuadraticPresentation& a, int s, int t) {
  auto paths = a.block_paths(s, t);
  ExactMatrix w = a.block_relations(s, t);
  const std::size_t n = paths.size();
  std::vector<std::vector<Path>> out;
  if (w.rows() == 0) return out;
  if (n > 16) throw Error(ErrorKind::OutOfScope, "block with more than 16 parallel paths");
  const Field f = a.field();
  const std::size_t rw = w.rows();
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  std::vector<unsigned> circuits;
  for (unsigned m : masks) {
    bool contains = false;
    for (unsigned c : circuits) contains = contains || (c & m) == c;
    if (contains) continue;
    // dim (I cap k^S) = rank W + |S| - rank [W; e_S]
    std::vector<Vec> rows = w.row_list();
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1u) {
        Vec e(n, Scalar::zero(f));
        e[i] = Scalar::one(f);
        rows.push_back(std::move(e));
      }
    std::size_t r = rank(ExactMatrix::from_rows(f, n, rows));
    if (rw + std::popcount(m) > r) circuits.push_back(m);
  }
  for (unsigned c : circuits) {
    std::vector<Path> sup;
    for (std::size_t i = 0; i < n; ++i)
      if (c >> i & 1u) sup.push_back(paths[i]);
    out.push_back(std::move(sup));
  }
  return out;
}

Pi1Report pi1(const QuadraticPresentation& a, std::optional<std::vector<int>> tree_arrows) {
  const Quiver& q = a.quiver();
  if (!q.is_connected()) throw Error(ErrorKind::Disconnected, "quiver is not connected");
  if (q.has_oriented_cycle()) throw Error(ErrorKind::NotTriangular, "quiver has an oriented cycle");
  const int nv = q.num_vertices(), na = q.num_arrows();

  std::vector<char> in_tree(na, 0);
  if (tree_arrows) {
    if (static_cast<int>(tree_arrows->size()) != nv - 1)
      throw Error(ErrorKind::InvalidArgument, "spanning tree needs #vertices - 1 arrows");
    for (int x : *tree_arrows) {
      if (x < 0 || x >= na) throw Error(ErrorKind::InvalidArgument, "no such arrow");
      in_tree[x] = 1;
    }
  } else {
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
        int w = q.source(x) == v ? q.target(x) : q.source(x);
        if (seen[w]) continue;
        seen[w] = 1;
        in_tree[x] = 1;
        queue.push_back(w);
      }
    }
  }

  // walk from vertex 0 to every vertex inside the tree; (arrow, forward)
  std::vector<std::vector<std::pair<int, bool>>> route(nv);
  std::vector<char> seen(nv, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int x = 0; x < na; ++x) {
      if (!in_tree[x]) continue;
      int w;
      bool fwd;
      if (q.source(x) == v) {
        w = q.target(x);
        fwd = true;
      } else if (q.target(x) == v) {
        w = q.source(x);
        fwd = false;
      } else {
        continue;
      }
      if (seen[w]) continue;
      seen[w] = 1;
      route[w] = route[v];
      route[w].push_back({x, fwd});
      queue.push_back(w);
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != nv)
    throw Error(ErrorKind::InvalidArgument, "given arrows do not span the quiver");

  Pi1Report rep;
  std::vector<int> gen_of(na, -1);
  for (int x = 0; x < na; ++x) {
    if (in_tree[x]) {
      rep.spanning_tree.push_back(q.arrow(x).id);
      continue;
    }
    gen_of[x] = static_cast<int>(rep.generators.size());
    rep.generators.push_back(q.arrow(x).id);
    std::string walk;
    auto step = [&](int y, bool fwd) {
      if (!walk.empty()) walk += " ";
      walk += (fwd ? "" : "~") + q.arrow(y).id;
    };
    for (auto [y, fwd] : route[q.source(x)]) step(y, fwd);
    step(x, true);
    const auto& back = route[q.target(x)];
    for (auto it = back.rbegin(); it != back.rend(); ++it) step(it->first, !it->second);
    rep.generator_walks.push_back(walk);
  }

  auto word_of = [&](const Path& p) {
    Word w;
    for (int x : p.arrows)
      if (gen_of[x] >= 0) w.push_back({gen_of[x], 1});
    return w;
  };
  for (auto [s, t] : a.blocks()) {
    for (const auto& sup : minimal_relation_supports(a, s, t)) {
      for (std::size_t i = 1; i < sup.size(); ++i) {
        Word w = word_of(sup[0]);
        Word v = inverse(word_of(sup[i]));
        w.insert(w.end(), v.begin(), v.end());
        w = free_reduce(std::move(w));
        if (w.empty()) continue;
        rep.relators.push_back(w);
        rep.relator_sources.push_back(path_to_string(q, sup[0]) + " ~ " + path_to_string(q, sup[i]));
      }
    }
  }

  const int ng = static_cast<int>(rep.generators.size());
  rep.abelianization = abelianization(ng, rep.relators);
  if (ng == 0) {
    rep.verdict = Pi1Verdict::Trivial;
    rep.certificate.push_back("no generators");
    return rep;
  }
  auto t = tietze_eliminate(ng, rep.relators, rep.generators);
  if (t.remaining_generators == 0) {
    rep.verdict = Pi1Verdict::Trivial;
    rep.certificate = t.steps;
  } else if (!rep.abelianization.trivial()) {
    rep.verdict = Pi1Verdict::NonTrivial;
    rep.witness = "abelianization " + rep.abelianization.to_string();
  }
  return rep;
}

SimplyConnectedReport simply_connected(const QuadraticPresentation& a) {
  SimplyConnectedReport rep;
  rep.pi1 = pi1(a);
  switch (rep.pi1.verdict) {
    case Pi1Verdict::Trivial:
      rep.verdict = Connectivity::Yes;
      if (!underlying_shape(a.quiver()).is_tree && !a.is_monomial())
        rep.caveats.push_back("constricted: presentation-independent");
      break;
    case Pi1Verdict::NonTrivial:
      rep.verdict = Connectivity::No;
      rep.witness = rep.pi1.witness;
      break;
    case Pi1Verdict::Unknown:
      break;
  }
  return rep;
}

}  // namespace koszuldual
