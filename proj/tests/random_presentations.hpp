// Random inputs shared by the property tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "koszuldual/presentation.hpp"

namespace testgen {

using namespace koszuldual;

struct QuiverShape {
  int max_vertices = 8;
  int extra_arrows = 3;     // beyond a spanning tree
  bool acyclic = false;     // arrows only go from lower to higher index
  bool connected = true;
};

inline Quiver random_quiver(std::mt19937& rng, const QuiverShape& s) {
  int n = 1 + static_cast<int>(rng() % s.max_vertices);
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Arrow> as;
  int k = 0;
  auto add = [&](int x, int y) {
    if (s.acyclic && x > y) std::swap(x, y);
    if (s.acyclic && x == y) return;
    as.push_back({"x" + std::to_string(k++), vs[x], vs[y]});
  };
  for (int i = 1; i < n; ++i) {
    int j = static_cast<int>(rng() % i);
    if (rng() % 2) add(j, i); else add(i, j);
  }
  int extra = s.extra_arrows > 0 ? static_cast<int>(rng() % (s.extra_arrows + 1)) : 0;
  for (int e = 0; e < extra && n > 1; ++e) add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
  return Quiver(vs, as);
}

inline Scalar random_nonzero(std::mt19937& rng, Field f) {
  while (true) {
    long long num = static_cast<long long>(rng() % 9) - 4;
    long long den = 1 + static_cast<long long>(rng() % 3);
    if (num == 0) continue;
    if (f.p != 0 && den % f.p == 0) continue;
    Scalar s = Scalar::from_fraction(f, mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    if (!s.is_zero()) return s;
  }
}

/// Relations are random monomials or two-term combinations, block by block.
inline QuadraticPresentation random_presentation(std::mt19937& rng, Field f, int max_vertices,
                                                 double binomial_share, bool acyclic = false) {
  QuiverShape shape;
  shape.max_vertices = max_vertices;
  shape.acyclic = acyclic;
  Quiver q = random_quiver(rng, shape);
  QuadraticPresentation bare("random", q, f, {});
  std::vector<RelationCombo> rels;
  std::uniform_real_distribution<double> u(0, 1);
  for (auto [s, t] : bare.blocks()) {
    auto paths = bare.block_paths(s, t);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (u(rng) > 0.45) continue;
      RelationCombo c;
      c.terms.push_back({random_nonzero(rng, f), paths[i]});
      if (paths.size() > 1 && u(rng) < binomial_share) {
        std::size_t j = rng() % paths.size();
        if (j != i) c.terms.push_back({random_nonzero(rng, f), paths[j]});
      }
      rels.push_back(std::move(c));
    }
  }
  return QuadraticPresentation("random", q, f, rels);
}

/// Zero relations chosen so that every arrow has at most one zero and at most
/// one free continuation on each side (needs valences at most 2).
inline std::vector<RelationCombo> gentle_relations(std::mt19937& rng, const Quiver& q) {
  Field f = Field::rationals();
  std::vector<RelationCombo> rels;
  for (int v = 0; v < q.num_vertices(); ++v) {
    const auto& in = q.in_arrows(v);
    const auto& out = q.out_arrows(v);
    if (in.empty() || out.empty()) continue;
    auto rel = [&](int a, int b) {
      rels.push_back(RelationCombo{{Term{Scalar::one(f), make_path(q, {a, b})}}});
    };
    if (in.size() == 1 && out.size() == 1) {
      if (rng() % 2) rel(in[0], out[0]);
    } else if (in.size() == 2 && out.size() == 1) {
      rel(in[rng() % 2], out[0]);
    } else if (in.size() == 1 && out.size() == 2) {
      rel(in[0], out[rng() % 2]);
    } else {
      // 2 in, 2 out: a perfect matching of zero relations, the rest free
      bool swap = rng() % 2;
      rel(in[0], out[swap ? 1 : 0]);
      rel(in[1], out[swap ? 0 : 1]);
    }
  }
  return rels;
}

/// Random monomial quadratic algebra; when gentle is set the relation choice
/// respects the continuation rules and valences stay at most 2.
inline QuadraticPresentation random_monomial(std::mt19937& rng, int max_vertices, bool gentle,
                                             bool acyclic = true) {
  Field f = Field::rationals();
  QuiverShape shape;
  shape.max_vertices = max_vertices;
  shape.acyclic = acyclic;
  shape.extra_arrows = 2;
  Quiver q;
  for (int tries = 0;; ++tries) {
    q = random_quiver(rng, shape);
    if (!gentle) break;
    bool ok = true;
    for (int v = 0; v < q.num_vertices(); ++v)
      ok = ok && q.in_arrows(v).size() <= 2 && q.out_arrows(v).size() <= 2;
    if (ok) break;
  }
  QuadraticPresentation bare("random", q, f, {});
  std::vector<RelationCombo> rels;
  if (!gentle) {
    for (auto [s, t] : bare.blocks())
      for (const auto& p : bare.block_paths(s, t))
        if (rng() % 2) rels.push_back(RelationCombo{{Term{Scalar::one(f), p}}});
    return QuadraticPresentation("random", q, f, rels);
  }
  return QuadraticPresentation("random", q, f, gentle_relations(rng, q));
}

/// Gentle algebra on a connected quiver with exactly one cycle, never oriented.
inline QuadraticPresentation random_gentle_one_cycle(std::mt19937& rng, int max_vertices) {
  while (true) {
    int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Arrow> as;
    auto add = [&](int x, int y) {
      if (rng() % 2) std::swap(x, y);
      as.push_back({"x" + std::to_string(as.size()), vs[x], vs[y]});
    };
    for (int i = 1; i < n; ++i) add(static_cast<int>(rng() % i), i);
    int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n);
    if (x == y) continue;
    add(x, y);
    Quiver q(vs, as);
    if (q.has_oriented_cycle()) continue;
    bool ok = true;
    for (int v = 0; v < q.num_vertices(); ++v)
      ok = ok && q.in_arrows(v).size() <= 2 && q.out_arrows(v).size() <= 2;
    if (!ok) continue;
    return QuadraticPresentation("random", q, Field::rationals(), gentle_relations(rng, q));
  }
}

}  // namespace testgen
