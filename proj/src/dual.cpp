#include "koszuldual/dual.hpp"

#include <algorithm>
#include <deque>

#include "koszuldual/errors.hpp"
#include "koszuldual/graded.hpp"

namespace koszuldual {

DualResult dual_with_reversal(const QuadraticPresentation& a) {
  const Quiver& q = a.quiver();
  const Field f = a.field();
  Quiver qo = q.opposite();
  auto op_arrow = [&](int x) { return qo.arrow_index(op_id(q.arrow(x).id)); };

  // whole degree-2 space, graded by block
  std::vector<Path> paths;
  std::vector<int> grade;
  std::vector<Vec> rel_rows;
  auto blocks = a.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto [s, t] = blocks[b];
    auto bp = a.block_paths(s, t);
    const std::size_t offset = paths.size();
    paths.insert(paths.end(), bp.begin(), bp.end());
    grade.insert(grade.end(), bp.size(), static_cast<int>(b));
    ExactMatrix w = a.block_relations(s, t);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      Vec v(offset, Scalar::zero(f));
      for (std::size_t c = 0; c < w.cols(); ++c) v.push_back(w.at(r, c));
      rel_rows.push_back(std::move(v));
    }
  }
  for (auto& v : rel_rows) v.resize(paths.size(), Scalar::zero(f));
  ExactMatrix perp = orthogonal_complement_graded(ExactMatrix::from_rows(f, paths.size(), rel_rows), grade);

  DualResult out;
  std::vector<Path> rev;
  for (const auto& p : paths) {
    Path r = make_path(qo, {op_arrow(p.arrows[1]), op_arrow(p.arrows[0])});
    out.reversal.emplace_back(p, r);
    rev.push_back(r);
  }
  std::vector<RelationCombo> rels;
  for (std::size_t r = 0; r < perp.rows(); ++r) {
    RelationCombo c;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (!perp.at(r, i).is_zero()) c.terms.push_back({perp.at(r, i), rev[i]});
    rels.push_back(std::move(c));
  }
  out.presentation = QuadraticPresentation(op_id(a.name()), qo, f, rels);
  return out;
}

QuadraticPresentation dual(const QuadraticPresentation& a) { return dual_with_reversal(a).presentation; }

DoubleDualReport double_dual_isomorphic(const QuadraticPresentation& a) {
  DoubleDualReport rep;
  QuadraticPresentation dd = dual(dual(a));
  const Quiver& q = a.quiver();
  for (const auto& v : q.vertices()) rep.vertex_map[v] = v;
  for (const auto& x : q.arrows()) rep.arrow_map[x.id] = op_id(op_id(x.id));
  // dd's arrow names come back through op_id twice; map them onto A and compare
  std::map<std::string, std::string> back;
  for (const auto& [k, v] : rep.arrow_map) back[v] = k;
  rep.isomorphic = relabel(dd, {}, back) == a;
  return rep;
}

const char* to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "finite";
    case Finiteness::Infinite: return "infinite";
    case Finiteness::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

FinitenessReport monomial_finiteness(const QuadraticPresentation& a) {
  const Quiver& q = a.quiver();
  const int n = q.num_arrows();
  std::vector<std::vector<int>> next(n);
  for (int x = 0; x < n; ++x)
    for (int y : q.out_arrows(q.target(x)))
      if (!a.in_ideal(x, y)) next[x].push_back(y);

  FinitenessReport rep;
  // shortest cycle through each arrow by BFS; keep the first shortest
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> parent(n, -2);
    std::deque<int> queue;
    for (int y : next[s])
      if (parent[y] == -2) {
        parent[y] = s;
        queue.push_back(y);
      }
    bool found = false;
    while (!queue.empty() && !found) {
      int x = queue.front();
      queue.pop_front();
      if (x == s) {
        found = true;
        break;
      }
      for (int y : next[x])
        if (parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (!found) continue;
    std::vector<int> cyc{s};
    for (int x = parent[s]; x != s; x = parent[x]) cyc.push_back(x);
    // cyc is s, then predecessors back to s; reverse the tail into path order
    std::reverse(cyc.begin() + 1, cyc.end());
    if (best.empty() || cyc.size() < best.size()) best = cyc;
  }
  if (!best.empty()) {
    rep.verdict = Finiteness::Infinite;
    for (int x : best) rep.witness_cycle.push_back(q.arrow(x).id);
    return rep;
  }

  // acyclic arrow graph: count nonzero paths degree by degree
  rep.verdict = Finiteness::Finite;
  rep.dims.push_back(q.num_vertices());
  std::vector<long long> walks(n, 1);  // nonzero paths ending with arrow x
  while (true) {
    long long total = 0;
    for (long long w : walks) total += w;
    if (total == 0) break;
    rep.dims.push_back(static_cast<int>(total));
    std::vector<long long> nw(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y : next[x]) nw[y] += walks[x];
    walks = std::move(nw);
  }
  return rep;
}

}  // namespace

FinitenessReport is_finite_dimensional(const QuadraticPresentation& a, std::optional<int> cutoff) {
  if (a.is_monomial()) return monomial_finiteness(a);
  FinitenessReport rep;
  rep.cutoff = cutoff.value_or(std::max(2, 2 * a.quiver().num_vertices()));
  try {
    GradedTable table(a, rep.cutoff);
    rep.dims = table.dims();
    if (!table.truncated()) {
      rep.verdict = Finiteness::Finite;
      rep.dims.resize(table.top_degree() + 1);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfScope) throw;
  }
  return rep;
}

}  // namespace koszuldual
