#include "koszuldual/resolution.hpp"

#include <algorithm>
#include <exception>

#include "koszuldual/errors.hpp"

namespace koszuldual {

int SimpleResolution::betti(int s, int d, int j) const {
  if (s < 0 || s >= static_cast<int>(steps.size())) return 0;
  int n = 0;
  for (const auto& g : steps[s].generators) n += (g.degree == d && g.vertex == j);
  return n;
}

int SimpleResolution::max_generator_degree(int s) const {
  if (s < 0 || s >= static_cast<int>(steps.size())) return -1;
  int m = -1;
  for (const auto& g : steps[s].generators) m = std::max(m, g.degree);
  return m;
}

bool SimpleResolution::complete() const {
  return std::all_of(certified.begin(), certified.end(), [](bool b) { return b; });
}

std::vector<int> component_layout(const GradedTable& table, const std::vector<Generator>& gens, int d, int j) {
  std::vector<int> off{0};
  for (const auto& g : gens) {
    int n = g.degree <= d ? table.dim(d - g.degree, g.vertex, j) : 0;
    off.push_back(off.back() + n);
  }
  return off;
}

namespace {

// Row echelon form grown one vector at a time.
class Echelon {
 public:
  explicit Echelon(Field f) : f_(f) {}
  // true when v was independent of what is already there
  bool add(Vec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!rows_[r][k].is_zero()) v[k] -= c * rows_[r][k];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  Field f_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

using Graded = std::vector<std::vector<std::vector<Vec>>>;  // [d][j] -> vectors

struct Module {
  const GradedTable* table;
  std::vector<Generator> gens;
  std::vector<std::vector<std::vector<int>>> layout;  // [d][j] -> offsets

  Module(const GradedTable& t, std::vector<Generator> g) : table(&t), gens(std::move(g)) {
    const int D = t.cutoff(), nv = t.algebra().quiver().num_vertices();
    layout.assign(D + 1, std::vector<std::vector<int>>(nv));
    for (int d = 0; d <= D; ++d)
      for (int j = 0; j < nv; ++j) layout[d][j] = component_layout(t, gens, d, j);
  }
  int dim(int d, int j) const { return layout[d][j].back(); }

  // x in the (d, j) component times an arrow starting at j
  Vec times_arrow(int d, int j, const Vec& x, int arrow) const {
    const int j2 = table->algebra().quiver().target(arrow);
    const auto& from = layout[d][j];
    const auto& to = layout[d + 1][j2];
    Vec out(to.back(), Scalar::zero(table->field()));
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].degree > d || from[k] == from[k + 1]) continue;
      bool zero = true;
      for (int c = from[k]; c < from[k + 1] && zero; ++c) zero = x[c].is_zero();
      if (zero) continue;
      Vec seg(x.begin() + from[k], x.begin() + from[k + 1]);
      Vec y = table->times_arrow(d - gens[k].degree, gens[k].vertex, j, seg, arrow);
      std::copy(y.begin(), y.end(), out.begin() + to[k]);
    }
    return out;
  }
};

}  // namespace

SimpleResolution resolve_simple(const GradedTable& table, int simple, int cutoff) {
  const Quiver& q = table.algebra().quiver();
  const Field f = table.field();
  const int D = table.cutoff(), nv = q.num_vertices();
  const int top = table.top_degree();
  if (simple < 0 || simple >= nv) throw Error(ErrorKind::InvalidArgument, "no such vertex");

  SimpleResolution res;
  res.simple = simple;
  res.degree_bound = D;

  auto dims_of = [&](const Module& m) {
    std::vector<std::vector<int>> out(D + 1, std::vector<int>(nv));
    for (int d = 0; d <= D; ++d)
      for (int j = 0; j < nv; ++j) out[d][j] = m.dim(d, j);
    return out;
  };
  auto certify = [&](const std::vector<Generator>& gens) {
    if (top < 0) return false;
    for (const auto& g : gens)
      if (g.degree + top > D) return false;
    return true;
  };

  Module cur(table, {{simple, 0}});
  res.steps.push_back({cur.gens, {}});
  res.module_dims.push_back(dims_of(cur));
  res.certified.push_back(certify(cur.gens));

  // kernel of P^0 -> S: everything in positive degree
  Graded ker(D + 1, std::vector<std::vector<Vec>>(nv));
  for (int d = 1; d <= D; ++d)
    for (int j = 0; j < nv; ++j) {
      int n = cur.dim(d, j);
      for (int c = 0; c < n; ++c) {
        Vec v(n, Scalar::zero(f));
        v[c] = Scalar::one(f);
        ker[d][j].push_back(std::move(v));
      }
    }

  for (int s = 0;; ++s) {
    bool empty = true;
    for (const auto& row : ker)
      for (const auto& vs : row) empty = empty && vs.empty();
    if (empty) {
      res.projective_dimension = s;
      res.syzygy_dims.assign(D + 1, std::vector<int>(nv, 0));
      break;
    }
    if (s == cutoff) {
      res.cutoff_reached = true;
      res.syzygy_dims.assign(D + 1, std::vector<int>(nv, 0));
      for (int d = 0; d <= D; ++d)
        for (int j = 0; j < nv; ++j) res.syzygy_dims[d][j] = static_cast<int>(ker[d][j].size());
      break;
    }

    // generators of the kernel: whatever is not reached from lower degrees
    std::vector<Generator> gens;
    std::vector<Vec> images;
    for (int d = 1; d <= D; ++d)
      for (int j = 0; j < nv; ++j) {
        if (ker[d][j].empty()) continue;
        Echelon e(f);
        for (int x : q.in_arrows(j)) {
          const int j0 = q.source(x);
          for (const auto& v : ker[d - 1][j0]) e.add(cur.times_arrow(d - 1, j0, v, x));
        }
        for (const auto& v : ker[d][j])
          if (e.add(v)) {
            gens.push_back({j, d});
            images.push_back(v);
          }
      }

    Module next(table, gens);
    // image of g_k * b for every basis monomial b, built up arrow by arrow
    // img[k][e][j][i]: b = basis(e, v_k, j)[i]
    std::vector<std::vector<std::vector<std::vector<Vec>>>> img(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& g = gens[k];
      img[k].assign(D - g.degree + 1, std::vector<std::vector<Vec>>(nv));
      img[k][0][g.vertex].push_back(images[k]);
      for (int e = 1; g.degree + e <= D; ++e)
        for (int j = 0; j < nv; ++j)
          for (const auto& b : table.basis(e, g.vertex, j)) {
            const int x = b.arrows.back();
            const int j0 = q.source(x);
            Path prefix{b.source, j0, {b.arrows.begin(), b.arrows.end() - 1}};
            int i0 = table.basis_index(e - 1, g.vertex, j0, prefix);
            img[k][e][j].push_back(cur.times_arrow(g.degree + e - 1, j0, img[k][e - 1][j0][i0], x));
          }
    }

    Graded nker(D + 1, std::vector<std::vector<Vec>>(nv));
    for (int d = 0; d <= D; ++d)
      for (int j = 0; j < nv; ++j) {
        const int cols = next.dim(d, j);
        if (cols == 0) continue;
        const int rows = cur.dim(d, j);
        ExactMatrix m(f, rows, cols);
        const auto& off = next.layout[d][j];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (gens[k].degree > d) continue;
          const auto& col_imgs = img[k][d - gens[k].degree][j];
          for (std::size_t i = 0; i < col_imgs.size(); ++i)
            for (int r = 0; r < rows; ++r) m.at(r, off[k] + i) = col_imgs[i][r];
        }
        nker[d][j] = kernel(m).row_list();
      }

    res.steps.push_back({gens, images});
    res.module_dims.push_back(dims_of(next));
    res.certified.push_back(certify(gens));
    ker = std::move(nker);
    cur = std::move(next);
  }
  return res;
}

int default_cutoff(const QuadraticPresentation& a) { return a.quiver().num_vertices() + 4; }

int default_degree_bound(const QuadraticPresentation& a, int cutoff, int* top) {
  GradedTable t(a, std::max(cutoff, 1));
  if (top) *top = t.top_degree();
  if (t.truncated()) return cutoff + 2;
  return cutoff + t.top_degree();
}

ResolutionReport minimal_resolution(const QuadraticPresentation& a, std::optional<int> simple,
                                    ResolutionOptions opt) {
  ResolutionReport rep;
  rep.cutoff = opt.cutoff >= 0 ? opt.cutoff : default_cutoff(a);
  int top = -1;
  rep.degree_bound = opt.degree_bound >= 0 ? opt.degree_bound : default_degree_bound(a, rep.cutoff, &top);
  GradedTable table(a, rep.degree_bound);
  rep.top_degree = table.top_degree();

  std::vector<int> which;
  if (simple) {
    if (*simple < 0 || *simple >= a.quiver().num_vertices())
      throw Error(ErrorKind::InvalidArgument, "no such vertex");
    which.push_back(*simple);
  } else {
    for (int v = 0; v < a.quiver().num_vertices(); ++v) which.push_back(v);
  }
  rep.simples.resize(which.size());
  const int n = static_cast<int>(which.size());
  if (opt.parallel && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        rep.simples[i] = resolve_simple(table, which[i], rep.cutoff);
      } catch (...) {
#pragma omp critical
        err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (int i = 0; i < n; ++i) rep.simples[i] = resolve_simple(table, which[i], rep.cutoff);
  }
  return rep;
}

bool is_minimal(const SimpleResolution& r, const GradedTable& table) {
  for (std::size_t s = 1; s < r.steps.size(); ++s) {
    const auto& prev = r.steps[s - 1].generators;
    const auto& step = r.steps[s];
    for (std::size_t k = 0; k < step.generators.size(); ++k) {
      const auto& g = step.generators[k];
      auto off = component_layout(table, prev, g.degree, g.vertex);
      for (std::size_t p = 0; p < prev.size(); ++p) {
        if (prev[p].degree != g.degree) continue;
        for (int c = off[p]; c < off[p + 1]; ++c)
          if (!step.images[k][c].is_zero()) return false;
      }
    }
  }
  return true;
}

KoszulVerdict koszul_check(const ResolutionReport& r) {
  KoszulVerdict v;
  v.cutoff = r.cutoff;
  for (const auto& s : r.simples) v.certified = v.certified && s.complete();
  for (int st = 0; st <= r.cutoff; ++st) {
    for (const auto& s : r.simples) {
      if (st >= static_cast<int>(s.steps.size())) continue;
      for (const auto& g : s.steps[st].generators) {
        if (g.degree == st) continue;
        if (v.koszul || g.degree < v.degree || (g.degree == v.degree && s.simple < v.simple)) {
          v.koszul = false;
          v.step = st;
          v.degree = g.degree;
          v.simple = s.simple;
        }
      }
    }
    if (!v.koszul) break;
  }
  return v;
}

KoszulVerdict koszul_check(const QuadraticPresentation& a, std::optional<int> cutoff) {
  ResolutionOptions opt;
  if (cutoff) opt.cutoff = *cutoff;
  return koszul_check(minimal_resolution(a, {}, opt));
}

GldimReport gldim(const ResolutionReport& r) {
  GldimReport g;
  g.cutoff = r.cutoff;
  int m = 0;
  bool all = true;
  for (const auto& s : r.simples) {
    g.certified = g.certified && s.complete();
    if (s.cutoff_reached) g.beyond_cutoff = true;
    if (s.projective_dimension) m = std::max(m, *s.projective_dimension);
    else all = false;
  }
  if (all) g.value = m;
  return g;
}

GldimReport gldim(const QuadraticPresentation& a, std::optional<int> cutoff) {
  ResolutionOptions opt;
  if (cutoff) opt.cutoff = *cutoff;
  return gldim(minimal_resolution(a, {}, opt));
}

}  // namespace koszuldual
