#include "koszuldual/graded.hpp"

#include <algorithm>

#include "koszuldual/errors.hpp"

namespace koszuldual {

GradedTable::GradedTable(const QuadraticPresentation& a, int cutoff, std::size_t max_candidates)
    : a_(a), cutoff_(cutoff) {
  if (cutoff < 0) throw Error(ErrorKind::InvalidArgument, "negative cutoff");
  const Quiver& q = a_.quiver();
  const Field f = a_.field();
  blocks_.resize(cutoff + 1);

  for (int v = 0; v < q.num_vertices(); ++v) {
    Block& b = blocks_[0][{v, v}];
    b.candidates.push_back(Path::trivial(v));
    b.basis = b.candidates;
    b.basis_pos[{}] = 0;
    b.nf.push_back(Vec{Scalar::one(f)});
  }

  for (int d = 1; d <= cutoff; ++d) {
    auto& level = blocks_[d];
    std::size_t count = 0;
    for (const auto& [st, lb] : blocks_[d - 1])
      for (const auto& m : lb.basis)
        for (int x : q.out_arrows(st.second)) {
          Path p = m;
          p.arrows.push_back(x);
          p.target = q.target(x);
          level[{st.first, p.target}].candidates.push_back(std::move(p));
          ++count;
        }
    if (count > max_candidates)
      throw Error(ErrorKind::OutOfScope,
                  "more than " + std::to_string(max_candidates) + " candidate monomials in degree " + std::to_string(d));

    std::map<std::pair<int, int>, std::map<std::vector<int>, int>> index;
    for (auto& [st, b] : level) {
      std::sort(b.candidates.begin(), b.candidates.end());
      auto& idx = index[st];
      for (std::size_t i = 0; i < b.candidates.size(); ++i) idx[b.candidates[i].arrows] = static_cast<int>(i);
    }
    for (auto& [st, lb] : blocks_[d - 1]) {
      if (lb.basis.empty()) continue;
      for (int x : q.out_arrows(st.second)) {
        auto& idx = index[{st.first, q.target(x)}];
        std::vector<int> cols;
        for (const auto& m : lb.basis) {
          std::vector<int> seq = m.arrows;
          seq.push_back(x);
          cols.push_back(idx.at(seq));
        }
        lb.up[x] = std::move(cols);
      }
    }

    // m * rho for basis monomials m of degree d-2, rewritten into candidates
    std::map<std::pair<int, int>, std::vector<Vec>> rows;
    if (d >= 2) {
      for (const auto& [st, hb] : blocks_[d - 2]) {
        for (std::size_t i = 0; i < hb.basis.size(); ++i) {
          for (const auto& rel : a_.relations()) {
            if (rel.source() != st.second) continue;
            auto key = std::make_pair(st.first, rel.target());
            auto lit = level.find(key);
            if (lit == level.end()) continue;  // nothing survives there anyway
            Block& nb = lit->second;
            Vec v(nb.candidates.size(), Scalar::zero(f));
            for (const auto& t : rel.terms) {
              int x = t.path.arrows[0], y = t.path.arrows[1];
              const Vec& mx = basis_times_arrow(d - 2, st.first, st.second, static_cast<int>(i), x);
              if (mx.empty()) continue;
              const Block& mid = blocks_[d - 1].at({st.first, q.target(x)});
              const auto& cols = mid.up.at(y);
              for (std::size_t j = 0; j < mx.size(); ++j)
                if (!mx[j].is_zero()) v[cols[j]] += t.coef * mx[j];
            }
            rows[key].push_back(std::move(v));
          }
        }
      }
    }

    for (auto& [st, b] : level) {
      const std::size_t n = b.candidates.size();
      auto it = rows.find(st);
      RrefResult rr = rref(ExactMatrix::from_rows(f, n, it == rows.end() ? std::vector<Vec>{} : it->second));
      std::vector<int> pivot_row(n, -1), basis_index(n, -1);
      for (std::size_t r = 0; r < rr.pivots.size(); ++r) pivot_row[rr.pivots[r]] = static_cast<int>(r);
      for (std::size_t c = 0; c < n; ++c)
        if (pivot_row[c] < 0) {
          basis_index[c] = static_cast<int>(b.basis.size());
          b.basis_pos[b.candidates[c].arrows] = basis_index[c];
          b.basis.push_back(b.candidates[c]);
        }
      b.nf.assign(n, Vec(b.basis.size(), Scalar::zero(f)));
      for (std::size_t c = 0; c < n; ++c) {
        if (basis_index[c] >= 0) {
          b.nf[c][basis_index[c]] = Scalar::one(f);
          continue;
        }
        // pivot candidate + sum R[j] * basis_j lies in I
        int r = pivot_row[c];
        for (std::size_t j = 0; j < n; ++j)
          if (basis_index[j] >= 0 && !rr.reduced.at(r, j).is_zero()) b.nf[c][basis_index[j]] = -rr.reduced.at(r, j);
      }
    }
  }

  for (int d = 0; d <= cutoff; ++d)
    if (dim(d) == 0) {
      top_ = d - 1;
      break;
    }
}

const GradedTable::Block* GradedTable::block(int d, int s, int t) const {
  if (d < 0 || d > cutoff_) throw Error(ErrorKind::OutOfScope, "degree " + std::to_string(d) + " beyond the table");
  auto it = blocks_[d].find({s, t});
  return it == blocks_[d].end() ? nullptr : &it->second;
}

int GradedTable::dim(int d) const {
  if (d < 0 || d > cutoff_) throw Error(ErrorKind::OutOfScope, "degree beyond the table");
  int n = 0;
  for (const auto& [st, b] : blocks_[d]) n += static_cast<int>(b.basis.size());
  return n;
}

int GradedTable::dim(int d, int s, int t) const {
  const Block* b = block(d, s, t);
  return b ? static_cast<int>(b->basis.size()) : 0;
}

std::vector<int> GradedTable::dims() const {
  std::vector<int> out;
  for (int d = 0; d <= cutoff_; ++d) out.push_back(dim(d));
  return out;
}

const std::vector<Path>& GradedTable::basis(int d, int s, int t) const {
  const Block* b = block(d, s, t);
  return b ? b->basis : empty_;
}

int GradedTable::basis_index(int d, int s, int t, const Path& p) const {
  const Block* b = block(d, s, t);
  if (!b) return -1;
  auto it = b->basis_pos.find(p.arrows);
  return it == b->basis_pos.end() ? -1 : it->second;
}

const Vec& GradedTable::basis_times_arrow(int d, int s, int t, int i, int arrow) const {
  if (d + 1 > cutoff_) throw Error(ErrorKind::OutOfScope, "product beyond the table");
  const Block* b = block(d, s, t);
  const Quiver& q = a_.quiver();
  if (!b || q.source(arrow) != t || i < 0 || i >= static_cast<int>(b->basis.size()))
    throw Error(ErrorKind::NonComposable, "no such basis element times arrow");
  int col = b->up.at(arrow)[i];
  return blocks_[d + 1].at({s, q.target(arrow)}).nf[col];
}

Vec GradedTable::times_arrow(int d, int s, int t, const Vec& x, int arrow) const {
  const int t2 = a_.quiver().target(arrow);
  Vec out(static_cast<std::size_t>(dim(d + 1, s, t2)), Scalar::zero(field()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    const Vec& v = basis_times_arrow(d, s, t, static_cast<int>(i), arrow);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) out[j] += x[i] * v[j];
  }
  return out;
}

Vec GradedTable::normal_form(const Path& p) const {
  if (p.length() > cutoff_) throw Error(ErrorKind::OutOfScope, "path longer than the table");
  const Quiver& q = a_.quiver();
  Vec v{Scalar::one(field())};
  int t = p.source;
  for (int d = 0; d < p.length(); ++d) {
    int x = p.arrows[d];
    if (q.source(x) != t) throw Error(ErrorKind::NonComposable, "not a path");
    if (dim(d, p.source, t) == 0) return Vec(dim(p.length(), p.source, p.target), Scalar::zero(field()));
    v = times_arrow(d, p.source, t, v, x);
    t = q.target(x);
  }
  return v;
}

}  // namespace koszuldual
