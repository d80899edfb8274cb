#include "koszuldual/matrix.hpp"

#include <map>
#include <stdexcept>

namespace koszuldual {

ExactMatrix::ExactMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

ExactMatrix ExactMatrix::identity(Field f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ExactMatrix ExactMatrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  ExactMatrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

ExactMatrix ExactMatrix::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  ExactMatrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, rows[i][j]);
  }
  return m;
}

Vec ExactMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Vec> ExactMatrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void ExactMatrix::append_row(const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) p.at(i, j) += a * o.at(k, j);
    }
  return p;
}

bool ExactMatrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Vec> RrefResult::basis() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(reduced.row(r));
  return out;
}

namespace {

template <bool Parallel>
RrefResult rref_impl(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < C && lead < R; ++c) {
    std::size_t p = lead;
    while (p < R && a.at(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != lead)
      for (std::size_t j = 0; j < C; ++j) std::swap(a.at(p, j), a.at(lead, j));
    Scalar inv = a.at(lead, c).inverse();
    for (std::size_t j = c; j < C; ++j) a.at(lead, j) *= inv;

    auto eliminate = [&](std::size_t r) {
      if (r == lead || a.at(r, c).is_zero()) return;
      Scalar f = a.at(r, c);
      for (std::size_t j = c; j < C; ++j)
        if (!a.at(lead, j).is_zero()) a.at(r, j) -= f * a.at(lead, j);
    };
    if constexpr (Parallel) {
      const long long rr = static_cast<long long>(R);
#pragma omp parallel for schedule(static) if (R * C > 4096)
      for (long long r = 0; r < rr; ++r) eliminate(static_cast<std::size_t>(r));
    } else {
      for (std::size_t r = 0; r < R; ++r) eliminate(r);
    }
    pivots.push_back(c);
    ++lead;
  }
  return RrefResult{std::move(a), std::move(pivots)};
}

}  // namespace

RrefResult rref(const ExactMatrix& m) { return rref_impl<false>(m); }
RrefResult rref_parallel(const ExactMatrix& m) { return rref_impl<true>(m); }

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

ExactMatrix kernel(const ExactMatrix& m) {
  const Field f = m.field();
  RrefResult rr = rref(m);
  const std::size_t C = m.cols();
  std::vector<char> is_pivot(C, 0);
  for (auto p : rr.pivots) is_pivot[p] = 1;
  ExactMatrix k(f, 0, C);
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    Vec v(C, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced.at(r, free);
    k.append_row(v);
  }
  return rref(k).reduced;
}

ExactMatrix orthogonal_complement(const ExactMatrix& basis_of_w, std::size_t dim_v) {
  if (basis_of_w.cols() != dim_v) throw std::invalid_argument("W not inside a dim_v space");
  // <f,w> = f . w, so W^perp is the right kernel of the matrix whose rows span W
  return kernel(basis_of_w);
}

ExactMatrix orthogonal_complement_graded(const ExactMatrix& basis_of_w,
                                         const std::vector<int>& degree) {
  const Field f = basis_of_w.field();
  const std::size_t n = degree.size();
  if (basis_of_w.cols() != n) throw std::invalid_argument("grading length mismatch");
  std::map<int, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[degree[i]].push_back(i);

  ExactMatrix out(f, 0, n);
  for (const auto& [deg, idx] : comps) {
    ExactMatrix block(f, 0, idx.size());
    for (std::size_t r = 0; r < basis_of_w.rows(); ++r) {
      Vec part(idx.size(), Scalar::zero(f));
      bool touches = false;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        part[j] = basis_of_w.at(r, idx[j]);
        touches = touches || !part[j].is_zero();
      }
      if (!touches) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (degree[c] != deg && !basis_of_w.at(r, c).is_zero())
          throw std::invalid_argument("row of W is not homogeneous");
      block.append_row(part);
    }
    ExactMatrix perp = kernel(block);
    for (std::size_t r = 0; r < perp.rows(); ++r) {
      Vec v(n, Scalar::zero(f));
      for (std::size_t j = 0; j < idx.size(); ++j) v[idx[j]] = perp.at(r, j);
      out.append_row(v);
    }
  }
  return out;
}

bool same_row_space(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RrefResult ra = rref(a), rb = rref(b);
  return ra.pivots == rb.pivots && ra.basis() == rb.basis();
}

bool in_row_space(const ExactMatrix& m, const Vec& v) {
  ExactMatrix ext = m;
  ext.append_row(v);
  return rank(ext) == rank(m);
}

}  // namespace koszuldual
