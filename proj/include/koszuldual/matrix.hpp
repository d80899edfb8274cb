#ifndef KOSZULDUAL_MATRIX_HPP
#define KOSZULDUAL_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "koszuldual/field.hpp"

namespace koszuldual {

using Vec = std::vector<Scalar>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Field f, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(Field f, std::size_t n);
  static ExactMatrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static ExactMatrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  std::vector<Vec> row_list() const;
  void append_row(const Vec& v);
  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix reduced;  // same shape as the input; zero rows at the bottom
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
  /// The nonzero rows only.
  std::vector<Vec> basis() const;
};

RrefResult rref(const ExactMatrix& m);
/// Same output as rref(); the row updates for each pivot run under OpenMP.
RrefResult rref_parallel(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {x : m x = 0}, one vector per row of the result, in rref form.
ExactMatrix kernel(const ExactMatrix& m);

/// Basis of W^perp inside the dual of a dim_v space, pairing <f, w> = sum f_i w_i.
ExactMatrix orthogonal_complement(const ExactMatrix& basis_of_w, std::size_t dim_v);

/// Same, computed one grading component at a time. degree[i] is the grade of
/// coordinate i; every row of basis_of_w must be homogeneous.
ExactMatrix orthogonal_complement_graded(const ExactMatrix& basis_of_w,
                                         const std::vector<int>& degree);

/// Row space equality.
bool same_row_space(const ExactMatrix& a, const ExactMatrix& b);

/// True when v lies in the row space of m.
bool in_row_space(const ExactMatrix& m, const Vec& v);

}  // namespace koszuldual

#endif
