#ifndef KOSZULDUAL_GRADED_HPP
#define KOSZULDUAL_GRADED_HPP

#include <map>
#include <utility>
#include <vector>

#include "koszuldual/presentation.hpp"

namespace koszuldual {

/// Monomial bases of A = kQ/I degree by degree, up to a cutoff.
///
/// Degree d candidates are (basis monomial of degree d-1) * arrow; they span
/// A_d. Relations among them come from m * rho with m a basis monomial of
/// degree d-2 and rho in I_2, rewritten through the degree d-1 normal forms.
/// Row reducing those inside each (source, target) block, the non-pivot
/// candidates are the basis and every candidate gets a normal form.
class GradedTable {
 public:
  /// Throws Error(OutOfScope) if some degree has more than max_candidates candidates.
  GradedTable(const QuadraticPresentation& a, int cutoff, std::size_t max_candidates = 200000);

  const QuadraticPresentation& algebra() const { return a_; }
  Field field() const { return a_.field(); }
  int cutoff() const { return cutoff_; }

  int dim(int d) const;
  int dim(int d, int s, int t) const;
  std::vector<int> dims() const;  // degrees 0..cutoff

  /// Basis monomials of degree d from s to t.
  const std::vector<Path>& basis(int d, int s, int t) const;
  /// Position of a basis monomial in basis(d, s, t), or -1.
  int basis_index(int d, int s, int t, const Path& p) const;
  /// Coordinates of any path (length <= cutoff) in the basis of its block.
  Vec normal_form(const Path& p) const;
  /// x in A_{d}(s,t) times the arrow, in A_{d+1}(s, target(arrow)). Needs d < cutoff.
  Vec times_arrow(int d, int s, int t, const Vec& x, int arrow) const;
  /// Normal form of (basis element i of A_d(s,t)) * arrow.
  const Vec& basis_times_arrow(int d, int s, int t, int i, int arrow) const;

  /// Degree of the last nonzero A_d, or -1 when A_cutoff != 0 (growth not seen to stop).
  int top_degree() const { return top_; }
  bool truncated() const { return top_ < 0; }

 private:
  struct Block {
    std::vector<Path> candidates;   // sorted by arrow sequence
    std::vector<Path> basis;
    std::map<std::vector<int>, int> basis_pos;
    std::vector<Vec> nf;            // per candidate
    std::map<int, std::vector<int>> up;  // arrow -> per basis element, candidate column one degree up
  };
  const Block* block(int d, int s, int t) const;

  QuadraticPresentation a_;
  int cutoff_;
  int top_ = -1;
  std::vector<std::map<std::pair<int, int>, Block>> blocks_;
  std::vector<Path> empty_;
};

}  // namespace koszuldual

#endif
