#ifndef KOSZULDUAL_DUAL_HPP
#define KOSZULDUAL_DUAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszuldual/presentation.hpp"

namespace koszuldual {

struct DualResult {
  QuadraticPresentation presentation;
  // each length-2 path a*b of A paired with b^op*a^op in the opposite quiver
  std::vector<std::pair<Path, Path>> reversal;
};

/// Quadratic dual over Q^op: the relations are the annihilator of I_2 under the
/// pairing <a*b, b^op*a^op> = 1, taken block by block.
QuadraticPresentation dual(const QuadraticPresentation& a);
DualResult dual_with_reversal(const QuadraticPresentation& a);

struct DoubleDualReport {
  bool isomorphic = false;
  std::map<std::string, std::string> vertex_map;  // from A to (A^!)^!
  std::map<std::string, std::string> arrow_map;
};
DoubleDualReport double_dual_isomorphic(const QuadraticPresentation& a);

enum class Finiteness { Finite, Infinite, Unknown };
const char* to_string(Finiteness f);

struct FinitenessReport {
  Finiteness verdict = Finiteness::Unknown;
  std::vector<int> dims;                  // dim A_d; up to the top degree when finite
  std::vector<std::string> witness_cycle; // arrow ids of a cycle of nonzero paths
  int cutoff = 0;                         // degrees inspected (non-monomial case)
};

/// Monomial ideals are decided exactly: A is infinite iff the graph on arrows
/// with x -> y whenever x*y is a nonzero path has a cycle (shortest one
/// reported). Otherwise dimensions are computed up to the cutoff (default
/// 2|Q0|) and the answer is Finite if some A_d vanishes, else Unknown.
FinitenessReport is_finite_dimensional(const QuadraticPresentation& a, std::optional<int> cutoff = {});

}  // namespace koszuldual

#endif
