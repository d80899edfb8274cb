#ifndef KOSZULDUAL_CLASSIFIER_HPP
#define KOSZULDUAL_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszuldual/presentation.hpp"

namespace koszuldual {

struct GentleReport {
  bool gentle = true;
  std::string violation;  // empty when gentle
};
GentleReport is_gentle(const QuadraticPresentation& a);

/// The cycle left after all branches are spliced in.
struct AbsorbedCycle {
  std::vector<std::string> arrows;      // in traversal order
  std::vector<bool> clockwise;
  std::vector<std::string> relations;   // zero relations on two consecutive cycle arrows, "x*y"
  int n = 0, m = 0;
  int r_plus = 0, r_minus = 0;
  int paths_plus = 0, paths_minus = 0;  // composable consecutive pairs per side
};

enum class ClassTag { DynkinTree, DynkinA, EuclideanA, Discrete, Unknown };

struct DerivedClass {
  ClassTag tag = ClassTag::Unknown;
  int n = 0;  // DynkinA: vertices; cycle classes: clockwise arrows
  int m = 0;
  int r = 0;  // Discrete
  int s = 0;  // EuclideanA: n + m - 1
  // signed r+ - r- and P+ - P-; what the dual class is computed from
  int delta = 0;
  int balance = 0;
  std::string tree_type;  // DynkinTree: "A5", "D4", "E6", or "tree"
  std::vector<std::pair<std::string, std::string>> tree_edges;
  std::string diagnostic;  // Unknown
  std::optional<AbsorbedCycle> cycle;
  std::vector<std::string> trace;
};

/// Classes of the normal forms A(r,n,m) and C(n,m): relations on the clockwise
/// side, each side a single path, so delta = r and balance = n - m.
DerivedClass discrete_class(int r, int n, int m);
DerivedClass euclidean_class(int n, int m);

/// "Discrete(2,3,2)", "EuclideanA(4; 3,2)", "DynkinA(4)", "DynkinTree(D4)", "Unknown(...)".
std::string to_string(const DerivedClass& c);
const char* tag_name(ClassTag t);  // "discrete", "euclidean_a", ...
/// Same tag and parameters; cycle counts compared as an unordered pair when `unordered`.
bool same_class(const DerivedClass& a, const DerivedClass& b, bool unordered = false);

DerivedClass classify(const QuadraticPresentation& a);

/// Class of the quadratic dual. Trees map to themselves; Unknown throws OutOfScope.
DerivedClass dual_class(const DerivedClass& c);

enum class Equivalence { Equivalent, NotEquivalent, Unknown };
std::string to_string(Equivalence e);  // "equivalent", "not_equivalent", "unknown"

struct EquivalenceVerdict {
  Equivalence verdict = Equivalence::Unknown;
  std::string rule = "none";  // "theorem-1", "theorem-2", "theorem-3b" or "none"
  DerivedClass algebra_class;
  std::optional<DerivedClass> dual_class;
  std::string simply_connected;  // "yes", "no", "unknown"
  bool koszul = false;
  int cutoff = 0;
  std::vector<std::string> notes;
};

EquivalenceVerdict decide_equiv(const QuadraticPresentation& a, std::optional<int> cutoff = {});

}  // namespace koszuldual

#endif
