#ifndef KOSZULDUAL_COVERING_HPP
#define KOSZULDUAL_COVERING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszuldual/presentation.hpp"

namespace koszuldual {

/// Z/k for k >= 1, or Z when k == 0.
struct Group {
  int k = 0;
  static Group integers() { return Group{0}; }
  static Group cyclic(int k);
  bool is_integers() const { return k == 0; }
  long long normalize(long long g) const;
  std::string to_string() const;  // "Z" or "Z/k"
  friend bool operator==(const Group&, const Group&) = default;
};
/// "z" or "zk:<k>".
Group parse_group(const std::string& s);

struct Weighting {
  Group group;
  std::map<std::string, long long> weight;  // arrow id -> element; missing arrows weigh 0
  long long of(const std::string& arrow) const;
};
/// "a=1, b=-2" (also ';' or ':' separated) or a JSON object {"a": 1}. Unknown arrows are rejected.
Weighting parse_weighting(const std::string& text, const Quiver& q, Group g);

struct HomogeneityReport {
  bool homogeneous = true;
  std::optional<std::string> offending;  // first relation whose terms differ in weight
};
HomogeneityReport check_homogeneous(const QuadraticPresentation& a, const Weighting& w);

struct SmashQuiver {
  QuadraticPresentation base;
  Weighting weighting;
  QuadraticPresentation covering;  // vertices "v[g]", arrows "a[g]" starting on sheet g
  std::vector<std::vector<std::string>> components;
  std::vector<bool> component_isomorphic_to_base;
  int window = 0;                  // Z only: sheets -window..window
  bool boundary_effects = false;   // Z only: something was cut at the window edge
  std::vector<std::string> notes;
};

/// Throws NotHomogeneous. window < 0 means #vertices (used for Z only).
SmashQuiver smash(const QuadraticPresentation& a, const Weighting& w, int window = -1);

/// For Z/k: gcd of k and the weights of the fundamental cycles of a spanning tree.
int expected_components(const Quiver& q, const Weighting& w);

struct GradabilityReport {
  bool gradable = true;
  std::map<std::string, int> degrees;     // when gradable, minimum 0
  std::vector<std::string> witness_walk;  // closed walk, "~a" for an arrow walked backwards
  int signed_length = 0;
};
/// Throws Disconnected.
GradabilityReport gradable(const Quiver& q);

struct DualSmashReport {
  bool commutes = false;
  // from smash(dual(a), w^op) to dual(smash(a, w))
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;
};
/// Compares dual(smash(a, w)) with smash(dual(a), w^op), w^op(a^op) = w(a), under
/// v[g] -> v[-g] and a^op[h] -> a[-h-w(a)]^op. Z/k only.
DualSmashReport dual_smash_commutes(const QuadraticPresentation& a, const Weighting& w);

}  // namespace koszuldual

#endif
