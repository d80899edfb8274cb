#ifndef KOSZULDUAL_REFLECTIONS_HPP
#define KOSZULDUAL_REFLECTIONS_HPP

#include <string>
#include <vector>

#include "koszuldual/quiver.hpp"

namespace koszuldual {

enum class ReflectAt { Sink, Source };  // sigma+ at a sink, sigma- at a source

struct ReflectionStep {
  std::string vertex;
  ReflectAt at = ReflectAt::Sink;
  friend bool operator==(const ReflectionStep&, const ReflectionStep&) = default;
};
/// "+3" for the sink reflection at 3, "-3" at a source.
std::string to_string(const ReflectionStep& s);
/// Accepts "+v", "-v", "sink:v", "source:v". Throws InvalidArgument.
ReflectionStep parse_reflection_step(const std::string& s);

/// Reverses every arrow at the vertex, keeping arrow ids. Throws NotSinkOrSource.
Quiver reflect(const Quiver& q, const ReflectionStep& step);
Quiver reflect(const Quiver& q, const std::vector<ReflectionStep>& word);

/// Label-free encoding of q up to isomorphism (arrow multiplicities between
/// canonically ordered vertices). Equal strings iff isomorphic quivers.
std::string canonical_form(const Quiver& q);
/// Same for the underlying undirected multigraph.
std::string canonical_graph_form(const Quiver& q);
/// Vertex indices of q in canonical order.
std::vector<int> canonical_order(const Quiver& q);
bool isomorphic(const Quiver& a, const Quiver& b);

struct ReflectionOrbit {
  std::vector<Quiver> representatives;  // one quiver per isomorphism class, BFS order
  std::vector<std::vector<ReflectionStep>> words;  // from the start quiver to each representative
  std::vector<std::string> keys;        // canonical forms
  int depth = 0;                        // last BFS level expanded
  bool exhausted = false;
};
/// Throws HasOrientedCycle.
ReflectionOrbit reflection_orbit(const Quiver& q, int max_depth, bool parallel = true);

enum class QuiverEquivalence { Equivalent, NotEquivalent, DepthExceeded };
std::string to_string(QuiverEquivalence v);  // "equivalent", "not-equivalent", "depth-exceeded"

struct QuiverEquivalenceReport {
  QuiverEquivalence verdict = QuiverEquivalence::DepthExceeded;
  std::vector<ReflectionStep> word;  // Equivalent: reflect(q, word) is isomorphic to q2
  std::string certificate;
  int orbit_size = 0;
  int depth = 0;
  int max_depth = 0;
};

constexpr int kDefaultMaxDepth = 256;

/// Throws HasOrientedCycle.
QuiverEquivalenceReport equivalent_quivers(const Quiver& q, const Quiver& q2, int max_depth = kDefaultMaxDepth,
                                           bool parallel = true);

}  // namespace koszuldual

#endif
