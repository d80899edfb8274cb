#ifndef KOSZULDUAL_PRESENTATION_HPP
#define KOSZULDUAL_PRESENTATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszuldual/field.hpp"
#include "koszuldual/matrix.hpp"
#include "koszuldual/quiver.hpp"

namespace koszuldual {

struct Term {
  Scalar coef;
  Path path;  // length 2
  friend bool operator==(const Term&, const Term&) = default;
};

struct RelationCombo {
  std::vector<Term> terms;
  int source() const { return terms.front().path.source; }
  int target() const { return terms.front().path.target; }
  bool is_monomial() const { return terms.size() == 1; }
  friend bool operator==(const RelationCombo&, const RelationCombo&) = default;
};

/// A = kQ/I with I generated by length-2 combinations. The constructor
/// row-reduces the relations inside each (source, target) block, so equal
/// ideals give equal presentations.
class QuadraticPresentation {
 public:
  QuadraticPresentation() = default;
  QuadraticPresentation(std::string name, Quiver quiver, Field field,
                        std::vector<RelationCombo> relations);

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  Field field() const { return field_; }
  const std::vector<RelationCombo>& relations() const { return relations_; }

  bool is_monomial() const;

  /// (source, target) pairs with at least one length-2 path, in vertex order.
  std::vector<std::pair<int, int>> blocks() const;
  /// Length-2 paths from s to t, ordered by arrow indices.
  std::vector<Path> block_paths(int s, int t) const;
  /// Relations of the block as rref rows in block_paths coordinates.
  ExactMatrix block_relations(int s, int t) const;

  /// Whether the length-2 path a*b lies in I (any field, any ideal).
  bool in_ideal(int a, int b) const;

  QuadraticPresentation with_name(std::string name) const;
  QuadraticPresentation with_field(Field f) const;  // re-reads coefficients as rationals

  /// Structural equality: quiver, field and normalized relations (name ignored).
  friend bool operator==(const QuadraticPresentation& a, const QuadraticPresentation& b) {
    return a.field_ == b.field_ && a.quiver_ == b.quiver_ && a.relations_ == b.relations_;
  }

 private:
  std::string name_;
  Quiver quiver_;
  Field field_;
  std::vector<RelationCombo> relations_;
  std::map<std::pair<int, int>, ExactMatrix> block_rel_;
};

/// Renames vertices and arrows (missing keys keep their name) and rebuilds.
QuadraticPresentation relabel(const QuadraticPresentation& a,
                              const std::map<std::string, std::string>& vertex_map,
                              const std::map<std::string, std::string>& arrow_map);

/// "a*b - 2 c*d" with arrow ids; the wire form used by the text format.
std::string combo_to_string(const Quiver& q, const RelationCombo& r);

struct Branch {
  int attach_vertex = 0;           // on the cycle
  int link_arrow = 0;              // the arrow touching attach_vertex
  bool toward_cycle = false;       // link_arrow points at the cycle
  std::vector<int> arrows;         // all arrows of the hanging subtree, link included
};

struct CycleProfile {
  CycleSkeleton cycle;
  int r_plus = 0;   // monomial relations on two consecutive clockwise cycle arrows
  int r_minus = 0;  // same, counterclockwise
  std::vector<Branch> branches;
};

/// Throws Error(NotOneCycle) unless the cycle rank is 1.
CycleProfile cycle_profile(const QuadraticPresentation& a);

}  // namespace koszuldual

#endif
