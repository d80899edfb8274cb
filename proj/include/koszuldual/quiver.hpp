#ifndef KOSZULDUAL_QUIVER_HPP
#define KOSZULDUAL_QUIVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace koszuldual {

/// Ordering used for every id: digit runs compare numerically, the rest bytewise.
bool id_less(const std::string& a, const std::string& b);

/// Arrow names of dual quivers carry a "^op" suffix; taking the dual twice removes it.
std::string op_id(const std::string& id);
/// The id without any trailing "^op".
std::string base_id(const std::string& id);

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver. Vertices and arrows are kept sorted by id_less so that two
/// quivers with the same data compare equal regardless of declaration order.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(const std::string& id) const;  // -1 when absent
  int arrow_index(const std::string& id) const;   // -1 when absent
  int source(int a) const { return src_[a]; }
  int target(int a) const { return tgt_[a]; }
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }

  bool is_sink(int v) const { return out_[v].empty(); }
  bool is_source(int v) const { return in_[v].empty(); }
  bool is_connected() const;
  bool has_oriented_cycle() const;

  /// Arrow-reversed quiver with arrows renamed by op_id.
  Quiver opposite() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vindex_, aindex_;
  std::vector<int> src_, tgt_;
  std::vector<std::vector<int>> out_, in_;
};

/// Path in a quiver, arrows composed left to right: "a b" means a then b.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  static Path trivial(int v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a) { return Path{q.source(a), q.target(a), {a}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// p then q. Throws Error(NonComposable) when target(p) != source(q).
Path compose(const Path& p, const Path& q);
/// Validates a sequence of arrow indices as a path.
Path make_path(const Quiver& q, const std::vector<int>& arrows);
/// "a*b*c"; a trivial path prints as "e_<vertex>".
std::string path_to_string(const Quiver& q, const Path& p);

/// All paths of the given length, ordered by their arrow-index sequences.
std::vector<Path> paths_of_length(const Quiver& q, int length);

/// Unique cycle of a cycle-rank-1 quiver. arrows[i] joins vertices[i] and
/// vertices[(i+1) % L]; clockwise[i] says whether it points from vertices[i]
/// to vertices[i+1] in the chosen (clockwise) traversal.
struct CycleSkeleton {
  std::vector<int> vertices;
  std::vector<int> arrows;
  std::vector<bool> clockwise;
  int n = 0;  // clockwise arrows
  int m = 0;  // counterclockwise arrows
  bool oriented() const { return n == 0 || m == 0; }
};

struct ShapeReport {
  bool is_tree = false;
  int cycle_rank = 0;
  std::optional<CycleSkeleton> unique_cycle;
};

/// Throws Error(Disconnected) for a disconnected quiver.
ShapeReport underlying_shape(const Quiver& q);

}  // namespace koszuldual

#endif
