#include "koszuldual/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

#include "koszuldual/errors.hpp"

namespace koszuldual {

bool id_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;  // "01" vs "1"
}

static bool ends_with_op(const std::string& id) {
  return id.size() >= 3 && id.compare(id.size() - 3, 3, "^op") == 0;
}

std::string op_id(const std::string& id) {
  return ends_with_op(id) ? id.substr(0, id.size() - 3) : id + "^op";
}

std::string base_id(const std::string& id) {
  std::string s = id;
  while (ends_with_op(s)) s.resize(s.size() - 3);
  return s;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end(), id_less);
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& x, const Arrow& y) { return id_less(x.id, y.id); });
  for (int v = 0; v < num_vertices(); ++v)
    if (!vindex_.emplace(vertices_[v], v).second)
      throw Error(ErrorKind::SemanticError, "duplicate vertex '" + vertices_[v] + "'");
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (int a = 0; a < num_arrows(); ++a) {
    const Arrow& ar = arrows_[a];
    if (!aindex_.emplace(ar.id, a).second)
      throw Error(ErrorKind::SemanticError, "duplicate arrow '" + ar.id + "'");
    if (vindex_.count(ar.id))
      throw Error(ErrorKind::SemanticError, "id '" + ar.id + "' names both a vertex and an arrow");
    int s = vertex_index(ar.source), t = vertex_index(ar.target);
    if (s < 0 || t < 0)
      throw Error(ErrorKind::SemanticError,
                  "arrow '" + ar.id + "' uses undeclared vertex '" + (s < 0 ? ar.source : ar.target) + "'");
    src_.push_back(s);
    tgt_.push_back(t);
    out_[s].push_back(a);
    in_[t].push_back(a);
  }
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  return it == vindex_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = aindex_.find(id);
  return it == aindex_.end() ? -1 : it->second;
}

bool Quiver::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    };
    for (int a : out_[v]) visit(tgt_[a]);
    for (int a : in_[v]) visit(src_[a]);
  }
  return count == num_vertices();
}

bool Quiver::has_oriented_cycle() const {
  std::vector<int> indeg(vertices_.size(), 0);
  for (int a = 0; a < num_arrows(); ++a) ++indeg[tgt_[a]];
  std::queue<int> ready;
  for (int v = 0; v < num_vertices(); ++v)
    if (indeg[v] == 0) ready.push(v);
  int done = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++done;
    for (int a : out_[v])
      if (--indeg[tgt_[a]] == 0) ready.push(tgt_[a]);
  }
  return done != num_vertices();
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({op_id(a.id), a.target, a.source});
  return Quiver(vertices_, rev);
}

Path compose(const Path& p, const Path& q) {
  if (p.target != q.source) throw Error(ErrorKind::NonComposable, "paths are not composable");
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Path make_path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw Error(ErrorKind::InvalidArgument, "empty arrow list");
  Path p = Path::of_arrow(q, arrows[0]);
  for (std::size_t i = 1; i < arrows.size(); ++i) p = compose(p, Path::of_arrow(q, arrows[i]));
  return p;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(p.arrows[i]).id;
  }
  return s;
}

std::vector<Path> paths_of_length(const Quiver& q, int length) {
  std::vector<Path> cur;
  for (int v = 0; v < q.num_vertices(); ++v) cur.push_back(Path::trivial(v));
  for (int l = 0; l < length; ++l) {
    std::vector<Path> next;
    for (const auto& p : cur)
      for (int a : q.out_arrows(p.target)) {
        Path r = p;
        if (r.arrows.empty()) r.source = q.source(a);
        r.arrows.push_back(a);
        r.target = q.target(a);
        next.push_back(std::move(r));
      }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [](const Path& a, const Path& b) {
    return a.arrows != b.arrows ? a.arrows < b.arrows : a.source < b.source;
  });
  return cur;
}

ShapeReport underlying_shape(const Quiver& q) {
  if (!q.is_connected()) throw Error(ErrorKind::Disconnected, "quiver is not connected");
  ShapeReport r;
  r.cycle_rank = q.num_arrows() - q.num_vertices() + 1;
  r.is_tree = r.cycle_rank == 0;
  if (r.cycle_rank != 1) return r;

  // strip leaves until only the cycle is left
  std::vector<int> deg(q.num_vertices(), 0);
  std::vector<char> alive(q.num_arrows(), 1);
  for (int a = 0; a < q.num_arrows(); ++a) {
    ++deg[q.source(a)];
    ++deg[q.target(a)];
  }
  std::vector<int> leaves;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (deg[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    int v = leaves.back();
    leaves.pop_back();
    if (deg[v] != 1) continue;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (!alive[a] || (q.source(a) != v && q.target(a) != v)) continue;
      alive[a] = 0;
      --deg[v];
      int w = q.source(a) == v ? q.target(a) : q.source(a);
      if (--deg[w] == 1) leaves.push_back(w);
      break;
    }
  }

  int ref = -1;
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (!alive[a]) continue;
    if (ref < 0) {
      ref = a;
      continue;
    }
    const std::string ba = base_id(q.arrow(a).id), br = base_id(q.arrow(ref).id);
    if (id_less(ba, br) || (ba == br && id_less(q.arrow(a).id, q.arrow(ref).id))) ref = a;
  }

  CycleSkeleton c;
  int v = q.source(ref), a = ref;
  const int start = v;
  do {
    c.vertices.push_back(v);
    c.arrows.push_back(a);
    bool fwd = q.source(a) == v;
    c.clockwise.push_back(fwd);
    v = fwd ? q.target(a) : q.source(a);
    int next = -1;
    for (int b = 0; b < q.num_arrows() && v != start; ++b)
      if (alive[b] && b != a && (q.source(b) == v || q.target(b) == v)) {
        next = b;
        break;
      }
    a = next;
  } while (v != start);
  for (bool cw : c.clockwise) (cw ? c.n : c.m) += 1;
  r.unique_cycle = std::move(c);
  return r;
}

}  // namespace koszuldual
