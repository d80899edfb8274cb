#include "koszuldual/presentation.hpp"

#include <algorithm>
#include <set>

#include "koszuldual/errors.hpp"

namespace koszuldual {

namespace {

int path_index(const std::vector<Path>& paths, const Path& p) {
  auto it = std::find(paths.begin(), paths.end(), p);
  return it == paths.end() ? -1 : static_cast<int>(it - paths.begin());
}

}  // namespace

QuadraticPresentation::QuadraticPresentation(std::string name, Quiver quiver, Field field,
                                             std::vector<RelationCombo> relations)
    : name_(std::move(name)), quiver_(std::move(quiver)), field_(field) {
  std::map<std::pair<int, int>, std::vector<Vec>> rows;
  for (const auto& r : relations) {
    if (r.terms.empty()) throw Error(ErrorKind::SemanticError, "empty relation");
    const int s = r.source(), t = r.target();
    auto paths = block_paths(s, t);
    Vec v(paths.size(), Scalar::zero(field_));
    for (const auto& term : r.terms) {
      const Path& p = term.path;
      if (p.length() != 2)
        throw Error(ErrorKind::SemanticError, "relation term of length " + std::to_string(p.length()));
      if (p.source != s || p.target != t)
        throw Error(ErrorKind::SemanticError, "relation mixes endpoints");
      int idx = path_index(paths, p);
      if (idx < 0) throw Error(ErrorKind::SemanticError, "relation term is not a path of the quiver");
      if (term.coef.field() != field_) throw Error(ErrorKind::SemanticError, "coefficient from another field");
      v[idx] += term.coef;
    }
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); }))
      throw Error(ErrorKind::SemanticError, "relation is zero");
    rows[{s, t}].push_back(std::move(v));
  }
  for (auto& [st, vs] : rows) {
    auto paths = block_paths(st.first, st.second);
    RrefResult rr = rref(ExactMatrix::from_rows(field_, paths.size(), vs));
    ExactMatrix basis = ExactMatrix::from_rows(field_, paths.size(), rr.basis());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      RelationCombo c;
      for (std::size_t j = 0; j < paths.size(); ++j)
        if (!basis.at(i, j).is_zero()) c.terms.push_back({basis.at(i, j), paths[j]});
      relations_.push_back(std::move(c));
    }
    block_rel_.emplace(st, std::move(basis));
  }
}

bool QuadraticPresentation::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const RelationCombo& r) { return r.is_monomial(); });
}

std::vector<std::pair<int, int>> QuadraticPresentation::blocks() const {
  std::set<std::pair<int, int>> out;
  for (int a = 0; a < quiver_.num_arrows(); ++a)
    for (int b : quiver_.out_arrows(quiver_.target(a))) out.insert({quiver_.source(a), quiver_.target(b)});
  return {out.begin(), out.end()};
}

std::vector<Path> QuadraticPresentation::block_paths(int s, int t) const {
  std::vector<Path> out;
  for (int a : quiver_.out_arrows(s))
    for (int b : quiver_.out_arrows(quiver_.target(a)))
      if (quiver_.target(b) == t) out.push_back(Path{s, t, {a, b}});
  std::sort(out.begin(), out.end());
  return out;
}

ExactMatrix QuadraticPresentation::block_relations(int s, int t) const {
  auto it = block_rel_.find({s, t});
  if (it != block_rel_.end()) return it->second;
  return ExactMatrix(field_, 0, block_paths(s, t).size());
}

bool QuadraticPresentation::in_ideal(int a, int b) const {
  if (quiver_.target(a) != quiver_.source(b)) return false;
  const int s = quiver_.source(a), t = quiver_.target(b);
  auto paths = block_paths(s, t);
  Vec v(paths.size(), Scalar::zero(field_));
  v[path_index(paths, Path{s, t, {a, b}})] = Scalar::one(field_);
  return in_row_space(block_relations(s, t), v);
}

QuadraticPresentation QuadraticPresentation::with_name(std::string name) const {
  QuadraticPresentation c = *this;
  c.name_ = std::move(name);
  return c;
}

QuadraticPresentation QuadraticPresentation::with_field(Field f) const {
  if (f == field_) return *this;
  std::vector<RelationCombo> rels;
  for (const auto& r : relations_) {
    RelationCombo c;
    for (const auto& t : r.terms) {
      mpq_class q = t.coef.as_rational();
      Scalar s = Scalar::from_fraction(f, q.get_num(), q.get_den());
      if (!s.is_zero()) c.terms.push_back({s, t.path});
    }
    if (!c.terms.empty()) rels.push_back(std::move(c));
  }
  return QuadraticPresentation(name_, quiver_, f, rels);
}

QuadraticPresentation relabel(const QuadraticPresentation& a,
                              const std::map<std::string, std::string>& vertex_map,
                              const std::map<std::string, std::string>& arrow_map) {
  const Quiver& q = a.quiver();
  auto vname = [&](const std::string& v) {
    auto it = vertex_map.find(v);
    return it == vertex_map.end() ? v : it->second;
  };
  auto aname = [&](const std::string& x) {
    auto it = arrow_map.find(x);
    return it == arrow_map.end() ? x : it->second;
  };
  std::vector<std::string> vs;
  for (const auto& v : q.vertices()) vs.push_back(vname(v));
  std::vector<Arrow> as;
  for (const auto& ar : q.arrows()) as.push_back({aname(ar.id), vname(ar.source), vname(ar.target)});
  Quiver nq(vs, as);
  std::vector<RelationCombo> rels;
  for (const auto& r : a.relations()) {
    RelationCombo c;
    for (const auto& t : r.terms) {
      std::vector<int> arrows;
      for (int x : t.path.arrows) arrows.push_back(nq.arrow_index(aname(q.arrow(x).id)));
      c.terms.push_back({t.coef, make_path(nq, arrows)});
    }
    rels.push_back(std::move(c));
  }
  return QuadraticPresentation(a.name(), nq, a.field(), rels);
}

std::string combo_to_string(const Quiver& q, const RelationCombo& r) {
  std::string s;
  bool first = true;
  for (const auto& t : r.terms) {
    std::string c = t.coef.to_string();
    bool neg = t.coef.is_negative();
    if (neg) c.erase(0, 1);
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (c != "1") s += c + " ";
    s += path_to_string(q, t.path);
    first = false;
  }
  return s;
}

CycleProfile cycle_profile(const QuadraticPresentation& a) {
  const Quiver& q = a.quiver();
  ShapeReport shape = underlying_shape(q);
  if (shape.cycle_rank != 1)
    throw Error(ErrorKind::NotOneCycle, "cycle rank is " + std::to_string(shape.cycle_rank));
  CycleProfile p;
  p.cycle = *shape.unique_cycle;
  const auto& c = p.cycle;

  std::map<int, std::size_t> pos;  // arrow -> position on the cycle
  for (std::size_t i = 0; i < c.arrows.size(); ++i) pos[c.arrows[i]] = i;
  for (const auto& r : a.relations()) {
    if (!r.is_monomial()) continue;
    int x = r.terms[0].path.arrows[0], y = r.terms[0].path.arrows[1];
    if (!pos.count(x) || !pos.count(y)) continue;
    bool cx = c.clockwise[pos[x]], cy = c.clockwise[pos[y]];
    if (cx != cy) continue;
    (cx ? p.r_plus : p.r_minus) += 1;
  }

  std::set<int> on_cycle(c.vertices.begin(), c.vertices.end());
  std::vector<char> used(q.num_arrows(), 0);
  for (int x : c.arrows) used[x] = 1;
  for (int v : c.vertices) {
    std::vector<int> touching = q.out_arrows(v);
    touching.insert(touching.end(), q.in_arrows(v).begin(), q.in_arrows(v).end());
    std::sort(touching.begin(), touching.end());
    for (int link : touching) {
      if (used[link]) continue;
      Branch b;
      b.attach_vertex = v;
      b.link_arrow = link;
      b.toward_cycle = q.target(link) == v;
      std::vector<int> stack{link};
      used[link] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        b.arrows.push_back(x);
        for (int end : {q.source(x), q.target(x)}) {
          if (on_cycle.count(end)) continue;
          for (const auto* lst : {&q.out_arrows(end), &q.in_arrows(end)})
            for (int y : *lst)
              if (!used[y]) {
                used[y] = 1;
                stack.push_back(y);
              }
        }
      }
      std::sort(b.arrows.begin(), b.arrows.end());
      p.branches.push_back(std::move(b));
    }
  }
  return p;
}

}  // namespace koszuldual
