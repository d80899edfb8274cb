#include "koszuldual/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "koszuldual/dual.hpp"
#include "koszuldual/errors.hpp"
#include "koszuldual/homotopy.hpp"
#include "koszuldual/reflections.hpp"
#include "koszuldual/resolution.hpp"

namespace koszuldual {

GentleReport is_gentle(const QuadraticPresentation& a) {
  const Quiver& q = a.quiver();
  auto fail = [](std::string why) { return GentleReport{false, std::move(why)}; };
  for (const auto& r : a.relations())
    if (!r.is_monomial()) return fail("relation " + combo_to_string(q, r) + " is not monomial");
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (q.in_arrows(v).size() > 2)
      return fail("vertex " + q.vertex(v) + " has " + std::to_string(q.in_arrows(v).size()) + " incoming arrows");
    if (q.out_arrows(v).size() > 2)
      return fail("vertex " + q.vertex(v) + " has " + std::to_string(q.out_arrows(v).size()) + " outgoing arrows");
  }
  for (int b = 0; b < q.num_arrows(); ++b) {
    int free_in = 0, zero_in = 0, free_out = 0, zero_out = 0;
    for (int x : q.in_arrows(q.source(b))) (a.in_ideal(x, b) ? zero_in : free_in) += 1;
    for (int y : q.out_arrows(q.target(b))) (a.in_ideal(b, y) ? zero_out : free_out) += 1;
    const std::string& id = q.arrow(b).id;
    if (free_in > 1) return fail("two arrows continue freely into " + id);
    if (free_out > 1) return fail(id + " continues freely into two arrows");
    if (zero_in > 1) return fail("two zero relations end with " + id);
    if (zero_out > 1) return fail("two zero relations start with " + id);
  }
  return {};
}

const char* tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::DynkinTree: return "dynkin_tree";
    case ClassTag::DynkinA: return "dynkin_a";
    case ClassTag::EuclideanA: return "euclidean_a";
    case ClassTag::Discrete: return "discrete";
    case ClassTag::Unknown: return "unknown";
  }
  return "unknown";
}

DerivedClass discrete_class(int r, int n, int m) {
  if (r < 1 || n < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "A(r,n,m) needs r, n, m >= 1");
  DerivedClass c;
  c.tag = ClassTag::Discrete;
  c.r = c.delta = r;
  c.n = n;
  c.m = m;
  c.balance = n - m;
  return c;
}

DerivedClass euclidean_class(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "C(n,m) needs n, m >= 1");
  DerivedClass c;
  c.tag = ClassTag::EuclideanA;
  c.n = n;
  c.m = m;
  c.s = n + m - 1;
  c.balance = n - m;
  return c;
}

std::string to_string(const DerivedClass& c) {
  switch (c.tag) {
    case ClassTag::DynkinTree: return "DynkinTree(" + c.tree_type + ")";
    case ClassTag::DynkinA: return "DynkinA(" + std::to_string(c.n) + ")";
    case ClassTag::EuclideanA:
      return "EuclideanA(" + std::to_string(c.s) + "; " + std::to_string(c.n) + "," + std::to_string(c.m) + ")";
    case ClassTag::Discrete:
      return "Discrete(" + std::to_string(c.r) + "," + std::to_string(c.n) + "," + std::to_string(c.m) + ")";
    case ClassTag::Unknown: return "Unknown(" + c.diagnostic + ")";
  }
  return "?";
}

namespace {

Quiver tree_quiver(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::string> vs;
  std::vector<Arrow> as;
  for (const auto& [u, v] : edges) {
    vs.insert(u);
    vs.insert(v);
    as.push_back({"e" + std::to_string(as.size()), u, v});
  }
  return Quiver(std::vector<std::string>(vs.begin(), vs.end()), as);
}

}  // namespace

bool same_class(const DerivedClass& a, const DerivedClass& b, bool unordered) {
  if (a.tag != b.tag) return false;
  auto counts = [&](const DerivedClass& c) {
    return unordered ? std::make_pair(std::min(c.n, c.m), std::max(c.n, c.m)) : std::make_pair(c.n, c.m);
  };
  switch (a.tag) {
    case ClassTag::DynkinA: return a.n == b.n;
    case ClassTag::DynkinTree:
      return a.tree_type == b.tree_type &&
             canonical_graph_form(tree_quiver(a.tree_edges)) == canonical_graph_form(tree_quiver(b.tree_edges));
    case ClassTag::EuclideanA: return a.s == b.s && counts(a) == counts(b);
    case ClassTag::Discrete: return a.r == b.r && counts(a) == counts(b);
    case ClassTag::Unknown: return true;
  }
  return false;
}

namespace {

std::string tree_type(const Quiver& q) {
  const int n = q.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < q.num_arrows(); ++x) {
    adj[q.source(x)].push_back(q.target(x));
    adj[q.target(x)].push_back(q.source(x));
  }
  std::vector<int> branch;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() > 2) branch.push_back(v);
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1 || adj[branch[0]].size() > 3) return "tree";
  std::vector<int> arms;
  for (int start : adj[branch[0]]) {
    int prev = branch[0], cur = start, len = 1;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return "tree";
}

bool id_before(const std::string& a, const std::string& b) {
  const std::string ba = base_id(a), bb = base_id(b);
  if (ba != bb) return id_less(ba, bb);
  return id_less(a, b);
}

// the one-cycle quiver with its relation pairs, edited in place while branches are spliced in
struct Splicer {
  const Quiver& q;
  std::vector<int> src, tgt;
  std::set<std::pair<int, int>> zero;
  std::vector<int> cv, ce;  // edge ce[i] joins cv[i] and cv[i+1]
  std::vector<char> on_cycle;
  std::vector<std::string> trace;
  std::string failure;

  Splicer(const QuadraticPresentation& a, const CycleSkeleton& c) : q(a.quiver()) {
    for (int x = 0; x < q.num_arrows(); ++x) {
      src.push_back(q.source(x));
      tgt.push_back(q.target(x));
    }
    for (const auto& r : a.relations()) zero.insert({r.terms[0].path.arrows[0], r.terms[0].path.arrows[1]});
    cv = c.vertices;
    ce = c.arrows;
    on_cycle.assign(q.num_arrows(), 0);
    for (int x : ce) on_cycle[x] = 1;
  }

  std::vector<int> outs(int v) const {
    std::vector<int> r;
    for (int x = 0; x < q.num_arrows(); ++x)
      if (src[x] == v) r.push_back(x);
    return r;
  }
  std::vector<int> ins(int v) const {
    std::vector<int> r;
    for (int x = 0; x < q.num_arrows(); ++x)
      if (tgt[x] == v) r.push_back(x);
    return r;
  }
  bool is_zero(int x, int y) const { return zero.count({x, y}) > 0; }
  const std::string& id(int x) const { return q.arrow(x).id; }
  const std::string& vid(int v) const { return q.vertex(v); }

  bool on_cycle_vertex(int v) const { return std::find(cv.begin(), cv.end(), v) != cv.end(); }

  // new arrows composable with `arrow` through u other than `except`; their status would be invented
  bool fresh_pairs(const std::vector<int>& around, int except, const std::string& where) {
    for (int y : around)
      if (y != except) {
        failure = "splicing at " + where + " would create a length-2 path through " + id(y) + " with no status";
        return true;
      }
    return false;
  }

  void insert(int edge_pos, int u, bool v_first, int alpha, int edge_arrow) {
    // v_first: the cycle vertex touched by alpha is cv[edge_pos]
    const int at = edge_pos + 1;
    cv.insert(cv.begin() + at, u);
    if (v_first) {
      ce[edge_pos] = alpha;
      ce.insert(ce.begin() + at, edge_arrow);
    } else {
      ce[edge_pos] = edge_arrow;
      ce.insert(ce.begin() + at, alpha);
    }
    on_cycle[alpha] = 1;
  }

  bool still_gentle() {
    for (int v = 0; v < q.num_vertices(); ++v)
      if (ins(v).size() > 2 || outs(v).size() > 2) {
        failure = "vertex " + vid(v) + " exceeds valence 2 after splicing";
        return false;
      }
    for (int b = 0; b < q.num_arrows(); ++b) {
      int fi = 0, zi = 0, fo = 0, zo = 0;
      for (int x : ins(src[b])) (is_zero(x, b) ? zi : fi) += 1;
      for (int y : outs(tgt[b])) (is_zero(b, y) ? zo : fo) += 1;
      if (fi > 1 || zi > 1 || fo > 1 || zo > 1) {
        failure = "continuations at " + id(b) + " stop being gentle after splicing";
        return false;
      }
    }
    return true;
  }

  bool step() {
    // next branch arrow touching the cycle, smallest base id first
    int alpha = -1;
    for (int x = 0; x < q.num_arrows(); ++x) {
      if (on_cycle[x]) continue;
      if (!on_cycle_vertex(src[x]) && !on_cycle_vertex(tgt[x])) continue;
      if (alpha < 0 || id_before(id(x), id(alpha))) alpha = x;
    }
    if (alpha < 0) return false;
    const bool into = on_cycle_vertex(tgt[alpha]);
    const int v = into ? tgt[alpha] : src[alpha];
    const int u = into ? src[alpha] : tgt[alpha];
    const int L = static_cast<int>(cv.size());
    const int i = static_cast<int>(std::find(cv.begin(), cv.end(), v) - cv.begin());
    const int prev_pos = (i - 1 + L) % L, next_pos = i;
    const int e_prev = ce[prev_pos], e_next = ce[next_pos];
    for (int x = 0; x < q.num_arrows(); ++x)
      if (x != alpha && !on_cycle[x] && (src[x] == v || tgt[x] == v)) {
        failure = "two branch arrows at " + vid(v) + " (" + id(alpha) + ", " + id(x) + ")";
        return false;
      }
    const bool prev_in = tgt[e_prev] == v, next_in = tgt[e_next] == v;
    // which cycle edge receives u, and the arrow lying on it
    int edge = -1;
    std::string how;
    if (prev_in != next_in) {
      const int c_in = prev_in ? e_prev : e_next, c_out = prev_in ? e_next : e_prev;
      const bool was_zero = is_zero(c_in, c_out);
      zero.erase({c_in, c_out});
      if (into) {
        edge = c_in;
        if (fresh_pairs(outs(u), alpha, vid(v))) return false;
        tgt[c_in] = u;
        if (was_zero) zero.insert({c_in, alpha});
      } else {
        edge = c_out;
        if (fresh_pairs(ins(u), alpha, vid(v))) return false;
        src[c_out] = u;
        if (was_zero) zero.insert({alpha, c_out});
      }
      how = "through vertex";
    } else if (!prev_in && into) {
      // cycle source: the zero partner moves to u, the free path stays on the cycle
      const bool zp = is_zero(alpha, e_prev), zn = is_zero(alpha, e_next);
      if (zp == zn) {
        failure = id(alpha) + " has no unique zero continuation at the cycle source " + vid(v);
        return false;
      }
      edge = zp ? e_prev : e_next;
      if (fresh_pairs(ins(u), -1, vid(v))) return false;
      zero.erase({alpha, edge});
      src[edge] = u;
      how = "at cycle source";
    } else if (prev_in && !into) {
      // cycle sink: the free partner moves to u, the zero path stays on the cycle
      const bool zp = is_zero(e_prev, alpha), zn = is_zero(e_next, alpha);
      if (zp == zn) {
        failure = id(alpha) + " has no unique zero predecessor at the cycle sink " + vid(v);
        return false;
      }
      edge = zp ? e_next : e_prev;
      if (fresh_pairs(outs(u), -1, vid(v))) return false;
      tgt[edge] = u;
      how = "at cycle sink";
    } else {
      failure = "vertex " + vid(v) + " has three arrows in one direction";
      return false;
    }
    const int edge_pos = edge == e_prev ? prev_pos : next_pos;
    insert(edge_pos, u, cv[edge_pos] == v, alpha, edge);
    trace.push_back("absorb " + id(alpha) + " " + how + " " + vid(v) + " beside " + id(edge));
    return still_gentle();
  }
};

void unknown(DerivedClass& c, std::string why) {
  c.tag = ClassTag::Unknown;
  c.diagnostic = std::move(why);
}

}  // namespace

DerivedClass classify(const QuadraticPresentation& a) {
  DerivedClass c;
  const Quiver& q = a.quiver();
  if (!q.is_connected()) {
    unknown(c, "quiver is not connected");
    return c;
  }
  ShapeReport shape = underlying_shape(q);
  GentleReport g = is_gentle(a);

  if (shape.is_tree) {
    if (g.gentle) {
      c.tag = ClassTag::DynkinA;
      c.n = q.num_vertices();
      c.trace.push_back("gentle tree algebra on " + std::to_string(c.n) + " vertices");
      return c;
    }
    c.tag = ClassTag::DynkinTree;
    c.tree_type = tree_type(q);
    for (const auto& x : q.arrows()) c.tree_edges.push_back({x.source, x.target});
    c.trace.push_back("quadratic algebra on a tree quiver; not gentle (" + g.violation + ")");
    return c;
  }

  auto finish_unknown = [&](std::string why) {
    try {
      if (is_finite_dimensional(dual(a)).verdict == Finiteness::Infinite)
        why += "; the quadratic dual is infinite dimensional";
    } catch (const Error&) {
    }
    unknown(c, std::move(why));
    return c;
  };

  if (shape.cycle_rank != 1)
    return finish_unknown("cycle rank " + std::to_string(shape.cycle_rank) + "; only one-cycle algebras are classified");
  if (!g.gentle) return finish_unknown("not gentle: " + g.violation);
  if (shape.unique_cycle->oriented()) return finish_unknown("the cycle is oriented");

  Splicer sp(a, *shape.unique_cycle);
  std::set<int> original(shape.unique_cycle->arrows.begin(), shape.unique_cycle->arrows.end());
  while (sp.step()) {
  }
  c.trace = sp.trace;
  if (!sp.failure.empty()) return finish_unknown("branch absorption stopped: " + sp.failure);

  // orientation: the original cycle arrow with the smallest base id runs clockwise
  int ref = *std::min_element(original.begin(), original.end(),
                              [&](int x, int y) { return id_before(q.arrow(x).id, q.arrow(y).id); });
  const int L = static_cast<int>(sp.ce.size());
  const int rp = static_cast<int>(std::find(sp.ce.begin(), sp.ce.end(), ref) - sp.ce.begin());
  const bool forward = sp.src[ref] == sp.cv[rp];
  AbsorbedCycle cyc;
  std::vector<int> order;
  for (int k = 0; k < L; ++k) {
    int pos = forward ? (rp + k) % L : ((rp - k) % L + L) % L;
    int x = sp.ce[pos];
    order.push_back(x);
    // traversing edge pos forward means leaving cv[pos]
    bool cw = forward ? sp.src[x] == sp.cv[pos] : sp.src[x] == sp.cv[(pos + 1) % L];
    cyc.arrows.push_back(q.arrow(x).id);
    cyc.clockwise.push_back(cw);
    (cw ? cyc.n : cyc.m) += 1;
  }
  for (int k = 0; k < L; ++k) {
    int kn = (k + 1) % L;
    if (cyc.clockwise[k] != cyc.clockwise[kn]) continue;
    bool cw = cyc.clockwise[k];
    int x = cw ? order[k] : order[kn], y = cw ? order[kn] : order[k];
    (cw ? cyc.paths_plus : cyc.paths_minus) += 1;
    if (sp.is_zero(x, y)) {
      (cw ? cyc.r_plus : cyc.r_minus) += 1;
      cyc.relations.push_back(q.arrow(x).id + "*" + q.arrow(y).id);
    }
  }
  c.n = cyc.n;
  c.m = cyc.m;
  c.delta = cyc.r_plus - cyc.r_minus;
  c.balance = cyc.paths_plus - cyc.paths_minus;
  c.trace.push_back("cycle C(" + std::to_string(c.n) + "," + std::to_string(c.m) + ") with r+ = " +
                    std::to_string(cyc.r_plus) + ", r- = " + std::to_string(cyc.r_minus));
  if (c.delta == 0) {
    c.tag = ClassTag::EuclideanA;
    c.s = c.n + c.m - 1;
  } else {
    c.tag = ClassTag::Discrete;
    c.r = std::abs(c.delta);
  }
  c.cycle = std::move(cyc);
  return c;
}

DerivedClass dual_class(const DerivedClass& c) {
  DerivedClass d;
  switch (c.tag) {
    case ClassTag::DynkinA:
    case ClassTag::DynkinTree:
      d = c;
      d.trace = {"tree classes are shared with the dual"};
      return d;
    case ClassTag::Unknown: throw Error(ErrorKind::OutOfScope, "no dual class for " + to_string(c));
    default: break;
  }
  // on the same cycle the dual's zero relations are the complementary consecutive paths
  d.n = c.n;
  d.m = c.m;
  d.balance = c.balance;
  d.delta = c.balance - c.delta;
  if (d.delta == 0) {
    d.tag = ClassTag::EuclideanA;
    d.s = d.n + d.m - 1;
  } else {
    d.tag = ClassTag::Discrete;
    d.r = std::abs(d.delta);
  }
  d.trace = {"r' = |(P+ - P-) - (r+ - r-)| = " + std::to_string(std::abs(d.delta)) + " from " + to_string(c)};
  return d;
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::NotEquivalent: return "not_equivalent";
    case Equivalence::Unknown: return "unknown";
  }
  return "unknown";
}

EquivalenceVerdict decide_equiv(const QuadraticPresentation& a, std::optional<int> cutoff) {
  EquivalenceVerdict v;
  v.algebra_class = classify(a);

  KoszulVerdict k = koszul_check(a, cutoff);
  v.koszul = k.koszul;
  v.cutoff = k.cutoff;
  if (!k.koszul) {
    v.notes.push_back("not Koszul: generator of step " + std::to_string(k.step) + " in degree " +
                      std::to_string(k.degree));
    return v;
  }
  if (!k.certified) v.notes.push_back("Koszul only up to cutoff " + std::to_string(k.cutoff));
  GldimReport gd = gldim(a, cutoff);
  if (!gd.value) {
    v.notes.push_back("global dimension not finite within cutoff " + std::to_string(gd.cutoff) +
                      "; the Yoneda algebra is not finite dimensional");
    return v;
  }

  try {
    v.simply_connected = to_string(simply_connected(a).verdict);
  } catch (const Error& e) {
    v.simply_connected = "unknown";
    v.notes.push_back(std::string("simple connectedness: ") + e.what());
  }

  const DerivedClass& c = v.algebra_class;
  if (c.tag != ClassTag::Unknown) {
    v.dual_class = dual_class(c);
    DerivedClass direct = classify(dual(a));
    if (direct.tag != ClassTag::Unknown && !same_class(direct, *v.dual_class))
      v.notes.push_back("classifying the dual directly gives " + to_string(direct));
  }

  if (v.simply_connected == "yes") {
    v.verdict = Equivalence::Equivalent;
    v.rule = "theorem-1";
    return v;
  }
  switch (c.tag) {
    case ClassTag::Discrete:
      v.verdict = c.n == c.m ? Equivalence::Equivalent : Equivalence::NotEquivalent;
      v.rule = "theorem-2";
      break;
    case ClassTag::DynkinA:
    case ClassTag::DynkinTree:
      v.verdict = Equivalence::Equivalent;
      v.rule = "theorem-2";
      break;
    case ClassTag::EuclideanA:
      v.verdict = c.n == c.m ? Equivalence::Equivalent : Equivalence::NotEquivalent;
      v.rule = "theorem-3b";
      break;
    case ClassTag::Unknown: v.notes.push_back("no rule applies: " + c.diagnostic); break;
  }
  return v;
}

}  // namespace koszuldual
