#include "koszuldual/io.hpp"

#include <cctype>
#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "koszuldual/errors.hpp"

namespace koszuldual {

namespace {

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c == '.' || c == '^' || c >= 0x80;
}

// Cursor over one logical piece of a line; columns are 1-based byte offsets.
struct Cursor {
  const std::string& s;
  std::size_t i;
  int line;

  int col() const { return static_cast<int>(i) + 1; }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat(const char* lit) {
    skip_ws();
    std::size_t n = std::char_traits<char>::length(lit);
    if (s.compare(i, n, lit) == 0) {
      i += n;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                            std::to_string(col()) + ": " + msg,
                line, col());
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  // identifier, with optional bracketed integer suffixes such as a[-2]
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size()) {
      unsigned char c = static_cast<unsigned char>(s[i]);
      if (ident_char(c)) {
        ++i;
      } else if (c == '[' && i > start) {
        std::size_t j = i + 1;
        if (j < s.size() && s[j] == '-') ++j;
        std::size_t d = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == d || j >= s.size() || s[j] != ']') break;
        i = j + 1;
      } else {
        break;
      }
    }
    if (i == start) fail("expected an identifier");
    return s.substr(start, i - start);
  }
};

struct RawTerm {
  std::vector<std::string> atoms;
  int sign = 1;
  int col = 0;
};

struct RawRelation {
  std::vector<RawTerm> terms;
  int line = 0, col = 0;
};

bool is_number(const std::string& a) {
  if (a.empty()) return false;
  std::size_t slash = a.find('/');
  auto digits = [](const std::string& x) {
    return !x.empty() && std::all_of(x.begin(), x.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (slash == std::string::npos) return digits(a);
  return digits(a.substr(0, slash)) && digits(a.substr(slash + 1));
}

RawRelation read_relation(Cursor& c) {
  RawRelation r;
  r.line = c.line;
  c.skip_ws();
  r.col = c.col();
  int sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  while (true) {
    RawTerm t;
    t.sign = sign;
    c.skip_ws();
    t.col = c.col();
    // atoms separated by '*' or blanks; a number atom may carry a '/'
    while (true) {
      c.skip_ws();
      std::size_t st = c.i;
      while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
      if (c.i > st && c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        std::size_t d = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == d) c.fail("malformed fraction");
        t.atoms.push_back(c.s.substr(st, c.i - st));
      } else {
        c.i = st;
        t.atoms.push_back(c.ident());
      }
      c.skip_ws();
      if (c.eat('*')) continue;
      if (c.i < c.s.size() && ident_char(static_cast<unsigned char>(c.s[c.i]))) continue;
      break;
    }
    r.terms.push_back(std::move(t));
    if (c.done()) break;
    if (c.eat('+'))
      sign = 1;
    else if (c.eat('-'))
      sign = -1;
    else
      c.fail("expected '+', '-' or ';'");
  }
  return r;
}

// Splits on ';' keeping column offsets, then feeds each piece to f.
template <class F>
void for_each_item(const std::string& line, std::size_t from, int lineno, F f) {
  std::size_t start = from;
  while (start <= line.size()) {
    std::size_t end = line.find(';', start);
    if (end == std::string::npos) end = line.size();
    std::string piece = line.substr(0, end);  // keep prefix so columns stay true
    Cursor c{piece, start, lineno};
    if (!c.done()) f(c);
    start = end + 1;
  }
}

}  // namespace

Field parse_field(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "Q") return Field::rationals();
  std::string digits;
  if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  else if (s.rfind("GF:", 0) == 0)
    digits = s.substr(3);
  else
    throw Error(ErrorKind::SyntaxError, "unknown field '" + raw + "' (expected Q, GF(p) or GF:p)");
  if (digits.empty() || digits.size() > 10 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::SyntaxError, "bad prime in '" + raw + "'");
  unsigned long long p = std::stoull(digits);
  try {
    return Field::prime(static_cast<std::uint32_t>(p > 0xffffffffull ? 0 : p));
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::SemanticError, e.what());
  }
}

QuadraticPresentation parse(const std::string& text, std::optional<Field> field_override) {
  std::string name;
  Field field = Field::rationals();
  struct Pos {
    int line, col;
  };
  std::vector<std::pair<std::string, Pos>> vertices;
  struct RawArrow {
    std::string id, s, t;
    Pos pos;
  };
  std::vector<RawArrow> arrows;
  std::vector<RawRelation> relations;

  enum class Section { None, Vertices, Arrows, Relations } section = Section::None;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Cursor c{line, 0, lineno};
    if (c.done()) continue;

    std::size_t body = c.i;
    auto keyword = [&](const char* kw) {
      Cursor k{line, c.i, lineno};
      if (!k.eat(kw)) return false;
      if (!k.eat(':')) return false;
      body = k.i;
      return true;
    };
    if (line.compare(c.i, 6, "quiver") == 0 &&
        (c.i + 6 == line.size() || std::isspace(static_cast<unsigned char>(line[c.i + 6])))) {
      Cursor k{line, c.i + 6, lineno};
      name = k.done() ? "" : k.ident();
      if (!k.done()) k.fail("unexpected text after quiver name");
      section = Section::None;
      continue;
    }
    if (keyword("field")) {
      try {
        field = parse_field(line.substr(body));
      } catch (const Error& e) {
        throw Error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what(), lineno,
                    static_cast<int>(body) + 1);
      }
      section = Section::None;
      continue;
    }
    if (keyword("vertices")) {
      section = Section::Vertices;
    } else if (keyword("arrows")) {
      section = Section::Arrows;
    } else if (keyword("relations")) {
      section = Section::Relations;
    } else if (section == Section::None) {
      c.fail("expected one of quiver, field:, vertices:, arrows:, relations:");
    }

    switch (section) {
      case Section::Vertices: {
        Cursor v{line, body, lineno};
        while (!v.done()) {
          if (v.eat(',')) continue;
          v.skip_ws();
          Pos p{lineno, v.col()};
          vertices.push_back({v.ident(), p});
        }
        break;
      }
      case Section::Arrows:
        for_each_item(line, body, lineno, [&](Cursor& a) {
          a.skip_ws();
          Pos p{lineno, a.col()};
          std::string id = a.ident();
          a.expect(':');
          std::string s = a.ident();
          if (!a.eat("->")) a.fail("expected '->'");
          std::string t = a.ident();
          if (!a.done()) a.fail("unexpected text after arrow");
          arrows.push_back({id, s, t, p});
        });
        break;
      case Section::Relations:
        for_each_item(line, body, lineno, [&](Cursor& r) { relations.push_back(read_relation(r)); });
        break;
      case Section::None:
        break;
    }
  }

  if (field_override) field = *field_override;

  auto sem = [](const std::string& msg, int l, int col) -> Error {
    return Error(ErrorKind::SemanticError,
                 "line " + std::to_string(l) + ", column " + std::to_string(col) + ": " + msg, l, col);
  };

  std::vector<std::string> vids;
  std::set<std::string> seen;
  for (const auto& [v, p] : vertices) {
    if (!seen.insert(v).second) throw sem("duplicate vertex '" + v + "'", p.line, p.col);
    vids.push_back(v);
  }
  std::vector<Arrow> as;
  std::set<std::string> aseen;
  for (const auto& a : arrows) {
    if (!aseen.insert(a.id).second) throw sem("duplicate arrow '" + a.id + "'", a.pos.line, a.pos.col);
    if (seen.count(a.id)) throw sem("'" + a.id + "' is already a vertex", a.pos.line, a.pos.col);
    for (const auto& end : {a.s, a.t})
      if (!seen.count(end)) throw sem("undeclared vertex '" + end + "'", a.pos.line, a.pos.col);
    as.push_back({a.id, a.s, a.t});
  }
  Quiver q(vids, as);

  std::vector<RelationCombo> combos;
  for (const auto& r : relations) {
    RelationCombo combo;
    for (const auto& t : r.terms) {
      std::vector<std::string> atoms = t.atoms;
      Scalar coef = Scalar::from_int(field, t.sign);
      bool has_coef = !atoms.empty() && (atoms[0].find('/') != std::string::npos ||
                                         (atoms.size() == 3 && is_number(atoms[0])));
      if (has_coef) {
        const std::string& n = atoms[0];
        std::size_t slash = n.find('/');
        mpz_class num(n.substr(0, slash));
        mpz_class den(slash == std::string::npos ? "1" : n.substr(slash + 1));
        try {
          coef = coef * Scalar::from_fraction(field, num, den);
        } catch (const std::domain_error& e) {
          throw sem(e.what(), r.line, t.col);
        }
        atoms.erase(atoms.begin());
      }
      if (atoms.size() != 2)
        throw sem("relation term has length " + std::to_string(atoms.size()) + ", expected 2", r.line, t.col);
      std::vector<int> idx;
      for (const auto& at : atoms) {
        int a = q.arrow_index(at);
        if (a < 0) throw sem("undeclared arrow '" + at + "'", r.line, t.col);
        idx.push_back(a);
      }
      if (q.target(idx[0]) != q.source(idx[1]))
        throw sem("'" + atoms[0] + "*" + atoms[1] + "' is not composable", r.line, t.col);
      Path p = make_path(q, idx);
      if (!combo.terms.empty() &&
          (p.source != combo.source() || p.target != combo.target()))
        throw sem("relation mixes endpoints", r.line, t.col);
      if (!coef.is_zero()) combo.terms.push_back({coef, p});
    }
    if (combo.terms.empty()) throw sem("relation is zero", r.line, r.col);
    combos.push_back(std::move(combo));
  }
  try {
    return QuadraticPresentation(name, q, field, combos);
  } catch (const Error& e) {
    throw Error(ErrorKind::SemanticError, e.what());
  }
}

QuadraticPresentation parse_file(const std::string& path, std::optional<Field> field_override) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), field_override);
}

std::string serialize(const QuadraticPresentation& a) {
  const Quiver& q = a.quiver();
  std::ostringstream o;
  if (!a.name().empty()) o << "quiver " << a.name() << "\n";
  o << "field: " << a.field().to_string() << "\n";
  o << "vertices:";
  for (const auto& v : q.vertices()) o << " " << v;
  o << "\narrows:";
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& ar = q.arrow(i);
    o << (i ? "; " : " ") << ar.id << ": " << ar.source << " -> " << ar.target;
  }
  o << "\nrelations:";
  for (std::size_t i = 0; i < a.relations().size(); ++i)
    o << (i ? "; " : " ") << combo_to_string(q, a.relations()[i]);
  o << "\n";
  return o.str();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

}  // namespace

std::string to_dot(const QuadraticPresentation& a) {
  const Quiver& q = a.quiver();
  std::ostringstream o;
  o << "digraph " << dot_quote(a.name().empty() ? "quiver" : a.name()) << " {\n";
  o << "  rankdir=LR;\n";
  for (const auto& v : q.vertices()) o << "  " << dot_quote(v) << ";\n";
  for (const auto& ar : q.arrows())
    o << "  " << dot_quote(ar.source) << " -> " << dot_quote(ar.target) << " [label=" << dot_quote(ar.id)
      << "];\n";
  for (const auto& r : a.relations())
    o << "  " << dot_quote(q.vertex(r.source())) << " -> " << dot_quote(q.vertex(r.target()))
      << " [style=dashed, arrowhead=none, constraint=false, color=gray40, label="
      << dot_quote(combo_to_string(q, r)) << "];\n";
  o << "}\n";
  return o.str();
}

}  // namespace koszuldual
