#include "bqtop/dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace bqtop {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("ParseError", std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

/// One line with a column cursor.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  /// Any run of non-space characters.
  std::string word(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string name() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !name_start(text_[pos_])) fail("expected an arrow name");
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<Rational> coefficient() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t d = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (d == pos_) fail("expected a denominator");
      den = std::string(text_.substr(d, pos_ - d));
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
    }
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
  }

  void end() {
    if (!done()) fail("unexpected trailing text");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Cursor c(raw, line);
    if (!c.done()) f(c);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

template <class F>
auto positioned(const Cursor& at, std::size_t column, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.kind(), std::to_string(at.line()) + ":" + std::to_string(column) + ": " +
                              e.what());
  }
}

RelVector parse_relation(Cursor& c, const BoundQuiver& q) {
  std::map<Path, Rational> terms;
  bool first = true;
  for (;;) {
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    Rational coef = 1;
    if (auto k = c.coefficient()) {
      coef = *k;
      c.expect("*");
    }
    std::size_t at = c.column();
    std::vector<std::string> names{c.name()};
    while (c.accept('*')) names.push_back(c.name());
    Path p = positioned(c, at, [&] { return q.path_from_names(names); });
    terms[p] += sign * coef;
    if (c.done()) break;
  }
  RelVector rel;
  rel.source = terms.begin()->first.source;
  rel.target = terms.begin()->first.target;
  rel.terms = std::move(terms);
  return rel;
}

}  // namespace

BoundQuiver parse_quiver(std::string_view text) {
  BoundQuiver q;
  bool have_field = false;
  for_each_line(text, [&](Cursor& c) {
    std::size_t col = c.column();
    std::string kw = c.word("a keyword");
    if (kw == "vertex") {
      std::string id = c.word("a vertex id");
      c.end();
      q.add_vertex(id);
    } else if (kw == "arrow") {
      std::size_t at = c.column();
      std::string name = c.name();
      std::string src = c.word("a source vertex");
      std::string dst = c.word("a target vertex");
      c.end();
      positioned(c, at, [&] { return q.add_arrow(name, src, dst); });
    } else if (kw == "rel") {
      std::size_t at = c.column();
      RelVector rel = parse_relation(c, q);
      positioned(c, at, [&] {
        q.add_relation(rel);
        return 0;
      });
    } else if (kw == "field") {
      std::string f = c.word("a field");
      c.end();
      if (have_field) throw ParseError(c.line(), col, "field given twice");
      if (!q.relations().empty()) throw ParseError(c.line(), col, "field must precede relations");
      have_field = true;
      positioned(c, col, [&] {
        q.set_field(Field::parse(f));
        return 0;
      });
    } else {
      throw ParseError(c.line(), col, "unknown keyword '" + kw + "'");
    }
  });
  if (q.vertex_count() == 0) throw MalformedQuiver("quiver has no vertices");
  return q;
}

std::string relation_string(const BoundQuiver& q, const RelVector& rel) {
  std::string out;
  bool first = true;
  for (const auto& [p, c] : rel.terms) {
    Rational m = abs(c);
    if (sgn(c) < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    if (m != 1) out += m.get_str() + "*";
    out += q.path_name(p);
    first = false;
  }
  return out;
}

std::string serialize(const BoundQuiver& q) {
  std::ostringstream out;
  if (!q.field().is_rational()) out << "field " << q.field().name() << "\n";
  for (const auto& v : q.vertices()) out << "vertex " << v << "\n";
  for (const auto& a : q.arrows())
    out << "arrow " << a.name << " " << q.vertex_name(a.source) << " " << q.vertex_name(a.target)
        << "\n";
  for (const auto& rel : q.relations()) out << "rel " << relation_string(q, rel) << "\n";
  return out.str();
}

namespace {

/// Returns true for a vmap/amap line and records the pair.
bool parse_map_line(Cursor& c, const std::string& kw, const BoundQuiver& from,
                    const BoundQuiver& to, QuiverMorphism& m, std::vector<bool>& vset,
                    std::vector<bool>& aset) {
  if (kw != "vmap" && kw != "amap") return false;
  std::size_t at = c.column();
  std::string a = c.word("a name");
  c.expect("->");
  std::size_t bt = c.column();
  std::string b = c.word("a name");
  c.end();
  if (kw == "vmap") {
    if (!from.has_vertex(a)) throw ParseError(c.line(), at, "unknown vertex '" + a + "'");
    if (!to.has_vertex(b)) throw ParseError(c.line(), bt, "unknown vertex '" + b + "'");
    std::size_t i = from.vertex(a);
    if (vset[i]) throw ParseError(c.line(), at, "vertex '" + a + "' mapped twice");
    vset[i] = true;
    m.vertex_map[i] = to.vertex(b);
  } else {
    if (!from.has_arrow(a)) throw ParseError(c.line(), at, "unknown arrow '" + a + "'");
    if (!to.has_arrow(b)) throw ParseError(c.line(), bt, "unknown arrow '" + b + "'");
    std::size_t i = from.arrow_index(a);
    if (aset[i]) throw ParseError(c.line(), at, "arrow '" + a + "' mapped twice");
    aset[i] = true;
    m.arrow_map[i] = to.arrow_index(b);
  }
  return true;
}

}  // namespace

QuiverMorphism parse_morphism(std::string_view text, const BoundQuiver& from,
                              const BoundQuiver& to) {
  QuiverMorphism m;
  m.vertex_map.assign(from.vertex_count(), 0);
  m.arrow_map.assign(from.arrow_count(), 0);
  std::vector<bool> vset(from.vertex_count(), false);
  std::vector<bool> aset(from.arrow_count(), false);
  std::size_t last_line = 0;
  for_each_line(text, [&](Cursor& c) {
    last_line = c.line();
    std::size_t col = c.column();
    std::string kw = c.word("a keyword");
    if (!parse_map_line(c, kw, from, to, m, vset, aset))
      throw ParseError(c.line(), col, "unknown keyword '" + kw + "'");
  });
  for (std::size_t v = 0; v < vset.size(); ++v)
    if (!vset[v])
      throw ParseError(last_line + 1, 1, "vertex '" + from.vertex_name(v) + "' is not mapped");
  for (std::size_t a = 0; a < aset.size(); ++a)
    if (!aset[a])
      throw ParseError(last_line + 1, 1, "arrow '" + from.arrow(a).name + "' is not mapped");
  return m;
}

GroupAction parse_group(std::string_view text, const BoundQuiver& cover) {
  GroupAction g;
  std::vector<bool> vset, aset;
  auto open = [&](const std::string& name) {
    QuiverMorphism id;
    for (std::size_t v = 0; v < cover.vertex_count(); ++v) id.vertex_map.push_back(v);
    for (std::size_t a = 0; a < cover.arrow_count(); ++a) id.arrow_map.push_back(a);
    g.names.push_back(name);
    g.elements.push_back(std::move(id));
    vset.assign(cover.vertex_count(), false);
    aset.assign(cover.arrow_count(), false);
  };
  for_each_line(text, [&](Cursor& c) {
    std::size_t col = c.column();
    std::string kw = c.word("a keyword");
    if (kw == "element") {
      std::string name = c.word("an element name");
      c.end();
      for (const auto& n : g.names)
        if (n == name) throw ParseError(c.line(), col, "element '" + name + "' given twice");
      open(name);
      return;
    }
    if (g.elements.empty()) throw ParseError(c.line(), col, "expected 'element'");
    if (!parse_map_line(c, kw, cover, cover, g.elements.back(), vset, aset))
      throw ParseError(c.line(), col, "unknown keyword '" + kw + "'");
  });
  if (g.elements.empty()) throw ParseError(1, 1, "group file has no elements");
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IOError", "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace bqtop
