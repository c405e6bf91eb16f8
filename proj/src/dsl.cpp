#include "taured/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "taured/error.hpp"

namespace taured {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

bool is_punct(char c) { return c == '(' || c == ')' || c == '*' || c == '+' || c == '-' || c == ';'; }

// Splits a line into words and the single-character tokens ( ) * + - ;.
// A '-' directly followed by a digit starts a word (a negative number).
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const bool negative = c == '-' && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1]));
    if (is_punct(c) && !negative) {
      out.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    ++i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && !is_punct(line[i]) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool looks_rational(const std::string& s) {
  static const std::regex re("-?[0-9]+(/[0-9]+)?");
  return std::regex_match(s, re);
}

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  AlgebraFile run() {
    std::istringstream in(text_);
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      tokens_ = tokenize(line);
      line_len_ = line.size();
      if (tokens_.empty()) continue;
      pos_ = 0;
      statement();
    }
    if (module_) fail_at(ErrorKind::Parse, line_no_, line_len_ + 1, "module '" + module_->name + "' is missing 'end'");
    return std::move(file_);
  }

private:
  [[noreturn]] void fail_at(ErrorKind kind, std::size_t line, std::size_t column, const std::string& msg) const {
    throw Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
  }
  [[noreturn]] void fail(ErrorKind kind, const Token& t, const std::string& msg) const {
    fail_at(kind, line_no_, t.column, msg);
  }
  [[noreturn]] void fail_end(const std::string& msg) const { fail_at(ErrorKind::Parse, line_no_, line_len_ + 1, msg); }

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next(const std::string& what) {
    if (at_end()) fail_end("expected " + what);
    return tokens_[pos_++];
  }
  const Token& word(const std::string& what) {
    const Token& t = next(what);
    if (t.text.size() == 1 && is_punct(t.text[0])) fail(ErrorKind::Parse, t, "expected " + what + ", found '" + t.text + "'");
    return t;
  }
  void expect_end() {
    if (!at_end()) fail(ErrorKind::Parse, peek(), "unexpected '" + peek().text + "'");
  }

  std::size_t natural(const Token& t) {
    static const std::regex re("[0-9]+");
    if (!std::regex_match(t.text, re)) fail(ErrorKind::Parse, t, "expected a nonnegative integer, found '" + t.text + "'");
    return std::stoul(t.text);
  }

  mpq_class rational(const Token& t) {
    if (!looks_rational(t.text)) fail(ErrorKind::Parse, t, "expected a rational number, found '" + t.text + "'");
    mpq_class q(t.text);
    if (q.get_den() == 0) fail(ErrorKind::Parse, t, "zero denominator");
    q.canonicalize();
    return q;
  }

  void statement() {
    const Token& kw = word("a keyword");
    if (module_ && kw.text != "map" && kw.text != "end")
      fail(ErrorKind::Parse, kw, "expected 'map' or 'end' inside module '" + module_->name + "'");
    if (kw.text == "algebra") {
      if (seen_name_) fail(ErrorKind::Parse, kw, "repeated 'algebra' line");
      seen_name_ = true;
      file_.name = word("an algebra name").text;
    } else if (kw.text == "field") {
      if (seen_field_) fail(ErrorKind::Parse, kw, "repeated 'field' line");
      seen_field_ = true;
      field_line();
    } else if (kw.text == "vertices") {
      if (at_end()) fail_end("expected a vertex id");
      while (!at_end()) {
        const Token& v = word("a vertex id");
        if (std::find(file_.vertices.begin(), file_.vertices.end(), v.text) != file_.vertices.end())
          fail(ErrorKind::InvalidQuiver, v, "duplicate vertex '" + v.text + "'");
        if (!file_.modules.empty()) fail(ErrorKind::Parse, v, "vertices must precede the modules");
        file_.vertices.push_back(v.text);
      }
    } else if (kw.text == "arrow") {
      arrow_line();
    } else if (kw.text == "relation") {
      relation_line();
    } else if (kw.text == "module") {
      module_line();
    } else if (kw.text == "map") {
      if (!module_) fail(ErrorKind::Parse, kw, "'map' outside a module");
      map_line();
    } else if (kw.text == "end") {
      if (!module_) fail(ErrorKind::Parse, kw, "'end' outside a module");
      finish_module();
    } else {
      fail(ErrorKind::Parse, kw, "unknown keyword '" + kw.text + "'");
    }
    expect_end();
  }

  void field_line() {
    const Token& t = word("'rational' or 'fp'");
    if (t.text == "rational") {
      file_.field = Field::rational();
    } else if (t.text == "fp") {
      const Token& p = word("a prime");
      try {
        file_.field = Field::prime(std::uint32_t(natural(p)));
      } catch (const std::invalid_argument& e) {
        fail(ErrorKind::Parse, p, e.what());
      }
    } else {
      fail(ErrorKind::Parse, t, "unknown field '" + t.text + "'");
    }
  }

  std::size_t vertex_of(const Token& t) const {
    auto it = std::find(file_.vertices.begin(), file_.vertices.end(), t.text);
    if (it == file_.vertices.end()) fail(ErrorKind::UnknownVertex, t, "unknown vertex '" + t.text + "'");
    return std::size_t(it - file_.vertices.begin());
  }

  const ArrowDecl& arrow_of(const Token& t) const {
    for (const auto& a : file_.arrows)
      if (a.name == t.text) return a;
    fail(ErrorKind::UnknownArrow, t, "unknown arrow '" + t.text + "'");
  }

  void arrow_line() {
    const Token& name = word("an arrow name");
    if (looks_rational(name.text)) fail(ErrorKind::Parse, name, "arrow names cannot be numbers");
    for (const auto& a : file_.arrows)
      if (a.name == name.text) fail(ErrorKind::InvalidQuiver, name, "duplicate arrow '" + name.text + "'");
    const Token& s = word("a source vertex");
    const Token& t = word("a target vertex");
    vertex_of(s);
    vertex_of(t);
    file_.arrows.push_back({name.text, s.text, t.text});
  }

  // A term's arrows and the endpoints of the path they spell.
  struct TermPath {
    std::string start, end;
    std::size_t column = 0;
  };

  TermPath path_of(const std::vector<Token>& arrows) const {
    TermPath tp{"", "", arrows.front().column};
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const ArrowDecl& a = arrow_of(arrows[i]);
      if (i == 0) {
        tp.start = a.source;
      } else if (a.source != tp.end) {
        fail(ErrorKind::InvalidRelation, arrows[i], "arrow '" + a.name + "' does not compose with the one before it");
      }
      tp.end = a.target;
    }
    if (arrows.size() < 2) fail(ErrorKind::InvalidRelation, arrows.front(), "relation paths need length at least 2");
    return tp;
  }

  void relation_line() {
    std::vector<RelationTerm> terms;
    std::optional<TermPath> first;
    bool need_sign = false;
    while (!at_end()) {
      mpq_class sign = 1;
      if (peek().text == "+" || peek().text == "-") {
        sign = peek().text == "-" ? -1 : 1;
        ++pos_;
      } else if (need_sign && !(looks_rational(peek().text) && peek().text[0] == '-')) {
        fail(ErrorKind::Parse, peek(), "expected '+' or '-' between terms");
      }
      mpq_class coeff = 1;
      if (!at_end() && looks_rational(peek().text) && pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].text == "*") {
        coeff = rational(peek());
        pos_ += 2;
      }
      std::vector<Token> arrows;
      if (!at_end() && peek().text == "(") {
        ++pos_;
        while (!at_end() && peek().text != ")") arrows.push_back(word("an arrow"));
        if (at_end()) fail_end("expected ')'");
        if (arrows.empty()) fail(ErrorKind::Parse, peek(), "empty path");
        ++pos_;
      } else {
        while (!at_end() && peek().text != "+" && peek().text != "-" && !looks_rational(peek().text))
          arrows.push_back(word("an arrow"));
        if (arrows.empty()) {
          if (at_end()) fail_end("expected a term");
          fail(ErrorKind::Parse, peek(), "expected a term, found '" + peek().text + "'");
        }
      }
      const TermPath tp = path_of(arrows);
      if (first && (tp.start != first->start || tp.end != first->end))
        fail_at(ErrorKind::InvalidRelation, line_no_, tp.column, "paths of a relation must be parallel");
      if (!first) first = tp;
      RelationTerm term{sign * coeff, {}};
      for (const auto& a : arrows) term.arrows.push_back(a.text);
      terms.push_back(std::move(term));
      need_sign = true;
    }
    if (terms.empty()) fail_end("expected a term");
    file_.relations.push_back(std::move(terms));
  }

  void module_line() {
    if (file_.vertices.empty()) fail(ErrorKind::Parse, tokens_[0], "module before any vertices");
    const Token& name = word("a module name");
    ModuleDecl m{name.text, {}, {}};
    while (!at_end()) m.dims.push_back(natural(next("a dimension")));
    if (m.dims.size() != file_.vertices.size())
      fail_at(ErrorKind::InvalidRepresentation, line_no_, name.column,
              "module '" + name.text + "' needs " + std::to_string(file_.vertices.size()) + " dimensions");
    module_ = std::move(m);
    module_maps_.clear();
  }

  void map_line() {
    const Token& at = word("an arrow");
    const ArrowDecl& a = arrow_of(at);
    if (module_maps_.count(a.name)) fail(ErrorKind::InvalidRepresentation, at, "repeated map for '" + a.name + "'");
    const std::size_t rows = module_->dims[vertex_of({a.source, at.column})];
    const std::size_t cols = module_->dims[vertex_of({a.target, at.column})];
    std::vector<std::vector<mpq_class>> m(1);
    while (!at_end()) {
      const Token& t = next("a matrix entry");
      if (t.text == ";") {
        m.emplace_back();
        continue;
      }
      m.back().push_back(rational(t));
    }
    if (m.size() == 1 && m[0].empty()) m.clear();
    if (m.size() != rows)
      fail(ErrorKind::InvalidRepresentation, at, "map '" + a.name + "' needs " + std::to_string(rows) + " rows");
    for (const auto& r : m)
      if (r.size() != cols)
        fail(ErrorKind::InvalidRepresentation, at, "map '" + a.name + "' needs rows of length " + std::to_string(cols));
    module_maps_[a.name] = std::move(m);
  }

  void finish_module() {
    for (const auto& a : file_.arrows) {
      const std::size_t rows = module_->dims[vertex_of({a.source, 1})];
      const std::size_t cols = module_->dims[vertex_of({a.target, 1})];
      if (rows == 0 || cols == 0) continue;
      auto it = module_maps_.find(a.name);
      module_->maps.emplace_back(a.name, it != module_maps_.end()
                                             ? it->second
                                             : std::vector<std::vector<mpq_class>>(rows, std::vector<mpq_class>(cols)));
    }
    file_.modules.push_back(std::move(*module_));
    module_.reset();
  }

  const std::string& text_;
  AlgebraFile file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  std::size_t line_len_ = 0;
  bool seen_name_ = false;
  bool seen_field_ = false;
  std::optional<ModuleDecl> module_;
  std::map<std::string, std::vector<std::vector<mpq_class>>> module_maps_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string relation_text(const std::vector<RelationTerm>& terms) {
  if (terms.size() == 1 && terms[0].coeff == 1) return join(terms[0].arrows, " ");
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const mpq_class& c = terms[i].coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const mpq_class mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += "(" + join(terms[i].arrows, " ") + ")";
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) { return Parser(text).run(); }

std::string emit_algebra_file(const AlgebraFile& f) {
  std::ostringstream out;
  out << "algebra " << (f.name.empty() ? "unnamed" : f.name) << "\n";
  out << "field " << f.field.describe() << "\n";
  if (!f.vertices.empty()) out << "vertices " << join(f.vertices, " ") << "\n";
  for (const auto& a : f.arrows) out << "arrow " << a.name << " " << a.source << " " << a.target << "\n";
  for (const auto& r : f.relations) out << "relation " << relation_text(r) << "\n";
  for (const auto& m : f.modules) {
    out << "module " << m.name;
    for (auto d : m.dims) out << " " << d;
    out << "\n";
    for (const auto& [arrow, rows] : m.maps) {
      out << "map " << arrow;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << " ;";
        for (const auto& x : rows[i]) out << " " << x.get_str();
      }
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

AlgebraFile describe_algebra(const Algebra& a, const std::string& name) {
  AlgebraFile f;
  f.name = name;
  f.field = a.field();
  const Quiver& q = a.quiver();
  f.vertices = q.vertices();
  for (const auto& ar : q.arrows()) f.arrows.push_back({ar.name, q.vertex_label(ar.source), q.vertex_label(ar.target)});
  for (const auto& r : a.relations()) {
    std::vector<RelationTerm> terms;
    for (const auto& t : r.terms) {
      RelationTerm rt{t.coeff.to_rational(), {}};
      for (auto i : t.path.arrows) rt.arrows.push_back(q.arrow(i).name);
      terms.push_back(std::move(rt));
    }
    f.relations.push_back(std::move(terms));
  }
  return f;
}

AlgebraPtr build_algebra_file(const AlgebraFile& f, std::optional<Field> field) {
  const Field k = field.value_or(f.field);
  Quiver q;
  for (const auto& v : f.vertices) q.add_vertex(v);
  for (const auto& a : f.arrows) q.add_arrow(a.name, a.source, a.target);
  std::vector<Relation> rels;
  for (const auto& terms : f.relations) {
    Relation r;
    for (const auto& t : terms) {
      std::vector<std::size_t> idx;
      for (const auto& name : t.arrows) idx.push_back(*q.find_arrow(name));
      r.terms.push_back({k.from_rational(t.coeff), make_path(q, idx)});
    }
    rels.push_back(std::move(r));
  }
  return build_algebra(q, rels, kDefaultMaxLength, k);
}

Backend file_backend(const AlgebraFile& f, const AlgebraPtr& a) {
  if (f.modules.empty()) return Backend::strings();
  const Quiver& q = a->quiver();
  const Field& k = a->field();
  std::vector<UserModule> mods;
  for (const auto& m : f.modules) {
    std::vector<Matrix> maps;
    for (const auto& ar : q.arrows()) maps.emplace_back(m.dims[ar.source], m.dims[ar.target], k);
    for (const auto& [name, rows] : m.maps) {
      std::vector<std::vector<Scalar>> values;
      for (const auto& r : rows) {
        values.emplace_back();
        for (const auto& x : r) values.back().push_back(k.from_rational(x));
      }
      const std::size_t i = *q.find_arrow(name);
      maps[i] = Matrix::from_rows(values, m.dims[q.arrow(i).target], k);
    }
    try {
      mods.push_back({m.name, Representation(a, m.dims, std::move(maps))});
    } catch (const Error& e) {
      throw Error(e.kind(), "module '" + m.name + "': " + e.what());
    }
  }
  return Backend::user(std::move(mods));
}

Field parse_field(const std::string& spec) {
  if (spec == "rational") return Field::rational();
  static const std::regex re("fp[: ]([0-9]+)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw Error(ErrorKind::Parse, "field must be 'rational' or 'fp:<p>', got '" + spec + "'");
  try {
    return Field::prime(std::uint32_t(std::stoul(m[1].str())));
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace taured
