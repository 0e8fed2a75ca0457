#include "comalg/workspace.hpp"

#include <cctype>
#include <set>

namespace comalg {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) {
      tokens.push_back({current, line});
      current.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      ++line;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      continue;
    }
    if (c == '{' || c == '}') {
      flush();
      tokens.push_back({std::string(1, c), line});
      continue;
    }
    current += c;
  }
  flush();
  return tokens;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  std::size_t line() const {
    return done() ? (tokens_.empty() ? 1 : tokens_.back().line) : tokens_[pos_].line;
  }
  const std::string& peek() const {
    if (done()) throw ParseError(line(), "unexpected end of input");
    return tokens_[pos_].text;
  }
  std::string take() {
    if (done()) throw ParseError(line(), "unexpected end of input");
    return tokens_[pos_++].text;
  }
  void expect(const std::string& token) {
    const std::size_t at = line();
    const std::string got = take();
    if (got != token) throw ParseError(at, "expected '" + token + "', got '" + got + "'");
  }
  std::size_t integer() {
    const std::size_t at = line();
    const std::string t = take();
    try {
      if (t.empty() || !std::isdigit(static_cast<unsigned char>(t[0])))
        throw std::invalid_argument(t);
      std::size_t used = 0;
      const unsigned long long v = std::stoull(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError(at, "expected a nonnegative integer, got '" + t + "'");
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Vec parse_vec(const std::string& text, std::size_t line, std::size_t expected_len) {
  Vec out;
  std::size_t start = 0;
  if (!text.empty()) {
    while (start <= text.size()) {
      const std::size_t comma = text.find(',', start);
      const std::string piece =
          text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto r = parse_rational(piece);
      if (!r) throw ParseError(line, "bad rational '" + piece + "'");
      out.push_back(*r);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (out.size() != expected_len)
    throw ParseError(line, "expected " + std::to_string(expected_len) + " entries, got " +
                               std::to_string(out.size()));
  return out;
}

Matrix parse_rows(Cursor& cursor, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    cursor.expect("row");
    const std::size_t at = cursor.line();
    const Vec v = parse_vec(cursor.take(), at, cols);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[j];
  }
  return m;
}

}  // namespace

const Algebra& Workspace::algebra(const std::string& name) const {
  const auto it = algebras.find(name);
  if (it == algebras.end()) throw Error("unknown algebra '" + name + "'");
  return it->second;
}
const AlgebraMorphism& Workspace::morphism(const std::string& name) const {
  const auto it = morphisms.find(name);
  if (it == morphisms.end()) throw Error("unknown morphism '" + name + "'");
  return it->second;
}
const Subspace& Workspace::subspace(const std::string& name) const {
  const auto it = subspaces.find(name);
  if (it == subspaces.end()) throw Error("unknown subspace '" + name + "'");
  return it->second;
}
const Bimodule& Workspace::bimodule(const std::string& name) const {
  const auto it = bimodules.find(name);
  if (it == bimodules.end()) throw Error("unknown bimodule '" + name + "'");
  return it->second;
}
const Net& Workspace::net(const std::string& name) const {
  const auto it = nets.find(name);
  if (it == nets.end()) throw Error("unknown net '" + name + "'");
  return it->second;
}
const Defect& Workspace::defect(const std::string& name) const {
  const auto it = defects.find(name);
  if (it == defects.end()) throw Error("unknown defect '" + name + "'");
  return it->second;
}
const Sector& Workspace::sector(const std::string& name) const {
  const auto it = sectors.find(name);
  if (it == sectors.end()) throw Error("unknown sector '" + name + "'");
  return it->second;
}

Algebra Workspace::algebra_ref(const std::string& ref) const {
  if (const auto it = algebras.find(ref); it != algebras.end()) return it->second;
  if (ref.starts_with("op(") && ref.ends_with(")"))
    return opposite(algebra(ref.substr(3, ref.size() - 4)));
  const std::size_t star = ref.find('*');
  if (star != std::string::npos)
    return tensor_algebras(algebra(ref.substr(0, star)), algebra(ref.substr(star + 1)));
  return algebra(ref);
}

Workspace parse_workspace(std::string_view text) {
  Workspace ws;
  Cursor cursor(tokenize(text));
  std::set<std::string> names;

  auto declare = [&](const std::string& kind, const std::string& name, std::size_t line) {
    if (!names.insert(name).second) throw ParseError(line, "duplicate name '" + name + "'");
    ws.declarations.emplace_back(kind, name);
  };

  while (!cursor.done()) {
    const std::size_t at = cursor.line();
    const std::string kind = cursor.take();
    if (kind == "algebra") {
      const std::string name = cursor.take();
      declare(kind, name, at);
      cursor.expect("{");
      cursor.expect("dim");
      const std::size_t dim = cursor.integer();
      if (dim == 0) throw ParseError(at, "algebra '" + name + "': dim 0 is not allowed");
      cursor.expect("unit");
      const std::size_t unit_line = cursor.line();
      Algebra a(name, dim, parse_vec(cursor.take(), unit_line, dim));
      while (cursor.peek() == "mul") {
        cursor.take();
        const std::size_t i = cursor.integer();
        const std::size_t j = cursor.integer();
        cursor.expect("->");
        const std::size_t vec_line = cursor.line();
        if (i >= dim || j >= dim) throw ParseError(vec_line, "mul index out of range");
        a.set_product(i, j, parse_vec(cursor.take(), vec_line, dim));
      }
      cursor.expect("}");
      const Report report = validate_algebra(a);
      if (!report.ok())
        throw ParseError(at, "algebra '" + name + "': " + report.issues.front());
      ws.algebras.emplace(name, std::move(a));
    } else if (kind == "morphism") {
      const std::string name = cursor.take();
      declare(kind, name, at);
      cursor.expect(":");
      const Algebra source = ws.algebra_ref(cursor.take());
      cursor.expect("->");
      const Algebra target = ws.algebra_ref(cursor.take());
      cursor.expect("{");
      Matrix m = parse_rows(cursor, target.dim(), source.dim());
      cursor.expect("}");
      AlgebraMorphism morphism{source, target, std::move(m)};
      const Report report = check_morphism(morphism);
      if (!report.ok())
        throw ParseError(at, "morphism '" + name + "': " + report.issues.front());
      ws.morphisms.emplace(name, std::move(morphism));
    } else if (kind == "subspace") {
      const std::string name = cursor.take();
      declare(kind, name, at);
      cursor.expect("{");
      cursor.expect("ambient");
      const std::size_t ambient = cursor.integer();
      std::vector<Vec> rows;
      while (cursor.peek() == "row") {
        cursor.take();
        const std::size_t row_line = cursor.line();
        rows.push_back(parse_vec(cursor.take(), row_line, ambient));
      }
      cursor.expect("}");
      ws.subspaces.emplace(name, Subspace::from_rows(ambient, rows));
    } else if (kind == "bimodule") {
      const std::string name = cursor.take();
      declare(kind, name, at);
      cursor.expect(":");
      const Algebra left_alg = ws.algebra_ref(cursor.take());
      cursor.expect("-");
      const Algebra right_alg = ws.algebra_ref(cursor.take());
      cursor.expect("{");
      cursor.expect("dim");
      const std::size_t dim = cursor.integer();
      std::vector<Matrix> left(left_alg.dim(), Matrix(dim, dim));
      std::vector<Matrix> right(right_alg.dim(), Matrix(dim, dim));
      std::vector<bool> left_seen(left_alg.dim(), false), right_seen(right_alg.dim(), false);
      while (cursor.peek() == "left" || cursor.peek() == "right") {
        const std::string side = cursor.take();
        const std::size_t index_line = cursor.line();
        const std::size_t index = cursor.integer();
        cursor.expect("{");
        Matrix m = parse_rows(cursor, dim, dim);
        cursor.expect("}");
        if (side == "left") {
          if (index >= left_alg.dim()) throw ParseError(index_line, "left index out of range");
          left[index] = std::move(m);
          left_seen[index] = true;
        } else {
          if (index >= right_alg.dim()) throw ParseError(index_line, "right index out of range");
          right[index] = std::move(m);
          right_seen[index] = true;
        }
      }
      cursor.expect("}");
      for (std::size_t i = 0; i < left_seen.size(); ++i)
        if (!left_seen[i])
          throw ParseError(at, "bimodule '" + name + "': missing left " + std::to_string(i));
      for (std::size_t j = 0; j < right_seen.size(); ++j)
        if (!right_seen[j])
          throw ParseError(at, "bimodule '" + name + "': missing right " + std::to_string(j));
      Bimodule b(left_alg, right_alg, dim, std::move(left), std::move(right));
      const Report report = validate_bimodule(b);
      if (!report.ok())
        throw ParseError(at, "bimodule '" + name + "': " + report.issues.front());
      ws.bimodules.emplace(name, std::move(b));
    } else if (kind == "net") {
      const std::string name = cursor.take();
      declare(kind, name, at);
      cursor.expect("{");
      cursor.expect("algebra");
      const Algebra a = ws.algebra_ref(cursor.take());
      cursor.expect("}");
      try {
        ws.nets.emplace(name, make_net(a));
      } catch (const Error& e) {
        throw ParseError(at, "net '" + name + "': " + e.what());
      }
    } else if (kind == "defect") {
      const std::string name = cursor.take();
      declare(kind, name, at);
      cursor.expect(":");
      const Net left = ws.net(cursor.take());
      cursor.expect("-");
      const Net right = ws.net(cursor.take());
      cursor.expect("{");
      cursor.expect("algebra");
      const Algebra d = ws.algebra_ref(cursor.take());
      cursor.expect("phi");
      const AlgebraMorphism phi = ws.morphism(cursor.take());
      cursor.expect("}");
      try {
        ws.defects.emplace(name, make_defect(left, right, d, phi));
      } catch (const Error& e) {
        throw ParseError(at, "defect '" + name + "': " + e.what());
      }
    } else if (kind == "sector") {
      const std::string name = cursor.take();
      declare(kind, name, at);
      cursor.expect(":");
      const Defect top = ws.defect(cursor.take());
      cursor.expect("-");
      const Defect bottom = ws.defect(cursor.take());
      cursor.expect("{");
      cursor.expect("bimodule");
      const Bimodule m = ws.bimodule(cursor.take());
      cursor.expect("}");
      try {
        ws.sectors.emplace(name, make_sector(top, bottom, m));
      } catch (const Error& e) {
        throw ParseError(at, "sector '" + name + "': " + e.what());
      }
    } else {
      throw ParseError(at, "unknown block '" + kind + "'");
    }
  }
  return ws;
}

CirclePoint parse_circle_point(std::string_view text) {
  if (text == "top") return CirclePoint::top();
  if (text == "bot") return CirclePoint::bot();
  if (text.starts_with("w:") || text.starts_with("b:")) {
    const auto q = parse_rational(text.substr(2));
    if (!q) throw Error("bad coordinate in point '" + std::string(text) + "'");
    return text[0] == 'w' ? CirclePoint::white(*q) : CirclePoint::black(*q);
  }
  throw Error("bad circle point '" + std::string(text) + "'");
}

CircleInterval parse_interval_literal(std::string_view text) {
  if (!text.starts_with("arc(") || !text.ends_with(")"))
    throw Error("bad interval literal '" + std::string(text) + "'");
  const std::string_view inner = text.substr(4, text.size() - 5);
  const std::size_t c1 = inner.find(',');
  const std::size_t c2 = inner.rfind(',');
  if (c1 == std::string_view::npos || c2 == c1)
    throw Error("bad interval literal '" + std::string(text) + "'");
  const std::string_view p1 = inner.substr(0, c1);
  const std::string_view p2 = inner.substr(c1 + 1, c2 - c1 - 1);
  const std::string_view o = inner.substr(c2 + 1);
  if (o != "+" && o != "-") throw Error("bad orientation in '" + std::string(text) + "'");
  return make_arc(parse_circle_point(p1), parse_circle_point(p2),
                  o == "+" ? Orientation::Positive : Orientation::Negative);
}

AxiomConfig parse_axiom_config(std::string_view text) {
  AxiomConfig config;
  Cursor cursor(tokenize(text));
  std::set<std::string> names;
  while (!cursor.done()) {
    const std::size_t at = cursor.line();
    const std::string kind = cursor.take();
    if (kind == "interval") {
      const std::string name = cursor.take();
      if (!names.insert(name).second) throw ParseError(at, "duplicate interval '" + name + "'");
      try {
        config.intervals.emplace_back(name, parse_interval_literal(cursor.take()));
      } catch (const Error& e) {
        throw ParseError(at, e.what());
      }
    } else if (kind == "include") {
      const std::string inner = cursor.take();
      const std::string outer = cursor.take();
      config.inclusions.emplace_back(inner, outer);
    } else if (kind == "cover") {
      const std::string whole = cursor.take();
      const std::string left = cursor.take();
      const std::string right = cursor.take();
      config.covers.push_back({whole, left, right});
    } else if (kind == "disjoint") {
      const std::string ambient = cursor.take();
      const std::string first = cursor.take();
      const std::string second = cursor.take();
      config.disjoint_pairs.push_back({ambient, first, second});
    } else {
      throw ParseError(at, "unknown config entry '" + kind + "'");
    }
  }
  return config;
}

std::string serialize_algebra(const Algebra& a, const std::string& name) {
  std::string s = "algebra " + name + " {\n";
  s += "  dim " + std::to_string(a.dim()) + "\n";
  s += "  unit " + to_string(a.unit()) + "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec p = a.product_vec(i, j);
      if (vec_is_zero(p)) continue;
      s += "  mul " + std::to_string(i) + " " + std::to_string(j) + " -> " + to_string(p) + "\n";
    }
  s += "}\n";
  return s;
}

}  // namespace comalg
