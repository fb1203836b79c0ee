#include "monoidforge/text_io.hpp"

#include <cctype>

namespace mf {

namespace {

// Tiny cursor over the original text; error positions refer to it.
struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
  }
  long integer(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    return std::stol(text.substr(start, pos - start));
  }
};

int parse_ambient(Scanner& s) {
  const std::size_t at = s.pos;
  const long n = s.integer("variable count");
  if (n < 1 || n > kMaxVariables)
    throw ParseError("variable count must be between 1 and " + std::to_string(kMaxVariables), at);
  s.expect(';', "after the variable count");
  return static_cast<int>(n);
}

Monomial parse_generator(Scanner& s, int n) {
  Exponents e(static_cast<std::size_t>(n), 0);
  while (true) {
    s.skip_ws();
    if (s.accept('1')) {
      // the unit factor contributes nothing
    } else if (s.accept('x')) {
      const std::size_t at = s.pos;
      const long var = s.integer("variable index");
      if (var < 1 || var > n)
        throw ParseError("variable index out of range 1.." + std::to_string(n), at);
      long exp = 1;
      if (s.accept('^')) {
        const std::size_t eat = s.pos;
        exp = s.integer("exponent");
        if (exp < 1) throw ParseError("exponent must be >= 1", eat);
      }
      e[static_cast<std::size_t>(var - 1)] += static_cast<int>(exp);
    } else {
      throw ParseError("expected a factor 'xk', 'xk^e' or '1'", s.pos);
    }
    if (!s.accept('*')) break;
  }
  return Monomial(std::move(e));
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text) {
  Scanner s{text};
  const int n = parse_ambient(s);
  std::vector<Monomial> gens;
  if (!s.at_end()) {
    while (true) {
      gens.push_back(parse_generator(s, n));
      if (!s.accept(',')) break;
    }
    if (!s.at_end()) throw ParseError("unexpected trailing input", s.pos);
  }
  return MonomialIdeal(n, std::move(gens));
}

std::string print_monomial(const Monomial& u) {
  if (u.is_unit()) return "1";
  std::string out;
  for (int i = 0; i < u.ambient(); ++i) {
    if (u.exponent(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (u.exponent(i) > 1) out += "^" + std::to_string(u.exponent(i));
  }
  return out;
}

std::string print_ideal(const MonomialIdeal& I) {
  std::string out = std::to_string(I.ambient()) + ";";
  bool first = true;
  for (const Monomial& g : I.generators()) {
    out += first ? " " : ", ";
    out += print_monomial(g);
    first = false;
  }
  return out;
}

Monomial parse_monomial(const std::string& text, int n) {
  Scanner s{text};
  Monomial m = parse_generator(s, n);
  if (!s.at_end()) throw ParseError("unexpected trailing input", s.pos);
  return m;
}

namespace {

std::vector<VertexSet> scan_faces(Scanner& s, int n) {
  std::vector<VertexSet> faces;
  while (true) {
    s.expect('{', "to open a face");
    VertexSet f;
    if (!s.accept('}')) {
      while (true) {
        const std::size_t at = s.pos;
        const long v = s.integer("vertex");
        if (v < 1 || v > n) throw ParseError("vertex out of range 1.." + std::to_string(n), at);
        f = f.with(static_cast<int>(v - 1));
        if (!s.accept(',')) break;
      }
      s.expect('}', "to close the face");
    }
    faces.push_back(f);
    if (!s.accept(',')) break;
  }
  if (!s.at_end()) throw ParseError("unexpected trailing input", s.pos);
  return faces;
}

} // namespace

std::vector<VertexSet> parse_faces(const std::string& text, int n) {
  Scanner s{text};
  return scan_faces(s, n);
}

SimplicialComplex parse_complex(const std::string& text) {
  Scanner s{text};
  const int n = parse_ambient(s);
  if (s.at_end()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex(n, scan_faces(s, n));
}

std::string print_faces(const std::vector<VertexSet>& faces) {
  std::string out;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (k) out += ",";
    out += "{";
    const std::vector<int> verts = faces[k].to_vector();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(verts[j] + 1);
    }
    out += "}";
  }
  return out;
}

std::string print_complex(const SimplicialComplex& c) {
  std::string out = std::to_string(c.vertex_count()) + ";";
  if (!c.is_void()) out += " " + print_faces(c.facets());
  return out;
}

} // namespace mf
