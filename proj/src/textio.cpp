#include "adelic/textio.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace adelic {

namespace {

// ---------------------------------------------------------------------------
// character-level cursor with positions for error messages

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }
  bool try_eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  std::uint64_t eat_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected an integer", pos);
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      ++pos;
    }
    return v;
  }
  std::string eat_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw ParseError("expected an identifier", pos);
    return s.substr(start, pos - start);
  }
};

// Generic sum-of-products expression parser over a ring:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := UINT | VAR ['^' UINT] | '(' expr ')'
// The ring is described by from_int, a variable table, and ring operations.
template <typename V>
struct ExprParser {
  Cursor& cur;
  std::function<V(std::uint64_t)> from_uint;
  std::function<V(const std::string&, std::size_t)> var;  // name, position
  std::function<V(const V&, const V&)> add, sub, mul;
  std::function<V(const V&, std::uint64_t)> pow;

  V parse_expr() {
    bool neg = cur.try_eat('-');
    V acc = parse_term();
    if (neg) acc = sub(from_uint(0), acc);
    while (true) {
      if (cur.try_eat('+')) {
        acc = add(acc, parse_term());
      } else if (cur.try_eat('-')) {
        acc = sub(acc, parse_term());
      } else {
        break;
      }
    }
    return acc;
  }

  V parse_term() {
    V acc = parse_factor();
    while (cur.try_eat('*')) acc = mul(acc, parse_factor());
    return acc;
  }

  V parse_factor() {
    cur.skip_ws();
    if (cur.peek() == '(') {
      cur.expect('(');
      V inner = parse_expr();
      cur.expect(')');
      if (cur.try_eat('^')) return pow(inner, cur.eat_uint());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      V v = from_uint(cur.eat_uint());
      if (cur.try_eat('^')) return pow(v, cur.eat_uint());
      return v;
    }
    std::size_t at = cur.pos;
    std::string name = cur.eat_ident();
    V v = var(name, at);
    if (cur.try_eat('^')) return pow(v, cur.eat_uint());
    return v;
  }
};

// find the top-level '/' (depth zero w.r.t. parentheses); npos when absent
std::size_t top_level_slash(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) return i;
  }
  return std::string::npos;
}

// split on top-level commas
std::vector<std::string> split_top_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

FieldElement generator_element(const FieldSpecPtr& spec) {
  return FieldElement(spec, {0, 1});
}

Polynomial parse_poly_cursor(Cursor& cur, const FieldSpecPtr& spec, const std::string& var) {
  ExprParser<Polynomial> p{
      cur,
      [&](std::uint64_t v) {
        return Polynomial::constant(FieldElement::from_int(spec, static_cast<std::int64_t>(v)));
      },
      [&](const std::string& name, std::size_t at) -> Polynomial {
        if (name == var) return Polynomial::monomial(FieldElement::one(spec), 1);
        if (spec->n > 1 && name == spec->var) return Polynomial::constant(generator_element(spec));
        throw ParseError("unknown variable '" + name + "'", at);
      },
      [](const Polynomial& a, const Polynomial& b) { return a + b; },
      [](const Polynomial& a, const Polynomial& b) { return a - b; },
      [](const Polynomial& a, const Polynomial& b) { return a * b; },
      [](const Polynomial& a, std::uint64_t k) { return a.pow(k); }};
  return p.parse_expr();
}

// numerator pair a(x) + b(x) y on an elliptic curve, with y^2 reduced
struct YPoly {
  Polynomial a, b;
};

YPoly parse_ypoly_cursor(Cursor& cur, const CurveModel& curve) {
  const auto& spec = curve.base();
  Polynomial rhs = curve.rhs_poly();
  auto zero = Polynomial(spec);
  auto yp_add = [](const YPoly& u, const YPoly& v) { return YPoly{u.a + v.a, u.b + v.b}; };
  auto yp_sub = [](const YPoly& u, const YPoly& v) { return YPoly{u.a - v.a, u.b - v.b}; };
  auto yp_mul = [&](const YPoly& u, const YPoly& v) {
    return YPoly{u.a * v.a + u.b * v.b * rhs, u.a * v.b + u.b * v.a};
  };
  ExprParser<YPoly> p{
      cur,
      [&](std::uint64_t v) {
        return YPoly{Polynomial::constant(FieldElement::from_int(spec, static_cast<std::int64_t>(v))),
                     zero};
      },
      [&](const std::string& name, std::size_t at) -> YPoly {
        if (name == "x") return YPoly{Polynomial::monomial(FieldElement::one(spec), 1), zero};
        if (name == "y")
          return YPoly{zero, Polynomial::constant(FieldElement::one(spec))};
        if (spec->n > 1 && name == spec->var)
          return YPoly{Polynomial::constant(generator_element(spec)), zero};
        throw ParseError("unknown variable '" + name + "'", at);
      },
      yp_add, yp_sub, yp_mul,
      [&](const YPoly& u, std::uint64_t k) {
        YPoly acc{Polynomial::constant(FieldElement::one(spec)), zero};
        for (std::uint64_t i = 0; i < k; ++i) acc = yp_mul(acc, u);
        return acc;
      }};
  return p.parse_expr();
}

}  // namespace

FieldSpecPtr parse_field_spec(const std::string& text) {
  Cursor cur{text};
  if (!cur.try_eat_word("GF")) throw ParseError("expected 'GF'", cur.pos);
  cur.expect('(');
  std::uint64_t q = cur.eat_uint();
  if (q < 2) throw ParseError("field order must be >= 2", cur.pos);
  if (!cur.try_eat(';')) {
    cur.expect(')');
    if (!cur.done()) throw ParseError("trailing input after the field", cur.pos);
    return FieldSpec::prime_field(q);  // validates primality
  }
  // GF(q; modulus): find p, n with p^n = q, n = deg(modulus)
  std::size_t mod_start = cur.pos;
  int depth = 1;
  std::size_t end = mod_start;
  while (end < text.size() && depth > 0) {
    if (text[end] == '(') ++depth;
    if (text[end] == ')') --depth;
    if (depth > 0) ++end;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses", end);
  std::string mod_text = text.substr(mod_start, end - mod_start);
  // the variable is the unique identifier character in the modulus
  std::string var;
  for (char c : mod_text)
    if (std::isalpha(static_cast<unsigned char>(c))) {
      var = std::string(1, c);
      break;
    }
  if (var.empty()) throw ParseError("modulus has no variable", mod_start);
  // try p = smallest prime with p^k = q
  for (coeff_t p = 2; p * p <= q; ++p) {
    std::uint64_t w = q;
    std::uint32_t n = 0;
    while (w % p == 0) {
      w /= p;
      ++n;
    }
    if (w == 1 && n >= 1) {
      auto base = FieldSpec::prime_field(p);
      Cursor mc{mod_text};
      Polynomial modulus = parse_poly_cursor(mc, base, var);
      if (!mc.done()) throw ParseError("trailing input in the modulus", mod_start + mc.pos);
      if (modulus.degree() != static_cast<std::int64_t>(n))
        throw StructureError("modulus degree does not match the field order");
      std::vector<coeff_t> cs;
      for (const auto& c : modulus.coeffs()) cs.push_back(c.value());
      return FieldSpec::extension(p, n, std::move(cs), var);
    }
  }
  throw StructureError("field order " + std::to_string(q) + " is not a prime power");
}

CurveModel parse_curve(const std::string& text) {
  Cursor cur{text};
  if (cur.try_eat_word("P1")) {
    cur.expect('/');
    return CurveModel::projective_line(parse_field_spec(text.substr(cur.pos)));
  }
  if (!cur.try_eat_word("E")) throw ParseError("expected 'P1' or 'E'", cur.pos);
  cur.expect('/');
  std::size_t colon = text.find(':', cur.pos);
  if (colon == std::string::npos) throw ParseError("expected ':a4=..,a6=..'", text.size());
  auto spec = parse_field_spec(trim(text.substr(cur.pos, colon - cur.pos)));
  Cursor rest{text};
  rest.pos = colon + 1;
  if (!rest.try_eat_word("a4")) throw ParseError("expected 'a4='", rest.pos);
  rest.expect('=');
  std::size_t comma = text.find(',', rest.pos);
  if (comma == std::string::npos) throw ParseError("expected ',a6='", text.size());
  FieldElement a4 = parse_element(text.substr(rest.pos, comma - rest.pos), spec);
  rest.pos = comma + 1;
  if (!rest.try_eat_word("a6")) throw ParseError("expected 'a6='", rest.pos);
  rest.expect('=');
  FieldElement a6 = parse_element(text.substr(rest.pos), spec);
  return CurveModel::elliptic(spec, a4, a6);
}

FieldElement parse_element(const std::string& text, const FieldSpecPtr& spec) {
  Cursor cur{text};
  ExprParser<FieldElement> p{
      cur,
      [&](std::uint64_t v) { return FieldElement::from_int(spec, static_cast<std::int64_t>(v)); },
      [&](const std::string& name, std::size_t at) -> FieldElement {
        if (spec->n > 1 && name == spec->var) return generator_element(spec);
        throw ParseError("unknown variable '" + name + "' in a field element", at);
      },
      [](const FieldElement& a, const FieldElement& b) { return a + b; },
      [](const FieldElement& a, const FieldElement& b) { return a - b; },
      [](const FieldElement& a, const FieldElement& b) { return a * b; },
      [](const FieldElement& a, std::uint64_t k) { return a.pow(static_cast<std::int64_t>(k)); }};
  FieldElement v = p.parse_expr();
  if (!cur.done()) throw ParseError("trailing input after the element", cur.pos);
  return v;
}

Polynomial parse_polynomial(const std::string& text, const FieldSpecPtr& spec,
                            const std::string& var) {
  Cursor cur{text};
  Polynomial f = parse_poly_cursor(cur, spec, var);
  if (!cur.done()) throw ParseError("trailing input after the polynomial", cur.pos);
  return f;
}

CurveFunction parse_function(const std::string& text, const CurveModel& curve) {
  std::string body = trim(text);
  if (body.empty()) throw ParseError("empty function", 0);
  std::size_t slash = top_level_slash(body);
  std::string num_s = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den_s = slash == std::string::npos ? "" : body.substr(slash + 1);
  auto strip_parens = [](std::string s) {
    s = trim(s);
    // remove one redundant outer layer if it wraps the whole string
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      int depth = 0;
      bool wraps = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0) {
          wraps = false;
          break;
        }
      }
      if (!wraps) break;
      s = trim(s.substr(1, s.size() - 2));
    }
    return s;
  };
  num_s = strip_parens(num_s);
  if (slash != std::string::npos) den_s = strip_parens(den_s);

  if (curve.kind() == CurveKind::ProjectiveLine) {
    Polynomial num = parse_polynomial(num_s, curve.base(), "t");
    Polynomial den = den_s.empty()
                         ? Polynomial::constant(FieldElement::one(curve.base()))
                         : parse_polynomial(den_s, curve.base(), "t");
    return CurveFunction::line(curve, num, den);
  }
  Cursor nc{num_s};
  YPoly num = parse_ypoly_cursor(nc, curve);
  if (!nc.done()) throw ParseError("trailing input in the numerator", nc.pos);
  CurveFunction f = CurveFunction::elliptic(curve, num.a, num.b,
                                            Polynomial::constant(FieldElement::one(curve.base())));
  if (!den_s.empty()) {
    Cursor dc{den_s};
    YPoly den = parse_ypoly_cursor(dc, curve);
    if (!dc.done()) throw ParseError("trailing input in the denominator", dc.pos);
    f = f * CurveFunction::elliptic(curve, den.a, den.b,
                                    Polynomial::constant(FieldElement::one(curve.base())))
                .inverse();
  }
  return f;
}

Place parse_place(const std::string& text, const CurveModel& curve) {
  std::string body = trim(text);
  // both bare and parenthesized spellings of the named places are accepted
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    std::string inner = trim(body.substr(1, body.size() - 2));
    if (inner == "inf" || inner == "O") body = inner;
  }
  if (curve.kind() == CurveKind::ProjectiveLine) {
    if (body == "inf") return Place::line_infinity(curve.base());
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
      Polynomial pi = parse_polynomial(body.substr(1, body.size() - 2), curve.base(), "t");
      return Place::line_finite(pi);  // validates monic irreducible
    }
    throw ParseError("expected '(poly)' or 'inf'", 0);
  }
  if (body == "O") return Place::ec_origin(curve.base());
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    auto parts = split_top_commas(body.substr(1, body.size() - 2));
    if (parts.size() != 2) throw ParseError("expected '(x0,y0)'", 0);
    FieldElement x0 = parse_element(parts[0], curve.base());
    FieldElement y0 = parse_element(parts[1], curve.base());
    return Place::ec_affine(curve, x0, y0);  // validates on-curve
  }
  throw ParseError("expected '(x0,y0)' or 'O'", 0);
}

Divisor parse_divisor(const std::string& text, const CurveModel& curve) {
  std::string body = trim(text);
  if (body == "0" || body.empty()) return Divisor();
  Divisor d;
  std::size_t i = 0;
  bool first = true;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    std::int64_t sign = 1;
    if (body[i] == '+' || body[i] == '-') {
      sign = body[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between divisor terms", i);
    }
    first = false;
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    std::size_t ci = i;
    if (ci >= body.size() || !std::isdigit(static_cast<unsigned char>(body[ci])))
      throw ParseError("expected a coefficient", i);
    std::int64_t coeff = 0;
    while (ci < body.size() && std::isdigit(static_cast<unsigned char>(body[ci]))) {
      coeff = coeff * 10 + (body[ci] - '0');
      ++ci;
    }
    i = ci;
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i >= body.size() || body[i] != '*') throw ParseError("expected '*' after the coefficient", i);
    ++i;
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    // the place: parenthesized group or an identifier
    std::size_t start = i;
    if (i < body.size() && body[i] == '(') {
      int depth = 0;
      while (i < body.size()) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')') --depth;
        ++i;
        if (depth == 0) break;
      }
      if (depth != 0) throw ParseError("unbalanced parentheses in a place", i);
    } else {
      while (i < body.size() && std::isalnum(static_cast<unsigned char>(body[i]))) ++i;
    }
    if (start == i) throw ParseError("expected a place", i);
    d.add(parse_place(body.substr(start, i - start), curve), sign * coeff);
  }
  return d;
}

Idele parse_idele(const std::string& text, const CurveModel& curve) {
  std::vector<std::string> chunks;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      chunks.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (chunks.empty()) throw ParseError("empty idele", 0);
  std::string head = trim(chunks[0]);
  if (head.compare(0, 5, "tail=") != 0) throw ParseError("idele must start with 'tail='", 0);
  CurveFunction tail = parse_function(head.substr(5), curve);
  std::map<Place, CurveFunction> exc;
  for (std::size_t k = 1; k < chunks.size(); ++k) {
    std::string chunk = trim(chunks[k]);
    if (chunk.empty()) continue;
    std::size_t arrow = chunk.find("=>");
    if (arrow == std::string::npos) throw ParseError("expected 'place=>function'", 0);
    Place x = parse_place(trim(chunk.substr(0, arrow)), curve);
    CurveFunction g = parse_function(trim(chunk.substr(arrow + 2)), curve);
    exc.emplace(std::move(x), std::move(g));
  }
  return Idele::make(curve, std::move(tail), std::move(exc));
}

biext::Elem parse_group_element(const std::string& text, const biext::FinAbGroup& group) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError("expected a tuple '(a,b,...)'", 0);
  auto parts = split_top_commas(body.substr(1, body.size() - 2));
  biext::Elem e;
  for (const auto& part : parts) {
    std::string p = trim(part);
    if (p.empty()) continue;
    bool neg = false;
    std::size_t at = 0;
    if (p[0] == '-') {
      neg = true;
      at = 1;
    }
    std::int64_t v = 0;
    for (; at < p.size(); ++at) {
      if (!std::isdigit(static_cast<unsigned char>(p[at])))
        throw ParseError("expected an integer tuple entry", at);
      v = v * 10 + (p[at] - '0');
    }
    e.push_back(neg ? -v : v);
  }
  if (e.size() != group.rank()) throw StructureError("tuple rank does not match the group");
  return group.reduce(e);
}

biext::PairingSetup parse_biext_setup(const std::string& text) {
  std::vector<std::int64_t> a_orders, ap_orders;
  std::int64_t n_order = -1;
  std::vector<std::vector<std::int64_t>> matrix;
  std::map<std::string, std::vector<std::string>> subgroup_lines;
  bool in_pairing = false;

  std::istringstream is(text);
  std::string line;
  auto parse_ints = [](const std::string& s) {
    std::vector<std::int64_t> out;
    std::istringstream ls(s);
    std::int64_t v;
    while (ls >> v) out.push_back(v);
    return out;
  };
  auto parse_tuples = [](const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && s[i] != '(') ++i;
      if (i >= s.size()) break;
      std::size_t start = i;
      int depth = 0;
      while (i < s.size()) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        ++i;
        if (depth == 0) break;
      }
      out.push_back(s.substr(start, i - start));
    }
    return out;
  };

  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (in_pairing) {
        matrix.push_back(parse_ints(line));
        continue;
      }
      throw ParseError("expected 'key: value' in the setup file", 0);
    }
    std::string key = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));
    in_pairing = false;
    if (key == "A") {
      a_orders = parse_ints(rest);
    } else if (key == "Ap") {
      ap_orders = parse_ints(rest);
    } else if (key == "N") {
      auto v = parse_ints(rest);
      if (v.size() != 1) throw ParseError("N takes a single order", 0);
      n_order = v[0];
    } else if (key == "pairing") {
      in_pairing = true;
      if (!rest.empty()) matrix.push_back(parse_ints(rest));
    } else if (key == "B" || key == "C" || key == "Bp" || key == "Cp") {
      subgroup_lines[key] = parse_tuples(rest);
    } else {
      throw ParseError("unknown setup key '" + key + "'", 0);
    }
  }
  if (a_orders.empty()) throw ParseError("setup file is missing 'A:'", 0);
  if (n_order < 1) throw ParseError("setup file is missing 'N:'", 0);
  if (ap_orders.empty()) ap_orders = a_orders;
  biext::FinAbGroup A(a_orders), Ap(ap_orders);

  auto gens_of = [&](const std::string& key, const biext::FinAbGroup& g,
                     const std::string& fallback) -> std::vector<biext::Elem> {
    auto it = subgroup_lines.find(key);
    if (it == subgroup_lines.end() && !fallback.empty()) it = subgroup_lines.find(fallback);
    std::vector<biext::Elem> out;
    if (it == subgroup_lines.end()) return out;
    for (const auto& t : it->second) out.push_back(parse_group_element(t, g));
    return out;
  };
  // Bp/Cp default to B/C when A' coincides with A
  std::string bfall = (ap_orders == a_orders) ? "B" : "";
  std::string cfall = (ap_orders == a_orders) ? "C" : "";
  return biext::PairingSetup::make(A, Ap, n_order, matrix, gens_of("B", A, ""), gens_of("C", A, ""),
                                   gens_of("Bp", Ap, bfall), gens_of("Cp", Ap, cfall));
}

}  // namespace adelic
