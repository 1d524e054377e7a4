#include "barq/serialize.hpp"

#include "barq/rng.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace barq {

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  Json j;
  f >> j;
  return j;
}

int perm_size(const Group& group) {
  // The symmetric backends act on {0,...,n-1} with n recoverable from the
  // order (1, 2, 6 or 24).
  switch (group.order()) {
    case 1: return 1;
    case 2: return 2;
    case 6: return 3;
    case 24: return 4;
    default: throw std::logic_error("unexpected symmetric group order");
  }
}

}  // namespace

Json dyadic_to_json(const Dyadic& d) { return d.str(); }

Dyadic dyadic_from_json(const Json& j) { return Dyadic::parse(j.get<std::string>()); }

Json plmap_to_json(const PLMap& m) {
  Json pts = Json::array();
  for (const auto& p : m.points()) pts.push_back(Json::array({p.x.str(), p.y.str()}));
  Json j;
  j["points"] = pts;
  return j;
}

PLMap plmap_from_json(const Json& j) {
  std::vector<PLMap::Point> pts;
  for (const auto& p : j.at("points")) {
    pts.push_back({Dyadic::parse(p.at(0).get<std::string>()),
                   Dyadic::parse(p.at(1).get<std::string>())});
  }
  return PLMap::from_points(std::move(pts));
}

Json element_to_json(const Group& group, const Element& e) {
  switch (group.kind()) {
    case Group::Kind::cyclic:
      return std::get<CyclicElt>(e);
    case Group::Kind::symmetric: {
      Json a = Json::array();
      const PermElt& p = std::get<PermElt>(e);
      for (int i = 0; i < perm_size(group); ++i) a.push_back(static_cast<int>(p.img[i]));
      return a;
    }
    case Group::Kind::free_abelian: {
      Json a = Json::array();
      for (std::int64_t v : std::get<ZVec>(e)) a.push_back(v);
      return a;
    }
    case Group::Kind::fprime:
      return plmap_to_json(std::get<PLMap>(e));
  }
  throw std::logic_error("unreachable");
}

Element element_from_json(const Group& group, const Json& j) {
  switch (group.kind()) {
    case Group::Kind::cyclic: {
      const auto n = static_cast<std::int64_t>(group.order());
      const std::int64_t v = j.get<std::int64_t>();
      return CyclicElt(((v % n) + n) % n);
    }
    case Group::Kind::symmetric: {
      const int n = perm_size(group);
      if (!j.is_array() || static_cast<int>(j.size()) != n) {
        throw std::invalid_argument("permutation must be an image array of length " +
                                    std::to_string(n));
      }
      PermElt p;
      bool seen[4] = {false, false, false, false};
      for (int i = 0; i < n; ++i) {
        const int v = j.at(i).get<int>();
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation image array");
        seen[v] = true;
        p.img[i] = static_cast<std::uint8_t>(v);
      }
      return p;
    }
    case Group::Kind::free_abelian: {
      const auto rank = std::get<ZVec>(group.identity()).size();
      if (!j.is_array() || j.size() != rank) {
        throw std::invalid_argument("vector must have length " + std::to_string(rank));
      }
      ZVec v;
      for (const auto& c : j) v.push_back(c.get<std::int64_t>());
      return v;
    }
    case Group::Kind::fprime:
      return plmap_from_json(j);
  }
  throw std::logic_error("unreachable");
}

Json chain_to_json(const Chain& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms()) {
    Json tuple = Json::array();
    for (const Element& e : t.tuple) tuple.push_back(element_to_json(c.group(), e));
    terms.push_back(Json{{"coeff", t.coeff}, {"tuple", tuple}});
  }
  Json j;
  j["group"] = c.group().name();
  j["degree"] = c.degree();
  j["terms"] = terms;
  return j;
}

Chain chain_from_json(const Json& j) {
  const Group group = Group::parse(j.at("group").get<std::string>());
  const int degree = j.at("degree").get<int>();
  if (degree < 0) throw std::invalid_argument("chain degree must be >= 0");
  std::vector<Chain::Term> terms;
  for (const auto& t : j.at("terms")) {
    Chain::Term term;
    term.coeff = t.at("coeff").get<std::int64_t>();
    const Json& tuple = t.at("tuple");
    if (static_cast<int>(tuple.size()) != degree) {
      throw std::invalid_argument("chain term tuple length must equal the degree");
    }
    for (const auto& e : tuple) term.tuple.push_back(element_from_json(group, e));
    terms.push_back(std::move(term));
  }
  return Chain(group, degree, std::move(terms));
}

Chain chain_from_file(const std::string& path) { return chain_from_json(load_json_file(path)); }

Json table_cochain_to_json(const Group& group, const Cochain& w) {
  const std::size_t total = tuple_space_size(group, w.degree());
  Json table = Json::array();
  for (std::size_t i = 0; i < total; ++i) {
    table.push_back(rat_to_string(w(tuple_from_index(group, w.degree(), i))));
  }
  Json j;
  j["group"] = group.name();
  j["degree"] = w.degree();
  j["table"] = table;
  return j;
}

TableCochain table_cochain_from_json(const Json& j) {
  Group group = Group::parse(j.at("group").get<std::string>());
  const int degree = j.at("degree").get<int>();
  std::vector<Rat> values;
  for (const auto& v : j.at("table")) values.push_back(rat_from_string(v.get<std::string>()));
  Cochain w = Cochain::from_table(group, degree, std::move(values));
  return TableCochain{std::move(group), std::move(w)};
}

TableCochain table_cochain_from_file(const std::string& path) {
  return table_cochain_from_json(load_json_file(path));
}

namespace {

// Recursive-descent parser for the element grammar documented in the header.
struct ExprParser {
  const Group& group;
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("element expression '" + text + "' at position " +
                                std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Element parse_expr() {
    Element acc = parse_factor();
    for (;;) {
      const char op = peek();
      if (op == '.') {
        ++pos;
        acc = group.multiply(acc, parse_factor());
      } else if (op == '*') {
        ++pos;
        Element rhs = parse_factor();
        if (!std::holds_alternative<PLMap>(acc) || !std::holds_alternative<PLMap>(rhs)) {
          fail("the star product '*' is defined for PL maps only");
        }
        acc = star_product(std::get<PLMap>(acc), std::get<PLMap>(rhs));
      } else {
        return acc;
      }
    }
  }

  Element parse_factor() {
    skip_ws();
    if (text.compare(pos, 4, "inv(") == 0) {
      pos += 4;
      Element e = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return group.invert(e);
    }
    if (consume('(')) {
      Element e = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    return parse_atom();
  }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      fail("expected an integer");
    }
    return std::stoll(text.substr(start, pos - start));
  }

  Element parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("expected an element");
    if (text[pos] == 'e' && !is_atom_char(pos + 1)) {
      ++pos;
      return group.identity();
    }
    switch (group.kind()) {
      case Group::Kind::fprime: {
        const char c = text[pos];
        if (c == '1' && !is_atom_char(pos + 1)) {
          ++pos;
          return group.identity();
        }
        if (c == 'f' && !is_atom_char(pos + 1)) {
          ++pos;
          return builtin_f();
        }
        if (c == 'g' && !is_atom_char(pos + 1)) {
          ++pos;
          return builtin_g();
        }
        if (c == 'w') {
          ++pos;
          const std::int64_t i = parse_int();
          const auto& gens = fprime_builtin_generators();
          if (i < 0 || i >= static_cast<std::int64_t>(gens.size())) {
            fail("generator index out of range (0.." + std::to_string(gens.size() - 1) + ")");
          }
          return gens[static_cast<std::size_t>(i)];
        }
        fail("expected one of '1', 'e', 'f', 'g', 'w<i>', 'inv(', '('");
      }
      case Group::Kind::cyclic: {
        const auto n = static_cast<std::int64_t>(group.order());
        const std::int64_t v = parse_int();
        return CyclicElt(((v % n) + n) % n);
      }
      case Group::Kind::symmetric: {
        const int n = perm_size(group);
        PermElt p;
        bool seen[4] = {false, false, false, false};
        for (int i = 0; i < n; ++i) {
          if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected " + std::to_string(n) + " image digits");
          }
          const int v = text[pos] - '0';
          if (v >= n || seen[v]) fail("not a permutation image string");
          seen[v] = true;
          p.img[i] = static_cast<std::uint8_t>(v);
          ++pos;
        }
        return p;
      }
      case Group::Kind::free_abelian: {
        const auto rank = std::get<ZVec>(group.identity()).size();
        if (peek() != '[') {
          if (rank == 1) return ZVec{parse_int()};
          fail("expected '[a,b,...]' with " + std::to_string(rank) + " entries");
        }
        consume('[');
        ZVec v;
        if (peek() != ']') {
          v.push_back(parse_int());
          while (consume(',')) v.push_back(parse_int());
        }
        if (!consume(']')) fail("expected ']'");
        if (v.size() != rank) fail("expected " + std::to_string(rank) + " entries");
        return v;
      }
    }
    fail("unsupported group kind");
  }

  bool is_atom_char(std::size_t p) const {
    return p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_');
  }
};

}  // namespace

Element parse_element(const Group& group, const std::string& expr) {
  ExprParser parser{group, expr};
  Element e = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != expr.size()) parser.fail("trailing characters");
  return e;
}

GoldenValues golden_defaults() { return GoldenValues{}; }

GoldenValues golden_from_file(const std::string& path) {
  const Json j = load_json_file(path);
  GoldenValues g;
  auto read = [&j](const char* key, std::int64_t& slot) {
    if (j.contains(key)) slot = j.at(key).get<std::int64_t>();
  };
  read("alpha_f_g", g.alpha_f_g);
  read("alpha_g_f", g.alpha_g_f);
  read("zeta2_pairing", g.zeta2_pairing);
  read("zeta4_pairing", g.zeta4_pairing);
  read("zeta8_pairing", g.zeta8_pairing);
  return g;
}

}  // namespace barq
