#include "gsa/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace gsa {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 0, column = 0;
};

class Lexer {
public:
  Lexer(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      Token t{Tok::End, "", line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          t.text += take();
        if (pos_ < text_.size() && text_[pos_] == '[') {
          t.text += take();
          while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
            t.text += take();
          if (pos_ >= text_.size() || text_[pos_] != ']') fail("unterminated index in identifier");
          t.text += take();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += take();
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          t.text += take();
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += take();
        }
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        t.kind = Tok::Symbol;
        t.text = "->";
        take();
        take();
      } else if (std::string_view("{}()@,=+-*^;").find(c) != std::string_view::npos) {
        t.kind = Tok::Symbol;
        t.text = std::string(1, take());
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(source_, line_, col_, msg); }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

Rational parse_rational(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

class Parser {
public:
  Parser(std::vector<Token> toks, std::string source) : toks_(std::move(toks)), source_(std::move(source)) {}

  Document run() {
    Atlas a;
    bool have_kind = false;
    struct PendingTransition {
      Token at;
      std::size_t from, to;
      std::vector<std::pair<Token, std::size_t>> fwd_start, inv_start;
    };
    std::vector<PendingTransition> pending;
    std::optional<std::size_t> action_start;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (accept_word("kind")) {
        a.kind = parse_kind();
        have_kind = true;
      } else if (accept_word("nmanifold")) {
        auto v = expect(Tok::Ident, "true or false");
        if (v.text != "true" && v.text != "false") fail(v, "expected true or false");
        a.nmanifold = v.text == "true";
      } else if (accept_word("chart")) {
        if (!have_kind) fail(t, "kind must be declared before charts");
        a.charts.push_back(parse_chart(a));
      } else if (accept_word("transition")) {
        // bodies refer to charts only, so they are resolved in a second pass
        PendingTransition p{t, chart_ref(a), 0, {}, {}};
        expect_symbol("->");
        p.to = chart_ref(a);
        expect_symbol("{");
        bool fwd = false, inv = false;
        while (!accept_symbol("}")) {
          auto w = expect(Tok::Ident, "forward or inverse");
          if (w.text == "forward" && !fwd) {
            fwd = true;
            fwd_pos_.push_back(pos_);
            skip_block();
          } else if (w.text == "inverse" && !inv) {
            inv = true;
            inv_pos_.push_back(pos_);
            skip_block();
          } else {
            fail(w, "expected a forward or inverse block, got '" + w.text + "'");
          }
        }
        if (!fwd || !inv) fail(t, "transition needs both forward and inverse blocks");
        pending.push_back(std::move(p));
      } else if (accept_word("cocycle")) {
        CocycleTriple c;
        c.u = chart_ref(a);
        c.v = chart_ref(a);
        c.w = chart_ref(a);
        a.cocycles.push_back(c);
      } else if (accept_word("action")) {
        if (action_start) fail(t, "duplicate action block");
        action_start = pos_;
        expect(Tok::Ident, "flavor");
        skip_block();
      } else {
        fail(t, "unexpected '" + t.text + "'");
      }
    }
    if (!have_kind) fail(peek(), "missing kind declaration");

    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto& p = pending[i];
      const auto& u = a.charts[p.from];
      const auto& v = a.charts[p.to];
      pos_ = fwd_pos_[i];
      auto f = parse_map_block(v, u);
      pos_ = inv_pos_[i];
      auto g = parse_map_block(u, v);
      a.transitions.push_back({p.from, p.to, std::move(f), std::move(g)});
    }
    Document doc;
    doc.atlas = std::make_shared<const Atlas>(std::move(a));
    if (action_start) {
      pos_ = *action_start;
      doc.action = parse_action(doc.atlas);
    }
    return doc;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(source_, t.line, t.column, msg);
  }
  bool accept_word(std::string_view w) {
    if (peek().kind == Tok::Ident && peek().text == w) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_symbol(std::string_view s) {
    if (peek().kind == Tok::Symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what + (peek().kind == Tok::End ? ", got end of input" : ", got '" + peek().text + "'"));
    return toks_[pos_++];
  }
  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'" +
                                            (peek().kind == Tok::End ? "" : ", got '" + peek().text + "'"));
  }
  int expect_int(const std::string& what) {
    auto t = expect(Tok::Number, what);
    if (t.text.find('/') != std::string::npos || t.text.size() > 6) fail(t, "expected a small integer for " + what);
    return std::stoi(t.text);
  }
  void skip_block() {
    expect_symbol("{");
    int depth = 1;
    while (depth > 0) {
      if (peek().kind == Tok::End) fail(peek(), "unterminated block");
      if (accept_symbol("{"))
        ++depth;
      else if (accept_symbol("}"))
        --depth;
      else
        ++pos_;
    }
  }

  AtlasKind parse_kind() {
    auto w = expect(Tok::Ident, "weighted, vector or mixed");
    if (w.text == "weighted") return AtlasKind::weighted(expect_int("degree"));
    if (w.text == "vector") return AtlasKind::multivector(static_cast<std::size_t>(expect_int("slot count")));
    if (w.text == "mixed") {
      auto n = static_cast<std::size_t>(expect_int("slot count"));
      return AtlasKind{n, expect_int("degree")};
    }
    fail(w, "unknown kind '" + w.text + "'");
  }

  std::size_t chart_ref(const Atlas& a) {
    auto t = expect(Tok::Ident, "chart name");
    for (std::size_t i = 0; i < a.charts.size(); ++i)
      if (a.charts[i]->name() == t.text) return i;
    fail(t, "unknown chart '" + t.text + "'");
  }

  ChartPtr parse_chart(const Atlas& a) {
    auto name = expect(Tok::Ident, "chart name");
    for (const auto& ch : a.charts)
      if (ch->name() == name.text) fail(name, "duplicate chart '" + name.text + "'");
    expect_symbol("{");
    std::vector<CoordinateSymbol> coords;
    std::set<std::string> seen;
    while (!accept_symbol("}")) {
      auto c = expect(Tok::Ident, "coordinate name");
      if (!seen.insert(c.text).second) fail(c, "duplicate coordinate '" + c.text + "'");
      auto p = expect(Tok::Ident, "parity");
      if (p.text != "even" && p.text != "odd") fail(p, "invalid parity keyword '" + p.text + "'");
      auto at = peek();
      expect_symbol("@");
      expect_symbol("(");
      std::vector<int> w;
      do w.push_back(expect_int("weight entry"));
      while (accept_symbol(","));
      expect_symbol(")");
      CoordinateSymbol sym{c.text, p.text == "odd" ? Parity::Odd : Parity::Even, Weight(w)};
      if (w.size() != a.kind.weight_length())
        fail(at, "weight of '" + c.text + "' has " + std::to_string(w.size()) + " entries, kind " +
                     a.kind.to_string() + " needs " + std::to_string(a.kind.weight_length()));
      for (std::size_t k = 0; k < a.kind.vector_slots; ++k)
        if (w[k] > 1) fail(at, "weight entry " + std::to_string(w[k]) + " out of range for a vector slot");
      if (a.kind.degree && w.back() > *a.kind.degree)
        fail(at, "weight " + std::to_string(w.back()) + " exceeds the degree");
      coords.push_back(std::move(sym));
    }
    return make_chart(name.text, std::move(coords));
  }

  // Block "{ lhs = expr ... }": lhs in vars, expressions over `over`.
  PolynomialMap parse_map_block(const ChartPtr& vars, const ChartPtr& over) {
    expect_symbol("{");
    std::vector<std::optional<Polynomial>> imgs(vars->size());
    while (!accept_symbol("}")) {
      auto lhs = expect(Tok::Ident, "coordinate name");
      auto idx = find(*vars, lhs.text);
      if (!idx) fail(lhs, "'" + lhs.text + "' is not a coordinate of chart " + vars->name());
      if (imgs[*idx]) fail(lhs, "duplicate entry for '" + lhs.text + "'");
      expect_symbol("=");
      imgs[*idx] = parse_expr(over);
      accept_symbol(";");
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      if (imgs[i]) {
        out.push_back(std::move(*imgs[i]));
        continue;
      }
      auto j = find(*over, (*vars)[i].name);
      if (!j) fail(toks_[pos_ - 1], "no image given for '" + (*vars)[i].name + "'");
      out.push_back(Polynomial::coordinate(over, *j));
    }
    return PolynomialMap(vars, over, std::move(out));
  }

  static std::optional<std::size_t> find(const Chart& ch, const std::string& name) {
    for (std::size_t i = 0; i < ch.size(); ++i)
      if (ch[i].name == name) return i;
    return std::nullopt;
  }

  Polynomial parse_expr(const ChartPtr& ch) {
    Polynomial acc = parse_term(ch);
    while (true) {
      if (accept_symbol("+"))
        acc += parse_term(ch);
      else if (accept_symbol("-"))
        acc -= parse_term(ch);
      else
        return acc;
    }
  }
  Polynomial parse_term(const ChartPtr& ch) {
    Polynomial acc = parse_unary(ch);
    while (accept_symbol("*")) acc = acc * parse_unary(ch);
    return acc;
  }
  Polynomial parse_unary(const ChartPtr& ch) {
    if (accept_symbol("-")) return -parse_unary(ch);
    Polynomial base = parse_primary(ch);
    if (accept_symbol("^")) {
      int e = expect_int("exponent");
      Polynomial out = Polynomial::constant(ch, 1);
      for (int i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }
  Polynomial parse_primary(const ChartPtr& ch) {
    const Token t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return Polynomial::constant(ch, parse_rational(t.text));
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      auto i = find(*ch, t.text);
      if (!i) fail(t, "unknown identifier '" + t.text + "' in chart " + ch->name());
      return Polynomial::coordinate(ch, *i);
    }
    if (accept_symbol("(")) {
      auto p = parse_expr(ch);
      expect_symbol(")");
      return p;
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input in expression" : "unexpected '" + t.text + "' in expression");
  }

  ActionTable parse_action(const AtlasPtr& atlas) {
    auto fl = expect(Tok::Ident, "flavor");
    if (fl.text != "symmetric" && fl.text != "skew") fail(fl, "flavor must be symmetric or skew");
    const Flavor flavor = fl.text == "symmetric" ? Flavor::Symmetric : Flavor::Skew;
    const std::size_t n = atlas->kind.vector_slots;
    expect_symbol("{");
    std::map<Permutation, std::vector<PolynomialMap>> given;
    while (!accept_symbol("}")) {
      auto kw = expect(Tok::Ident, "perm");
      if (kw.text != "perm") fail(kw, "expected 'perm'");
      std::vector<int> one;
      while (peek().kind == Tok::Number) one.push_back(expect_int("permutation entry"));
      Permutation s;
      try {
        s = Permutation::from_one_based(one);
      } catch (const std::exception& e) {
        fail(kw, std::string("invalid permutation: ") + e.what());
      }
      if (s.size() != n) fail(kw, "permutation has " + std::to_string(s.size()) + " entries, expected " + std::to_string(n));
      if (given.count(s)) fail(kw, "duplicate entry for " + s.to_string());
      expect_symbol("{");
      std::vector<std::optional<PolynomialMap>> maps(atlas->charts.size());
      while (!accept_symbol("}")) {
        auto ck = expect(Tok::Ident, "chart");
        if (ck.text != "chart") fail(ck, "expected 'chart'");
        auto c = chart_ref(*atlas);
        if (maps[c]) fail(ck, "duplicate chart entry");
        maps[c] = parse_map_block(atlas->charts[c], atlas->charts[c]);
      }
      std::vector<PolynomialMap> full;
      for (std::size_t c = 0; c < maps.size(); ++c)
        full.push_back(maps[c] ? *maps[c] : PolynomialMap::identity(atlas->charts[c]));
      given.emplace(s, std::move(full));
    }
    if (given.size() == factorial(n)) return {atlas, flavor, std::move(given)};
    std::vector<std::vector<PolynomialMap>> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto it = given.find(Permutation::transposition(n, i, i + 1));
      if (it == given.end())
        fail(fl, "action lists neither all of S_" + std::to_string(n) + " nor the adjacent transposition (" +
                     std::to_string(i + 1) + " " + std::to_string(i + 2) + ")");
      gens.push_back(it->second);
    }
    auto table = generate_action(atlas, flavor, gens);
    for (auto& [s, m] : given) table.maps[s] = std::move(m);
    return table;
  }

  static std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

  std::vector<Token> toks_;
  std::string source_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> fwd_pos_, inv_pos_;
};

std::string kind_line(const AtlasKind& k) {
  if (k.vector_slots == 0 && k.degree) return "weighted " + std::to_string(*k.degree);
  if (!k.degree) return "vector " + std::to_string(k.vector_slots);
  return "mixed " + std::to_string(k.vector_slots) + " " + std::to_string(*k.degree);
}

void emit_map(std::ostringstream& os, const PolynomialMap& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.vars()->size(); ++i)
    os << indent << (*m.vars())[i].name << " = " << to_string(m.image(i)) << "\n";
}

std::string weight_text(const Weight& w) {
  std::string s = "@(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

// The entries to list: only the generators when they determine the table.
std::vector<Permutation> listed_permutations(const ActionTable& t) {
  const std::size_t n = t.degree();
  std::vector<std::vector<PolynomialMap>> gens;
  std::vector<Permutation> adj;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    adj.push_back(Permutation::transposition(n, i, i + 1));
    auto it = t.maps.find(adj.back());
    if (it == t.maps.end()) return {};
    gens.push_back(it->second);
  }
  if (n >= 2 && generate_action(t.atlas, t.flavor, gens).maps == t.maps) return adj;
  std::vector<Permutation> all;
  for (const auto& [s, m] : t.maps) all.push_back(s);
  return all;
}

nlohmann::json poly_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [f, c] : p.terms()) {
    auto mono = nlohmann::json::array();
    for (auto i : f) mono.push_back((*p.chart())[i].name);
    arr.push_back({{"coefficient", to_string(c)}, {"monomial", mono}});
  }
  return arr;
}

nlohmann::json map_json(const PolynomialMap& m) {
  auto obj = nlohmann::json::array();
  for (std::size_t i = 0; i < m.vars()->size(); ++i)
    obj.push_back({{"coordinate", (*m.vars())[i].name}, {"image", poly_json(m.image(i))}});
  return obj;
}

}  // namespace

Document parse_document(std::string_view text, const std::string& source) {
  return Parser(Lexer(text, source).run(), source).run();
}

std::string emit_document(const Document& doc) {
  const Atlas& a = *doc.atlas;
  std::ostringstream os;
  os << "kind " << kind_line(a.kind) << "\n";
  os << "nmanifold " << (a.nmanifold ? "true" : "false") << "\n";
  for (const auto& ch : a.charts) {
    os << "\nchart " << ch->name() << " {\n";
    for (const auto& c : ch->coordinates())
      os << "  " << c.name << " " << (is_odd(c.parity) ? "odd" : "even") << " " << weight_text(c.weight) << "\n";
    os << "}\n";
  }
  for (const auto& t : a.transitions) {
    os << "\ntransition " << a.charts[t.from]->name() << " -> " << a.charts[t.to]->name() << " {\n  forward {\n";
    emit_map(os, t.forward, "    ");
    os << "  }\n  inverse {\n";
    emit_map(os, t.inverse, "    ");
    os << "  }\n}\n";
  }
  if (!a.cocycles.empty()) os << "\n";
  for (const auto& c : a.cocycles)
    os << "cocycle " << a.charts[c.u]->name() << " " << a.charts[c.v]->name() << " " << a.charts[c.w]->name()
       << "\n";
  if (doc.action) {
    os << "\naction " << to_string(doc.action->flavor) << " {\n";
    for (const auto& s : listed_permutations(*doc.action)) {
      os << "  perm";
      for (int k : s.one_based()) os << " " << k;
      os << " {\n";
      const auto& maps = doc.action->at(s);
      for (std::size_t c = 0; c < maps.size(); ++c) {
        os << "    chart " << a.charts[c]->name() << " {\n";
        emit_map(os, maps[c], "      ");
        os << "    }\n";
      }
      os << "  }\n";
    }
    os << "}\n";
  }
  return os.str();
}

nlohmann::json to_json(const Document& doc) {
  const Atlas& a = *doc.atlas;
  nlohmann::json j;
  j["schema"] = "gsa-atlas/1";
  j["kind"] = {{"vector_slots", a.kind.vector_slots}, {"degree", a.kind.degree ? nlohmann::json(*a.kind.degree) : nlohmann::json()}};
  j["nmanifold"] = a.nmanifold;
  j["charts"] = nlohmann::json::array();
  for (const auto& ch : a.charts) {
    auto coords = nlohmann::json::array();
    for (const auto& c : ch->coordinates())
      coords.push_back({{"name", c.name}, {"parity", is_odd(c.parity) ? "odd" : "even"}, {"weight", c.weight.entries()}});
    j["charts"].push_back({{"name", ch->name()}, {"coordinates", coords}});
  }
  j["transitions"] = nlohmann::json::array();
  for (const auto& t : a.transitions)
    j["transitions"].push_back({{"from", a.charts[t.from]->name()},
                                {"to", a.charts[t.to]->name()},
                                {"forward", map_json(t.forward)},
                                {"inverse", map_json(t.inverse)}});
  j["cocycles"] = nlohmann::json::array();
  for (const auto& c : a.cocycles)
    j["cocycles"].push_back(std::vector<std::string>{a.charts[c.u]->name(), a.charts[c.v]->name(), a.charts[c.w]->name()});
  if (doc.action) {
    nlohmann::json act;
    act["flavor"] = to_string(doc.action->flavor);
    act["entries"] = nlohmann::json::array();
    for (const auto& [s, maps] : doc.action->maps) {
      nlohmann::json charts = nlohmann::json::object();
      for (std::size_t c = 0; c < maps.size(); ++c) charts[a.charts[c]->name()] = map_json(maps[c]);
      act["entries"].push_back({{"perm", s.one_based()}, {"charts", charts}});
    }
    j["action"] = act;
  }
  return j;
}

Document from_json(const nlohmann::json& j, const std::string& source) {
  auto bad = [&](const std::string& msg) -> ParseError { return ParseError(source, 0, 0, msg); };
  try {
    if (j.value("schema", "") != "gsa-atlas/1") throw bad("unsupported schema (expected gsa-atlas/1)");
    Atlas a;
    const auto& k = j.at("kind");
    a.kind.vector_slots = k.at("vector_slots").get<std::size_t>();
    if (!k.at("degree").is_null()) a.kind.degree = k.at("degree").get<int>();
    a.nmanifold = j.value("nmanifold", false);
    auto chart_index = [&](const std::string& name) {
      for (std::size_t i = 0; i < a.charts.size(); ++i)
        if (a.charts[i]->name() == name) return i;
      throw bad("unknown chart '" + name + "'");
    };
    for (const auto& ch : j.at("charts")) {
      std::vector<CoordinateSymbol> coords;
      for (const auto& c : ch.at("coordinates")) {
        auto p = c.at("parity").get<std::string>();
        if (p != "even" && p != "odd") throw bad("invalid parity '" + p + "'");
        auto w = c.at("weight").get<std::vector<int>>();
        if (w.size() != a.kind.weight_length()) throw bad("weight length mismatch for " + c.at("name").get<std::string>());
        coords.push_back({c.at("name").get<std::string>(), p == "odd" ? Parity::Odd : Parity::Even, Weight(w)});
      }
      a.charts.push_back(make_chart(ch.at("name").get<std::string>(), std::move(coords)));
    }
    auto read_poly = [&](const nlohmann::json& arr, const ChartPtr& over) {
      Polynomial p(over);
      for (const auto& term : arr) {
        Polynomial m = Polynomial::constant(over, parse_rational(term.at("coefficient").get<std::string>()));
        for (const auto& f : term.at("monomial")) {
          auto name = f.get<std::string>();
          bool found = false;
          for (std::size_t i = 0; i < over->size() && !found; ++i)
            if ((*over)[i].name == name) {
              m = m * Polynomial::coordinate(over, i);
              found = true;
            }
          if (!found) throw bad("unknown identifier '" + name + "' in chart " + over->name());
        }
        p += m;
      }
      return p;
    };
    auto read_map = [&](const nlohmann::json& arr, const ChartPtr& vars, const ChartPtr& over) {
      std::vector<std::optional<Polynomial>> imgs(vars->size());
      for (const auto& e : arr) {
        auto name = e.at("coordinate").get<std::string>();
        std::optional<std::size_t> idx;
        for (std::size_t i = 0; i < vars->size(); ++i)
          if ((*vars)[i].name == name) idx = i;
        if (!idx) throw bad("'" + name + "' is not a coordinate of chart " + vars->name());
        imgs[*idx] = read_poly(e.at("image"), over);
      }
      std::vector<Polynomial> out;
      for (std::size_t i = 0; i < imgs.size(); ++i) {
        if (!imgs[i]) throw bad("no image given for '" + (*vars)[i].name + "'");
        out.push_back(*imgs[i]);
      }
      return PolynomialMap(vars, over, std::move(out));
    };
    for (const auto& t : j.at("transitions")) {
      auto from = chart_index(t.at("from").get<std::string>());
      auto to = chart_index(t.at("to").get<std::string>());
      a.transitions.push_back({from, to, read_map(t.at("forward"), a.charts[to], a.charts[from]),
                               read_map(t.at("inverse"), a.charts[from], a.charts[to])});
    }
    for (const auto& c : j.value("cocycles", nlohmann::json::array())) {
      auto names = c.get<std::vector<std::string>>();
      if (names.size() != 3) throw bad("cocycle needs three charts");
      a.cocycles.push_back(CocycleTriple{chart_index(names[0]), chart_index(names[1]), chart_index(names[2])});
    }
    Document doc;
    doc.atlas = std::make_shared<const Atlas>(std::move(a));
    if (j.contains("action")) {
      const auto& act = j.at("action");
      auto fl = act.at("flavor").get<std::string>();
      if (fl != "symmetric" && fl != "skew") throw bad("flavor must be symmetric or skew");
      ActionTable t{doc.atlas, fl == "symmetric" ? Flavor::Symmetric : Flavor::Skew, {}};
      for (const auto& e : act.at("entries")) {
        auto s = Permutation::from_one_based(e.at("perm").get<std::vector<int>>());
        std::vector<PolynomialMap> maps;
        for (const auto& ch : doc.atlas->charts)
          maps.push_back(read_map(e.at("charts").at(ch->name()), ch, ch));
        t.maps.emplace(s, std::move(maps));
      }
      doc.action = std::move(t);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw bad(std::string("malformed JSON document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw bad(e.what());
  }
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(path, 0, e.byte, e.what());
    }
    return from_json(j, path);
  }
  return parse_document(text, path);
}

}  // namespace gsa
