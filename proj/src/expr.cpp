#include "spectra/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "spectra/ideal.hpp"

namespace spectra {

bool RingExpr::operator==(const RingExpr& other) const {
  const Node& a = node();
  const Node& b = other.node();
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<ZmodExpr>(a))
    return std::get<ZmodExpr>(a).n == std::get<ZmodExpr>(b).n;
  if (std::holds_alternative<GFExpr>(a))
    return std::get<GFExpr>(a).p == std::get<GFExpr>(b).p;
  if (std::holds_alternative<ProductExpr>(a))
    return std::get<ProductExpr>(a).factors == std::get<ProductExpr>(b).factors;
  if (std::holds_alternative<QuotientExpr>(a)) {
    const auto& qa = std::get<QuotientExpr>(a);
    const auto& qb = std::get<QuotientExpr>(b);
    return qa.base == qb.base && qa.gens == qb.gens;
  }
  if (std::holds_alternative<MonomialRingExpr>(a)) {
    const auto& ma = std::get<MonomialRingExpr>(a);
    const auto& mb = std::get<MonomialRingExpr>(b);
    return ma.characteristic == mb.characteristic && ma.vars == mb.vars &&
           ma.monomials == mb.monomials;
  }
  const auto& pa = std::get<PosetLiteralExpr>(a);
  const auto& pb = std::get<PosetLiteralExpr>(b);
  return pa.points == pb.points && pa.edges == pb.edges;
}

namespace {

struct Token {
  enum Kind { ident, number, symbol, end } kind = end;
  std::string text;
  long value = 0;  // for numbers
  size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_symbol(const char* sym) const {
    return tok_.kind == Token::symbol && tok_.text == sym;
  }
  bool at_ident(const char* id) const {
    return tok_.kind == Token::ident && tok_.text == id;
  }
  Token expect_symbol(const char* sym) {
    if (!at_symbol(sym))
      throw ParseError("expected '" + std::string(sym) + "', found '" +
                           tok_.text + "'",
                       tok_.pos);
    return take();
  }
  long expect_number() {
    if (tok_.kind != Token::number)
      throw ParseError("expected a number, found '" + tok_.text + "'", tok_.pos);
    return take().value;
  }
  std::string expect_ident() {
    if (tok_.kind != Token::ident)
      throw ParseError("expected an identifier, found '" + tok_.text + "'",
                       tok_.pos);
    return take().text;
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::end, "<end>", 0, i_};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      long v = 0;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
        v = v * 10 + (s_[j] - '0');
        if (v > 1000000000) throw ParseError("number too large", i_);
        ++j;
      }
      tok_ = {Token::number, s_.substr(i_, j - i_), v, i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) ||
                               s_[j] == '_'))
        ++j;
      tok_ = {Token::ident, s_.substr(i_, j - i_), 0, i_};
      i_ = j;
      return;
    }
    static const std::string symbols = "/()[]{},^*<";
    if (symbols.find(c) != std::string::npos) {
      tok_ = {Token::symbol, std::string(1, c), 0, i_};
      ++i_;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(const std::string& s) : lex_(s) {}

  RingExpr parse_full() {
    RingExpr e = parse_product();
    if (lex_.peek().kind != Token::end)
      throw ParseError("trailing input '" + lex_.peek().text + "'",
                       lex_.peek().pos);
    return e;
  }

private:
  RingExpr parse_product() {
    std::vector<RingExpr> factors;
    factors.push_back(parse_postfix());
    while (lex_.at_ident("x")) {
      lex_.take();
      factors.push_back(parse_postfix());
    }
    if (factors.size() == 1) return factors[0];
    return RingExpr(ProductExpr{std::move(factors)});
  }

  RingExpr parse_postfix() {
    RingExpr e = parse_primary();
    while (lex_.at_symbol("/")) {
      lex_.take();
      lex_.expect_symbol("(");
      QuotientExpr q;
      q.base.push_back(e);
      q.gens = parse_element_literals();
      lex_.expect_symbol(")");
      e = RingExpr(std::move(q));
    }
    return e;
  }

  RingExpr parse_primary() {
    const Token& t = lex_.peek();
    if (lex_.at_symbol("(")) {
      lex_.take();
      RingExpr e = parse_product();
      lex_.expect_symbol(")");
      return e;
    }
    if (t.kind != Token::ident)
      throw ParseError("expected a ring expression, found '" + t.text + "'",
                       t.pos);
    if (t.text == "Z") {
      lex_.take();
      lex_.expect_symbol("/");
      long n = lex_.expect_number();
      return RingExpr(ZmodExpr{static_cast<int>(n)});
    }
    if (t.text == "GF") {
      lex_.take();
      lex_.expect_symbol("(");
      long p = lex_.expect_number();
      lex_.expect_symbol(")");
      return RingExpr(GFExpr{static_cast<int>(p)});
    }
    if (t.text == "poset") {
      lex_.take();
      return parse_poset();
    }
    if (t.text.size() >= 2 && t.text[0] == 'F' &&
        std::all_of(t.text.begin() + 1, t.text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return parse_monomial_ring();
    throw ParseError("unknown ring constructor '" + t.text + "'", t.pos);
  }

  RingExpr parse_poset() {
    lex_.expect_symbol("{");
    PosetLiteralExpr p;
    std::map<std::string, int> index;
    auto point = [&](const std::string& name) {
      auto it = index.find(name);
      if (it != index.end()) return it->second;
      int id = static_cast<int>(p.points.size());
      p.points.push_back(name);
      index.emplace(name, id);
      return id;
    };
    if (!lex_.at_symbol("}")) {
      while (true) {
        int a = point(lex_.expect_ident());
        if (lex_.at_symbol("<")) {
          lex_.take();
          int b = point(lex_.expect_ident());
          p.edges.emplace_back(a, b);
        }
        if (lex_.at_symbol(",")) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    lex_.expect_symbol("}");
    return RingExpr(std::move(p));
  }

  RingExpr parse_monomial_ring() {
    Token t = lex_.take();
    MonomialRingExpr m;
    m.characteristic = static_cast<int>(std::stol(t.text.substr(1)));
    lex_.expect_symbol("[");
    while (true) {
      m.vars.push_back(lex_.expect_ident());
      if (lex_.at_symbol(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    lex_.expect_symbol("]");
    lex_.expect_symbol("/");
    lex_.expect_symbol("(");
    if (!lex_.at_symbol(")")) {
      while (true) {
        m.monomials.push_back(parse_monomial(m.vars));
        if (lex_.at_symbol(",")) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    lex_.expect_symbol(")");
    return RingExpr(std::move(m));
  }

  Monomial parse_monomial(const std::vector<std::string>& vars) {
    Monomial mono(vars.size(), 0);
    bool first = true;
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::number && t.value == 1 && first) {
        lex_.take();  // the constant monomial "1"
      } else if (t.kind == Token::ident) {
        auto it = std::find(vars.begin(), vars.end(), t.text);
        if (it == vars.end())
          throw ParseError("unknown variable '" + t.text + "'", t.pos);
        lex_.take();
        int e = 1;
        if (lex_.at_symbol("^")) {
          lex_.take();
          e = static_cast<int>(lex_.expect_number());
        }
        mono[it - vars.begin()] += e;
      } else {
        throw ParseError("expected a monomial, found '" + t.text + "'", t.pos);
      }
      first = false;
      if (lex_.at_symbol("*")) {
        lex_.take();
        continue;
      }
      break;
    }
    return mono;
  }

  /// Comma-separated element literals; commas nested in (), [], {} belong to
  /// the literal. Literal text is reassembled from its tokens, so it is
  /// whitespace-insensitive like everything else.
  std::vector<std::string> parse_element_literals() {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::end)
        throw ParseError("unterminated generator list", t.pos);
      if (depth == 0 && t.kind == Token::symbol &&
          (t.text == ")" || t.text == ",")) {
        if (!cur.empty()) out.push_back(cur);
        if (t.text == ")") return out;
        lex_.take();  // ','
        cur.clear();
        continue;
      }
      if (t.kind == Token::symbol &&
          (t.text == "(" || t.text == "[" || t.text == "{"))
        ++depth;
      if (t.kind == Token::symbol &&
          (t.text == ")" || t.text == "]" || t.text == "}"))
        --depth;
      cur += lex_.take().text;
    }
  }

  Lexer lex_;
};

struct PrettyPrinter {
  std::string operator()(const ZmodExpr& e) const {
    return "Z/" + std::to_string(e.n);
  }
  std::string operator()(const GFExpr& e) const {
    return "GF(" + std::to_string(e.p) + ")";
  }
  std::string operator()(const ProductExpr& e) const {
    std::string s;
    for (size_t i = 0; i < e.factors.size(); ++i) {
      if (i) s += " x ";
      s += pretty_print(e.factors[i]);
    }
    return s;
  }
  std::string operator()(const QuotientExpr& e) const {
    std::string base = pretty_print(e.base[0]);
    if (std::holds_alternative<ProductExpr>(e.base[0].node()))
      base = "(" + base + ")";
    std::string s = base + " / (";
    for (size_t i = 0; i < e.gens.size(); ++i) {
      if (i) s += ",";
      s += e.gens[i];
    }
    return s + ")";
  }
  std::string operator()(const MonomialRingExpr& e) const {
    std::string s = "F" + std::to_string(e.characteristic) + "[";
    for (size_t i = 0; i < e.vars.size(); ++i) {
      if (i) s += ",";
      s += e.vars[i];
    }
    s += "]/(";
    for (size_t i = 0; i < e.monomials.size(); ++i) {
      if (i) s += ", ";
      s += monomial_text(e, e.monomials[i]);
    }
    return s + ")";
  }
  std::string operator()(const PosetLiteralExpr& e) const {
    std::string s = "poset{";
    std::vector<char> mentioned(e.points.size(), 0);
    bool first = true;
    for (const auto& [a, b] : e.edges) {
      if (!first) s += ", ";
      first = false;
      s += e.points[a] + "<" + e.points[b];
      mentioned[a] = mentioned[b] = 1;
    }
    for (size_t i = 0; i < e.points.size(); ++i) {
      if (mentioned[i]) continue;
      if (!first) s += ", ";
      first = false;
      s += e.points[i];
    }
    return s + "}";
  }

  static std::string monomial_text(const MonomialRingExpr& e, const Monomial& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += e.vars[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }
};

struct Builder {
  BuiltObject operator()(const ZmodExpr& e) const { return make_zmod(e.n); }
  BuiltObject operator()(const GFExpr& e) const { return make_gf(e.p); }
  BuiltObject operator()(const ProductExpr& e) const {
    std::vector<RingPtr> factors;
    for (const auto& f : e.factors) {
      BuiltObject b = build(f);
      if (!std::holds_alternative<RingPtr>(b))
        throw ConstructionError("products require table rings; got " +
                                pretty_print(f));
      factors.push_back(std::get<RingPtr>(b));
    }
    return make_product(factors).ring;
  }
  BuiltObject operator()(const QuotientExpr& e) const {
    BuiltObject b = build(e.base[0]);
    if (!std::holds_alternative<RingPtr>(b))
      throw ConstructionError(
          "quotients by element lists require a table ring base");
    RingPtr base = std::get<RingPtr>(b);
    std::vector<int> gens;
    for (const auto& lit : e.gens) {
      int found = -1;
      for (int i = 0; i < base->size(); ++i)
        if (base->elem_name(i) == lit) {
          found = i;
          break;
        }
      if (found < 0)
        throw ConstructionError("no element named \"" + lit + "\" in " +
                                base->label());
      gens.push_back(found);
    }
    return make_quotient(base, ideal_from_generators(base, gens)).ring;
  }
  BuiltObject operator()(const MonomialRingExpr& e) const {
    return MonomialQuotientRing::make(e.characteristic, e.vars, e.monomials);
  }
  BuiltObject operator()(const PosetLiteralExpr& e) const {
    return poset_from_edges(static_cast<int>(e.points.size()), e.edges,
                            e.points);
  }
};

}  // namespace

RingExpr parse(const std::string& input) { return Parser(input).parse_full(); }

std::string pretty_print(const RingExpr& expr) {
  return std::visit(PrettyPrinter{}, expr.node());
}

BuiltObject build(const RingExpr& expr) {
  return std::visit(Builder{}, expr.node());
}

RingPtr build_table_ring(const RingExpr& expr) {
  BuiltObject b = build(expr);
  if (!std::holds_alternative<RingPtr>(b))
    throw ConstructionError("expected a table-ring expression, got " +
                            pretty_print(expr));
  return std::get<RingPtr>(b);
}

}  // namespace spectra
