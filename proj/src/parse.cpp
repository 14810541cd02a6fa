#include "elp/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "elp/errors.hpp"

namespace elp {

bool NGAtom::ground() const {
  for (const auto& t : args)
    if (t.is_var) return false;
  return true;
}

std::string NGAtom::to_string() const {
  if (args.empty()) return pred;
  std::string s = pred + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i].text;
  }
  return s + ")";
}

std::string NGLiteral::to_string() const {
  return (strong_neg ? "-" : "") + atom.to_string();
}

std::string NGFormula::to_string(Dialect d) const {
  const char* neg_sym = d == Dialect::gelfond ? "-" : "~";
  switch (kind) {
    case Kind::falsum: return "#false";
    case Kind::truth: return "#true";
    case Kind::atom: return atom.to_string();
    case Kind::neg: return neg_sym + lhs->to_string(d);
    case Kind::conj: return "(" + lhs->to_string(d) + " & " + rhs->to_string(d) + ")";
    case Kind::disj: return "(" + lhs->to_string(d) + " | " + rhs->to_string(d) + ")";
    case Kind::implies: return "(" + lhs->to_string(d) + " -> " + rhs->to_string(d) + ")";
  }
  return "";
}

std::string NGModal::to_string(Dialect d) const {
  std::string s;
  if (default_neg) s += "not ";
  if (strong_neg) s += "-";
  if (bare_atom)
    s += "K " + body->atom.to_string();
  else
    s += "K (" + body->to_string(d) + ")";
  return s;
}

std::string NGGuard::to_string() const {
  std::string s = std::to_string(bound) + " { ";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) s += ", ";
    s += elements[i].to_string();
  }
  if (!conditions.empty()) {
    s += " : ";
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      if (i) s += ", ";
      s += conditions[i].to_string();
    }
  }
  return s + " }";
}

std::string NGBodyElem::to_string(Dialect d) const {
  switch (kind) {
    case Kind::literal: return (default_neg ? "not " : "") + lit.to_string();
    case Kind::modal: return modal.to_string(d);
    case Kind::guard: return card.to_string();
  }
  return "";
}

std::string NGRule::to_string(Dialect d) const {
  std::string s;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (i) s += " | ";
    s += head[i].to_string();
  }
  if (!body.empty()) {
    s += s.empty() ? ":- " : " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) s += ", ";
      s += body[i].to_string(d);
    }
  }
  return s + ".";
}

std::string SourceProgram::to_string() const {
  std::ostringstream os;
  if (explicit_dialect)
    os << "#dialect " << (dialect == Dialect::gelfond ? "gelfond" : "lk") << ".\n";
  if (!vocab_decls.empty()) {
    os << "#vocab ";
    for (std::size_t i = 0; i < vocab_decls.size(); ++i)
      os << (i ? ", " : "") << vocab_decls[i].to_string();
    os << ".\n";
  }
  for (const auto& d : domain_decls) os << "#domain " << d.to_string() << ".\n";
  if (!const_decls.empty()) {
    os << "#const ";
    for (std::size_t i = 0; i < const_decls.size(); ++i)
      os << (i ? ", " : "") << const_decls[i];
    os << ".\n";
  }
  for (const auto& r : statements) os << r.to_string(dialect) << "\n";
  return os.str();
}

namespace {

struct Token {
  enum class Kind {
    end, ident, var, integer, kw_not, kw_k, directive,
    dot, comma, pipe, amp, arrow, minus, tilde,
    lparen, rparen, lbrace, rbrace, colon, colon_dash
  };
  Kind kind = Kind::end;
  std::string text;
  long ival = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= s_.size()) return t;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::integer;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        t.text += take();
      t.ival = std::stol(t.text);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        t.text += take();
      if (t.text == "not") t.kind = Token::Kind::kw_not;
      else if (t.text == "K") t.kind = Token::Kind::kw_k;
      else if (std::isupper(static_cast<unsigned char>(t.text[0]))) t.kind = Token::Kind::var;
      else t.kind = Token::Kind::ident;
      return t;
    }
    if (c == '#') {
      take();
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        t.text += take();
      if (t.text.empty()) throw ParseError("bare '#'", t.line, t.col);
      t.kind = Token::Kind::directive;
      return t;
    }
    take();
    switch (c) {
      case '.': t.kind = Token::Kind::dot; return t;
      case ',': t.kind = Token::Kind::comma; return t;
      case '|': t.kind = Token::Kind::pipe; return t;
      case '&': t.kind = Token::Kind::amp; return t;
      case '~': t.kind = Token::Kind::tilde; return t;
      case '(': t.kind = Token::Kind::lparen; return t;
      case ')': t.kind = Token::Kind::rparen; return t;
      case '{': t.kind = Token::Kind::lbrace; return t;
      case '}': t.kind = Token::Kind::rbrace; return t;
      case '-':
        if (pos_ < s_.size() && s_[pos_] == '>') {
          take();
          t.kind = Token::Kind::arrow;
        } else {
          t.kind = Token::Kind::minus;
        }
        return t;
      case ':':
        if (pos_ < s_.size() && s_[pos_] == '-') {
          take();
          t.kind = Token::Kind::colon_dash;
        } else {
          t.kind = Token::Kind::colon;
        }
        return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
  }

 private:
  char take() {
    char c = s_[pos_++];
    if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
    return c;
  }
  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, std::optional<Dialect> forced)
      : lex_(text), forced_(forced) {
    if (forced_) { out_.dialect = *forced_; }
    advance();
  }

  SourceProgram parse() {
    while (cur_.kind != Token::Kind::end) {
      if (cur_.kind == Token::Kind::directive)
        directive();
      else
        statement();
    }
    for (const auto& r : out_.statements) check_safety(r);
    return out_;
  }

  NGFormula::Ptr formula_only() {
    auto f = formula(false);
    if (cur_.kind != Token::Kind::end) fail("trailing input after formula");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.col);
  }
  void advance() { cur_ = lex_.next(); }
  bool accept(Token::Kind k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }
  void expect(Token::Kind k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }
  bool gelfond() const { return out_.dialect == Dialect::gelfond; }

  void directive() {
    std::string name = cur_.text;
    Token at = cur_;
    advance();
    if (name == "dialect") {
      if (cur_.kind != Token::Kind::ident) fail("expected dialect name");
      Dialect d;
      if (cur_.text == "lk" || cur_.text == "two_valued") d = Dialect::two_valued;
      else if (cur_.text == "gelfond") d = Dialect::gelfond;
      else fail("unknown dialect '" + cur_.text + "'");
      advance();
      if (!out_.statements.empty())
        throw ParseError("dialect directive must precede all rules", at.line, at.col);
      if ((forced_ && *forced_ != d) || (out_.explicit_dialect && out_.dialect != d))
        throw ParseError("conflicting dialect selection", at.line, at.col);
      out_.dialect = d;
      out_.explicit_dialect = true;
    } else if (name == "vocab") {
      do {
        NGAtom a = atomish();
        if (!a.ground()) fail("vocabulary atoms must be ground");
        out_.vocab_decls.push_back(std::move(a));
      } while (accept(Token::Kind::comma));
    } else if (name == "domain") {
      NGAtom a = atomish();
      if (a.args.size() != 1 || !a.args[0].is_var)
        throw ParseError("domain directive must be unary over a variable", at.line, at.col);
      out_.domain_decls.push_back(std::move(a));
    } else if (name == "const") {
      do {
        if (cur_.kind != Token::Kind::ident && cur_.kind != Token::Kind::integer)
          fail("expected constant name");
        out_.const_decls.push_back(cur_.text);
        advance();
      } while (accept(Token::Kind::comma));
    } else {
      throw ParseError("unknown directive '#" + name + "'", at.line, at.col);
    }
    expect(Token::Kind::dot, "'.'");
  }

  void statement() {
    NGRule r;
    if (cur_.kind != Token::Kind::colon_dash && cur_.kind != Token::Kind::dot) {
      do {
        r.head.push_back(head_literal());
      } while (accept(Token::Kind::pipe));
    }
    if (accept(Token::Kind::colon_dash)) {
      do {
        r.body.push_back(body_elem());
      } while (accept(Token::Kind::comma));
    }
    expect(Token::Kind::dot, "'.'");
    int guards = 0;
    for (const auto& e : r.body)
      if (e.kind == NGBodyElem::Kind::guard) ++guards;
    if (guards > 1) fail("at most one cardinality guard per rule");
    if (guards && !r.head.empty()) fail("cardinality guards are restricted to constraint rules");
    out_.statements.push_back(std::move(r));
  }

  NGLiteral head_literal() {
    NGLiteral l;
    if (cur_.kind == Token::Kind::minus) {
      require_strong_neg();
      advance();
      l.strong_neg = true;
    }
    l.atom = atomish();
    return l;
  }

  void require_strong_neg() {
    if (!gelfond()) fail("strong negation '-' is not available in the two-valued dialect");
  }

  NGBodyElem body_elem() {
    NGBodyElem e;
    if (cur_.kind == Token::Kind::integer) {
      e.kind = NGBodyElem::Kind::guard;
      e.card = guard();
      return e;
    }
    bool dn = accept(Token::Kind::kw_not);
    bool sn = false;
    if (cur_.kind == Token::Kind::minus) {
      require_strong_neg();
      advance();
      sn = true;
    }
    if (cur_.kind == Token::Kind::kw_k) {
      advance();
      e.kind = NGBodyElem::Kind::modal;
      e.modal.default_neg = dn;
      e.modal.strong_neg = sn;
      if (accept(Token::Kind::lparen)) {
        e.modal.body = formula(true);
        expect(Token::Kind::rparen, "')'");
      } else {
        if (cur_.kind == Token::Kind::kw_k) fail("nested modal operator");
        auto f = std::make_shared<NGFormula>();
        f->kind = NGFormula::Kind::atom;
        f->atom = atomish();
        e.modal.body = f;
        e.modal.bare_atom = true;
      }
      return e;
    }
    e.kind = NGBodyElem::Kind::literal;
    e.default_neg = dn;
    e.lit.strong_neg = sn;
    e.lit.atom = atomish();
    return e;
  }

  NGGuard guard() {
    NGGuard g;
    g.bound = static_cast<int>(cur_.ival);
    advance();
    expect(Token::Kind::lbrace, "'{'");
    if (accept(Token::Kind::rbrace)) return g;
    g.elements.push_back(atomish());
    if (accept(Token::Kind::colon)) {
      do {
        g.conditions.push_back(atomish());
      } while (accept(Token::Kind::comma));
    } else {
      while (accept(Token::Kind::comma)) g.elements.push_back(atomish());
    }
    expect(Token::Kind::rbrace, "'}'");
    return g;
  }

  // implies (right-assoc) over disj over conj over unary
  NGFormula::Ptr formula(bool modal_context) {
    auto l = disj(modal_context);
    if (accept(Token::Kind::arrow)) {
      auto r = formula(modal_context);
      auto f = std::make_shared<NGFormula>();
      f->kind = NGFormula::Kind::implies;
      f->lhs = l;
      f->rhs = r;
      return f;
    }
    return l;
  }
  NGFormula::Ptr disj(bool mc) {
    auto l = conj(mc);
    while (accept(Token::Kind::pipe)) {
      auto f = std::make_shared<NGFormula>();
      f->kind = NGFormula::Kind::disj;
      f->lhs = l;
      f->rhs = conj(mc);
      l = f;
    }
    return l;
  }
  NGFormula::Ptr conj(bool mc) {
    auto l = unary(mc);
    while (accept(Token::Kind::amp)) {
      auto f = std::make_shared<NGFormula>();
      f->kind = NGFormula::Kind::conj;
      f->lhs = l;
      f->rhs = unary(mc);
      l = f;
    }
    return l;
  }
  NGFormula::Ptr unary(bool mc) {
    auto f = std::make_shared<NGFormula>();
    if (cur_.kind == Token::Kind::kw_k) fail("nested modal operator");
    if (cur_.kind == Token::Kind::minus || cur_.kind == Token::Kind::tilde) {
      bool is_minus = cur_.kind == Token::Kind::minus;
      if (is_minus && !gelfond())
        fail("negation is written '~' in the two-valued dialect");
      if (!is_minus && gelfond())
        fail("negation is written '-' in the Gelfond dialect");
      advance();
      f->kind = NGFormula::Kind::neg;
      f->lhs = unary(mc);
      return f;
    }
    if (accept(Token::Kind::lparen)) {
      auto inner = formula(mc);
      expect(Token::Kind::rparen, "')'");
      return inner;
    }
    if (cur_.kind == Token::Kind::directive && cur_.text == "true") {
      advance();
      f->kind = NGFormula::Kind::truth;
      return f;
    }
    if (cur_.kind == Token::Kind::directive && cur_.text == "false") {
      advance();
      f->kind = NGFormula::Kind::falsum;
      return f;
    }
    f->kind = NGFormula::Kind::atom;
    f->atom = atomish();
    return f;
  }

  NGAtom atomish() {
    NGAtom a;
    if (cur_.kind != Token::Kind::ident) fail("expected an atom");
    a.pred = cur_.text;
    advance();
    if (accept(Token::Kind::lparen)) {
      do {
        Term t;
        if (cur_.kind == Token::Kind::var) {
          t.is_var = true;
          t.text = cur_.text;
        } else if (cur_.kind == Token::Kind::ident || cur_.kind == Token::Kind::integer) {
          t.text = cur_.text;
        } else {
          fail("expected a term");
        }
        advance();
        a.args.push_back(std::move(t));
      } while (accept(Token::Kind::comma));
      expect(Token::Kind::rparen, "')'");
    }
    return a;
  }

  // --- safety -----------------------------------------------------------

  static void atom_vars(const NGAtom& a, std::set<std::string>& out) {
    for (const auto& t : a.args)
      if (t.is_var) out.insert(t.text);
  }
  static void formula_vars(const NGFormula& f, std::set<std::string>& out) {
    if (f.kind == NGFormula::Kind::atom) atom_vars(f.atom, out);
    if (f.lhs) formula_vars(*f.lhs, out);
    if (f.rhs) formula_vars(*f.rhs, out);
  }

  void check_safety(const NGRule& r) const {
    std::set<std::string> safe;
    for (const auto& d : out_.domain_decls) atom_vars(d, safe);
    for (const auto& e : r.body)
      if (e.kind == NGBodyElem::Kind::literal && !e.default_neg) atom_vars(e.lit.atom, safe);

    std::set<std::string> need;
    for (const auto& l : r.head) atom_vars(l.atom, need);
    for (const auto& e : r.body) {
      if (e.kind == NGBodyElem::Kind::literal && e.default_neg) atom_vars(e.lit.atom, need);
      if (e.kind == NGBodyElem::Kind::modal) formula_vars(*e.modal.body, need);
      if (e.kind == NGBodyElem::Kind::guard) {
        std::set<std::string> local = safe;
        for (const auto& c : e.card.conditions) atom_vars(c, local);
        std::set<std::string> elem_vars;
        for (const auto& el : e.card.elements) atom_vars(el, elem_vars);
        for (const auto& v : elem_vars)
          if (!local.count(v))
            throw ParseError("unsafe variable '" + v + "' in rule: " + r.to_string(out_.dialect),
                             0, 0);
      }
    }
    for (const auto& v : need)
      if (!safe.count(v))
        throw ParseError("unsafe variable '" + v + "' in rule: " + r.to_string(out_.dialect), 0,
                         0);
  }

  Lexer lex_;
  std::optional<Dialect> forced_;
  Token cur_;
  SourceProgram out_;
};

}  // namespace

SourceProgram parse_program(const std::string& text, std::optional<Dialect> dialect) {
  return Parser(text, dialect).parse();
}

NGFormula::Ptr parse_formula(const std::string& text, Dialect dialect) {
  return Parser(text, dialect).formula_only();
}

}  // namespace elp
