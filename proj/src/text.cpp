#include "hfkit/text.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace hfkit::folang {

namespace {

const std::map<std::string, Pred>& named_preds() {
  static const std::map<std::string, Pred> m = {
      {"incut", Pred::InCut},       {"vbarack", Pred::VbarAckG}, {"powack", Pred::PowAckG},
      {"cardle", Pred::CardLeP},    {"cardzero", Pred::CardZeroG},
      {"cardsucc", Pred::CardSuccG},{"cardadd", Pred::CardAddG}, {"cardmul", Pred::CardMulG},
      {"cardexp2", Pred::CardExp2G},{"iscard", Pred::IsCardP},   {"ordadd", Pred::OrdAddG},
      {"ordmul", Pred::OrdMulG},    {"ordexp2", Pred::OrdExp2G},
  };
  return m;
}

bool is_keyword(const std::string& s) {
  static const std::set<std::string> kw = {"forall", "exists", "not", "and", "or", "in",
                                           "eps",    "V",      "P",   "S"};
  return kw.count(s) || named_preds().count(s);
}

struct Token {
  enum Kind { Name, Number, Sym, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) bump();
    cur_.line = line_;
    cur_.col = col_;
    if (i_ >= s_.size()) {
      cur_.kind = Token::End;
      cur_.text = "";
      return;
    }
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string w;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
                                s_[i_] == '\'')) {
        w += s_[i_];
        bump();
      }
      cur_.kind = Token::Name;
      cur_.text = w;
      return;
    }
    if (c == '2' && i_ + 1 < s_.size() && s_[i_ + 1] == '^') {
      cur_.kind = Token::Sym;
      cur_.text = "2^";
      bump();
      bump();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string w;
      // 0x hex or decimal
      if (c == '0' && i_ + 1 < s_.size() && (s_[i_ + 1] == 'x' || s_[i_ + 1] == 'X')) {
        w += s_[i_]; bump();
        w += s_[i_]; bump();
        while (i_ < s_.size() && std::isxdigit(static_cast<unsigned char>(s_[i_]))) {
          w += s_[i_];
          bump();
        }
      } else {
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          w += s_[i_];
          bump();
        }
      }
      cur_.kind = Token::Number;
      cur_.text = w;
      return;
    }
    // multi-char symbols
    static const char* syms[] = {"<->", "->", "<="};
    for (const char* sym : syms) {
      std::size_t n = std::string(sym).size();
      if (s_.compare(i_, n, sym) == 0) {
        cur_.kind = Token::Sym;
        cur_.text = sym;
        for (std::size_t k = 0; k < n; ++k) bump();
        return;
      }
    }
    cur_.kind = Token::Sym;
    cur_.text = std::string(1, c);
    bump();
  }
  void bump() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  std::string s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  FormulaPtr formula() {
    auto f = parse_iff();
    return f;
  }

  TermPtr term_entry() { return parse_term_expr(); }

  void expect_end() {
    if (lex_.peek().kind != Token::End) fail("trailing input");
  }

  // Sorts of variables currently in binder scope.
  std::map<std::string, std::vector<int>> scope;

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().line, lex_.peek().col);
  }
  bool at_sym(const std::string& s) { return lex_.peek().kind == Token::Sym && lex_.peek().text == s; }
  bool at_name(const std::string& s) {
    return lex_.peek().kind == Token::Name && lex_.peek().text == s;
  }
  void eat_sym(const std::string& s) {
    if (!at_sym(s)) fail("expected '" + s + "'");
    lex_.next();
  }

  FormulaPtr parse_iff() {
    auto f = parse_imp();
    while (at_sym("<->")) {
      lex_.next();
      f = mk_iff(f, parse_imp());
    }
    return f;
  }

  FormulaPtr parse_imp() {
    auto f = parse_or();
    if (at_sym("->")) {
      lex_.next();
      return mk_implies(f, parse_imp());
    }
    return f;
  }

  FormulaPtr parse_or() {
    auto f = parse_and();
    while (at_name("or")) {
      lex_.next();
      f = mk_or(f, parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    auto f = parse_neg();
    while (at_name("and")) {
      lex_.next();
      f = mk_and(f, parse_neg());
    }
    return f;
  }

  FormulaPtr parse_neg() {
    if (at_name("not")) {
      lex_.next();
      return mk_not(parse_neg());
    }
    if (at_name("forall") || at_name("exists")) return parse_quant();
    if (at_sym("(")) {
      // could be a parenthesized formula
      lex_.next();
      auto f = parse_iff();
      eat_sym(")");
      return f;
    }
    return parse_atom();
  }

  FormulaPtr parse_quant() {
    bool is_all = at_name("forall");
    lex_.next();
    if (lex_.peek().kind != Token::Name) fail("expected variable");
    std::string name = lex_.next().text;
    if (is_keyword(name)) fail("reserved word used as variable: " + name);
    int sort = 0;
    if (at_sym(":")) {
      lex_.next();
      if (lex_.peek().kind != Token::Number) fail("expected sort index");
      sort = std::stoi(lex_.next().text);
    }
    Var v{name, sort};
    std::optional<BoundKind> bk;
    TermPtr bound;
    if (at_name("in")) {
      lex_.next();
      bk = BoundKind::In;
      bound = parse_term_expr();
    } else if (at_sym("<=")) {
      lex_.next();
      bk = BoundKind::Le;
      bound = parse_term_expr();
    }
    eat_sym(".");
    scope[name].push_back(sort);
    auto body = parse_iff();
    scope[name].pop_back();
    if (bk)
      return is_all ? mk_bforall(v, *bk, bound, body) : mk_bexists(v, *bk, bound, body);
    return is_all ? mk_forall(v, body) : mk_exists(v, body);
  }

  // Normalize flat arithmetic equations over variables/numerals to the
  // predicate-only graph atoms.
  FormulaPtr normalize_eq(TermPtr lhs, TermPtr rhs) {
    auto flat = [](const TermPtr& t) {
      return t->kind == Term::Kind::Variable || t->kind == Term::Kind::Numeral;
    };
    if (flat(lhs) && rhs->kind == Term::Kind::Numeral && rhs->lit == 0)
      return mk_atom(Pred::ZeroG, {lhs});
    if (flat(lhs) && rhs->kind == Term::Kind::Apply) {
      bool args_flat = true;
      for (auto& a : rhs->args) args_flat = args_flat && flat(a);
      if (args_flat) {
        switch (rhs->fn) {
          case Fn::Succ:
            return mk_atom(Pred::SuccG, {lhs, rhs->args[0]});
          case Fn::Add:
            return mk_atom(Pred::AddG, {lhs, rhs->args[0], rhs->args[1]});
          case Fn::Mul:
            return mk_atom(Pred::MulG, {lhs, rhs->args[0], rhs->args[1]});
          case Fn::Exp2:
            return mk_atom(Pred::Exp2G, {lhs, rhs->args[0]});
          default:
            break;
        }
      }
    }
    return mk_atom(Pred::Eq, {lhs, rhs});
  }

  FormulaPtr parse_atom() {
    if (lex_.peek().kind == Token::Name && named_preds().count(lex_.peek().text)) {
      std::string name = lex_.next().text;
      Pred p = named_preds().at(name);
      eat_sym("(");
      std::vector<TermPtr> args;
      args.push_back(parse_term_expr());
      Rational scale{1, 1};
      while (at_sym(",")) {
        lex_.next();
        if (p == Pred::InCut) {
          // scale: integer or integer/integer
          if (lex_.peek().kind != Token::Number) fail("expected scale");
          scale.num = std::stol(lex_.next().text);
          scale.den = 1;
          if (at_sym("/")) {
            lex_.next();
            if (lex_.peek().kind != Token::Number) fail("expected scale denominator");
            scale.den = std::stol(lex_.next().text);
          }
          break;
        }
        args.push_back(parse_term_expr());
      }
      eat_sym(")");
      if (p == Pred::InCut) {
        if (args.size() != 1) fail("incut takes one term");
        if (scale.num <= 0 || scale.den <= 0) fail("incut scale must be positive");
        return mk_incut(args[0], scale);
      }
      if (args.size() != pred_arity(p)) fail(name + ": wrong arity");
      return mk_atom(p, std::move(args));
    }
    auto lhs = parse_term_expr();
    if (at_sym("=")) {
      lex_.next();
      return normalize_eq(lhs, parse_term_expr());
    }
    if (at_sym("<=")) {
      lex_.next();
      return mk_atom(Pred::Le, {lhs, parse_term_expr()});
    }
    if (at_name("in")) {
      lex_.next();
      return mk_atom(Pred::In, {lhs, parse_term_expr()});
    }
    if (at_name("eps")) {
      lex_.next();
      return mk_atom(Pred::Eps, {lhs, parse_term_expr()});
    }
    fail("expected atom");
  }

  TermPtr parse_term_expr() { return parse_sum(); }

  TermPtr parse_sum() {
    auto t = parse_product();
    while (at_sym("+")) {
      lex_.next();
      t = mk_apply(Fn::Add, {t, parse_product()});
    }
    return t;
  }

  TermPtr parse_product() {
    auto t = parse_factor();
    while (at_sym("*")) {
      lex_.next();
      t = mk_apply(Fn::Mul, {t, parse_factor()});
    }
    return t;
  }

  TermPtr parse_factor() {
    if (at_sym("2^")) {
      lex_.next();
      return mk_apply(Fn::Exp2, {parse_factor()});
    }
    if (at_sym("(")) {
      lex_.next();
      auto t = parse_sum();
      eat_sym(")");
      return t;
    }
    if (at_sym("#")) {
      lex_.next();
      if (lex_.peek().kind != Token::Number) fail("expected code literal digits");
      return mk_codelit(Nat(code_from_string(lex_.next().text).value()));
    }
    if (lex_.peek().kind == Token::Number) {
      return mk_num(Nat(code_from_string(lex_.next().text).value()));
    }
    if (lex_.peek().kind != Token::Name) fail("expected term");
    std::string name = lex_.next().text;
    if (name == "V" || name == "P" || name == "S") {
      eat_sym("(");
      auto a = parse_sum();
      eat_sym(")");
      Fn f = name == "V" ? Fn::Vbar : name == "P" ? Fn::Pow : Fn::Succ;
      return mk_apply(f, {a});
    }
    if (is_keyword(name)) fail("reserved word used as variable: " + name);
    int sort = 0;
    bool annotated = false;
    if (at_sym(":")) {
      lex_.next();
      if (lex_.peek().kind != Token::Number) fail("expected sort index");
      sort = std::stoi(lex_.next().text);
      annotated = true;
    }
    if (!annotated) {
      auto it = scope.find(name);
      if (it != scope.end() && !it->second.empty()) sort = it->second.back();
    }
    return mk_var(name, sort);
  }

  Lexer lex_;
};

}  // namespace

FormulaPtr parse(const std::string& text) {
  Parser p(text);
  auto f = p.formula();
  p.expect_end();
  auto err = sort_check(f);
  if (!err.empty()) throw ParseError("sort error: " + err, 1, 1);
  return f;
}

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  auto t = p.term_entry();
  p.expect_end();
  return t;
}

namespace {

int conn_prec(Conn c) {
  switch (c) {
    case Conn::Iff: return 1;
    case Conn::Implies: return 2;
    case Conn::Or: return 3;
    case Conn::And: return 4;
    case Conn::Not: return 5;
  }
  return 5;
}

void print_term_rec(const TermPtr& t, std::ostream& os, int prec) {
  switch (t->kind) {
    case Term::Kind::Variable:
      os << t->var.name;
      if (t->var.sort != 0) os << ":" << t->var.sort;
      return;
    case Term::Kind::Numeral:
      os << t->lit.get_str(10);
      return;
    case Term::Kind::CodeLit:
      os << "#" << t->lit.get_str(10);
      return;
    case Term::Kind::Apply:
      switch (t->fn) {
        case Fn::Vbar:
          os << "V(";
          print_term_rec(t->args[0], os, 0);
          os << ")";
          return;
        case Fn::Pow:
          os << "P(";
          print_term_rec(t->args[0], os, 0);
          os << ")";
          return;
        case Fn::Succ:
          os << "S(";
          print_term_rec(t->args[0], os, 0);
          os << ")";
          return;
        case Fn::Exp2:
          os << "2^";
          print_term_rec(t->args[0], os, 3);
          return;
        case Fn::Add: {
          if (prec > 1) os << "(";
          print_term_rec(t->args[0], os, 1);
          os << " + ";
          print_term_rec(t->args[1], os, 2);
          if (prec > 1) os << ")";
          return;
        }
        case Fn::Mul: {
          if (prec > 2) os << "(";
          print_term_rec(t->args[0], os, 2);
          os << " * ";
          print_term_rec(t->args[1], os, 3);
          if (prec > 2) os << ")";
          return;
        }
      }
  }
}

const char* named_pred_text(Pred p) {
  for (auto& [k, v] : named_preds())
    if (v == p) return k.c_str();
  return nullptr;
}

void print_rec(const FormulaPtr& f, std::ostream& os, int prec) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      switch (f->pred) {
        case Pred::Eq:
          print_term_rec(f->args[0], os, 1);
          os << " = ";
          print_term_rec(f->args[1], os, 1);
          return;
        case Pred::In:
          print_term_rec(f->args[0], os, 1);
          os << " in ";
          print_term_rec(f->args[1], os, 1);
          return;
        case Pred::Eps:
          print_term_rec(f->args[0], os, 1);
          os << " eps ";
          print_term_rec(f->args[1], os, 1);
          return;
        case Pred::Le:
          print_term_rec(f->args[0], os, 1);
          os << " <= ";
          print_term_rec(f->args[1], os, 1);
          return;
        case Pred::ZeroG:
          print_term_rec(f->args[0], os, 1);
          os << " = 0";
          return;
        case Pred::SuccG:
          print_term_rec(f->args[0], os, 1);
          os << " = S(";
          print_term_rec(f->args[1], os, 0);
          os << ")";
          return;
        case Pred::AddG:
          print_term_rec(f->args[0], os, 1);
          os << " = ";
          print_term_rec(f->args[1], os, 1);
          os << " + ";
          print_term_rec(f->args[2], os, 2);
          return;
        case Pred::MulG:
          print_term_rec(f->args[0], os, 1);
          os << " = ";
          print_term_rec(f->args[1], os, 2);
          os << " * ";
          print_term_rec(f->args[2], os, 3);
          return;
        case Pred::Exp2G:
          print_term_rec(f->args[0], os, 1);
          os << " = 2^";
          print_term_rec(f->args[1], os, 3);
          return;
        case Pred::InCut: {
          os << "incut(";
          print_term_rec(f->args[0], os, 0);
          if (!(f->scale == Rational{1, 1})) {
            os << ", " << f->scale.num;
            if (f->scale.den != 1) os << "/" << f->scale.den;
          }
          os << ")";
          return;
        }
        default: {
          os << named_pred_text(f->pred) << "(";
          for (std::size_t i = 0; i < f->args.size(); ++i) {
            if (i) os << ", ";
            print_term_rec(f->args[i], os, 0);
          }
          os << ")";
          return;
        }
      }
    }
    case Formula::Kind::Connective: {
      if (f->conn == Conn::Not) {
        os << "not ";
        print_rec(f->sub[0], os, conn_prec(Conn::Not));
        return;
      }
      int p = conn_prec(f->conn);
      bool paren = prec > p || (f->conn == Conn::Iff && prec == p);
      if (paren) os << "(";
      const char* op = f->conn == Conn::And ? " and " : f->conn == Conn::Or ? " or "
                       : f->conn == Conn::Implies ? " -> " : " <-> ";
      // left operand printed one level tighter for the right-assoc implies
      print_rec(f->sub[0], os, f->conn == Conn::Implies ? p + 1 : p);
      os << op;
      print_rec(f->sub[1], os, f->conn == Conn::Implies ? p : p + 1);
      if (paren) os << ")";
      return;
    }
    case Formula::Kind::Quant:
    case Formula::Kind::BoundedQuant: {
      bool paren = prec > 0;
      if (paren) os << "(";
      os << (f->q == QuantKind::ForAll ? "forall " : "exists ") << f->qvar.name;
      if (f->qvar.sort != 0) os << ":" << f->qvar.sort;
      if (f->kind == Formula::Kind::BoundedQuant) {
        os << (f->bk == BoundKind::In ? " in " : " <= ");
        print_term_rec(f->bound, os, 1);
      }
      os << " . ";
      print_rec(f->body, os, 0);
      if (paren) os << ")";
      return;
    }
  }
}

}  // namespace

std::string print(const FormulaPtr& f) {
  std::ostringstream os;
  print_rec(f, os, 0);
  return os.str();
}

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  print_term_rec(t, os, 0);
  return os.str();
}

}  // namespace hfkit::folang
