#include "lexkit/syntax.hpp"

#include <cctype>

namespace lexkit {

namespace {

enum class Tok {
  Ident,
  Lambda,
  Dot,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Slash,
  Query,
  LBrace,
  RBrace,
  Comma,
  Arrow,
  Amp,
  End,
  Bad,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Lambda: return "\\";
    case Tok::Dot: return ".";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::LBrack: return "[";
    case Tok::RBrack: return "]";
    case Tok::Slash: return "/";
    case Tok::Query: return "?";
    case Tok::LBrace: return "{";
    case Tok::RBrace: return "}";
    case Tok::Comma: return ",";
    case Tok::Arrow: return "->";
    case Tok::Amp: return "&";
    case Tok::End: return "end of input";
    case Tok::Bad: return "invalid character";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    cur_ = Token{};
    cur_.span.start = pos_;
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::End;
      cur_.span.end = pos_;
      return;
    }
    char c = src_[pos_];
    if (ident_start(c)) {
      std::size_t b = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      cur_.kind = Tok::Ident;
      cur_.text = std::string(src_.substr(b, pos_ - b));
      cur_.span.end = pos_;
      return;
    }
    // UTF-8 lambda
    if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xBB) {
      pos_ += 2;
      cur_.kind = Tok::Lambda;
      cur_.span.end = pos_;
      return;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      pos_ += 2;
      cur_.kind = Tok::Arrow;
      cur_.span.end = pos_;
      return;
    }
    ++pos_;
    switch (c) {
      case '\\': cur_.kind = Tok::Lambda; break;
      case '.': cur_.kind = Tok::Dot; break;
      case '(': cur_.kind = Tok::LParen; break;
      case ')': cur_.kind = Tok::RParen; break;
      case '[': cur_.kind = Tok::LBrack; break;
      case ']': cur_.kind = Tok::RBrack; break;
      case '/': cur_.kind = Tok::Slash; break;
      case '?': cur_.kind = Tok::Query; break;
      case '{': cur_.kind = Tok::LBrace; break;
      case '}': cur_.kind = Tok::RBrace; break;
      case ',': cur_.kind = Tok::Comma; break;
      case '&': cur_.kind = Tok::Amp; break;
      default: cur_.kind = Tok::Bad; break;
    }
    cur_.text = std::string(1, c);
    cur_.span.end = pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, {Tok::End, Tok::Ident, Tok::LParen, Tok::Query, Tok::LBrack});
    return t;
  }

  Type whole_type() {
    Type t = type();
    expect(Tok::End, {Tok::End, Tok::Arrow, Tok::Amp});
    return t;
  }

 private:
  [[noreturn]] void fail(const std::vector<Tok>& want) {
    std::vector<std::string> names;
    for (Tok t : want) names.push_back(describe(t));
    const Token& got = lex_.peek();
    std::string msg = "unexpected " + describe(got.kind);
    if (!got.text.empty() && got.kind != Tok::End) msg += " '" + got.text + "'";
    msg += " at offset " + std::to_string(got.span.start) + ", expected ";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) msg += ", ";
      msg += names[i];
    }
    throw ParseError(msg, got.span, names);
  }

  Token expect(Tok k, const std::vector<Tok>& want) {
    if (lex_.peek().kind != k) fail(want);
    return lex_.take();
  }

  Token expect(Tok k) { return expect(k, {k}); }

  bool at(Tok k) const { return lex_.peek().kind == k; }

  bool at_atom() const { return at(Tok::Ident) || at(Tok::LParen) || at(Tok::Query); }

  Term term() {
    if (at(Tok::Lambda)) {
      lex_.take();
      Name x = expect(Tok::Ident).text;
      expect(Tok::Dot);
      return Term::lam(std::move(x), term());
    }
    if (!at_atom()) fail({Tok::Lambda, Tok::Ident, Tok::LParen, Tok::Query});
    Term t = suffixed();
    while (at_atom()) t = Term::app(std::move(t), suffixed());
    return t;
  }

  Term suffixed() {
    Term t = atom();
    while (at(Tok::LBrack)) {
      lex_.take();
      bool labelled = false;
      if (at(Tok::LBrack)) {
        lex_.take();
        labelled = true;
      }
      Name x = expect(Tok::Ident, {Tok::Ident, Tok::LBrack}).text;
      expect(Tok::Slash);
      Term u = term();
      expect(Tok::RBrack);
      if (labelled) {
        expect(Tok::RBrack);
        t = Term::lsub(std::move(t), std::move(x), std::move(u));
      } else {
        t = Term::esub(std::move(t), std::move(x), std::move(u));
      }
    }
    return t;
  }

  Term atom() {
    if (at(Tok::Ident)) return Term::var(lex_.take().text);
    if (at(Tok::LParen)) {
      lex_.take();
      Term t = term();
      expect(Tok::RParen);
      return t;
    }
    if (at(Tok::Query)) {
      lex_.take();
      Name x = expect(Tok::Ident).text;
      expect(Tok::LBrace);
      NameSet deco;
      if (at(Tok::Ident)) {
        deco.insert(lex_.take().text);
        while (at(Tok::Comma)) {
          lex_.take();
          deco.insert(expect(Tok::Ident).text);
        }
      }
      expect(Tok::RBrace, {Tok::Ident, Tok::Comma, Tok::RBrace});
      return Term::meta(std::move(x), deco);
    }
    fail({Tok::Ident, Tok::LParen, Tok::Query});
  }

  Type type() {
    Type t = inter();
    if (at(Tok::Arrow)) {
      lex_.take();
      return Type::arrow(std::move(t), type());
    }
    return t;
  }

  Type inter() {
    Type t = atomty();
    while (at(Tok::Amp)) {
      lex_.take();
      t = Type::inter(std::move(t), atomty());
    }
    return t;
  }

  Type atomty() {
    if (at(Tok::Ident)) return Type::atom(lex_.take().text);
    if (at(Tok::LParen)) {
      lex_.take();
      Type t = type();
      expect(Tok::RParen);
      return t;
    }
    fail({Tok::Ident, Tok::LParen});
  }

  Lexer lex_;
};

enum class Ctx { Top, AppFun, AppArg, SubBody };

void print(const Term& t, Ctx ctx, std::string& out) {
  switch (t.kind()) {
    case Kind::Var:
      out += t.name();
      return;
    case Kind::Meta: {
      out += '?';
      out += t.name();
      out += '{';
      bool first = true;
      for (const auto& d : t.decoration()) {
        if (!first) out += ',';
        first = false;
        out += d;
      }
      out += '}';
      return;
    }
    case Kind::Lam: {
      bool paren = ctx != Ctx::Top;
      if (paren) out += '(';
      out += '\\';
      out += t.name();
      out += '.';
      print(t.body(), Ctx::Top, out);
      if (paren) out += ')';
      return;
    }
    case Kind::App: {
      bool paren = ctx == Ctx::AppArg || ctx == Ctx::SubBody;
      if (paren) out += '(';
      print(t.fun(), Ctx::AppFun, out);
      out += ' ';
      print(t.arg(), Ctx::AppArg, out);
      if (paren) out += ')';
      return;
    }
    case Kind::ESub:
    case Kind::LSub: {
      bool lab = t.kind() == Kind::LSub;
      print(t.body(), Ctx::SubBody, out);
      out += lab ? "[[" : "[";
      out += t.name();
      out += '/';
      print(t.arg(), Ctx::Top, out);
      out += lab ? "]]" : "]";
      return;
    }
  }
}

enum class TyCtx { Top, ArrowLeft, InterLeft, InterRight };

void print(const Type& t, TyCtx ctx, std::string& out) {
  switch (t.kind()) {
    case TypeKind::Atom:
      out += t.name();
      return;
    case TypeKind::Arrow: {
      bool paren = ctx != TyCtx::Top;
      if (paren) out += '(';
      print(t.left(), TyCtx::ArrowLeft, out);
      out += "->";
      print(t.right(), TyCtx::Top, out);
      if (paren) out += ')';
      return;
    }
    case TypeKind::Inter: {
      bool paren = ctx == TyCtx::InterRight;
      if (paren) out += '(';
      print(t.left(), TyCtx::InterLeft, out);
      out += '&';
      print(t.right(), TyCtx::InterRight, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view src) { return Parser(src).whole_term(); }

std::string print_term(const Term& t) {
  std::string out;
  print(t, Ctx::Top, out);
  return out;
}

Type parse_type(std::string_view src) { return Parser(src).whole_type(); }

std::string print_type(const Type& t) {
  std::string out;
  print(t, TyCtx::Top, out);
  return out;
}

}  // namespace lexkit
