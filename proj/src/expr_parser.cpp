#include "ncqm/expr_parser.hpp"

#include <cctype>
#include <map>

namespace ncqm::sym {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_ = {Tok::End, "", i_};
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      tok_ = {Tok::Int, std::string(text_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      tok_ = {Tok::Ident, std::string(text_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      default:
        throw ParseError(i_, "unexpected character '" + std::string(1, c) + "'");
    }
    tok_ = {k, std::string(1, c), i_};
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Token tok_;
};

const std::map<std::string, Generator, std::less<>>& generator_names() {
  static const std::map<std::string, Generator, std::less<>> m = {
      {"x1", Generator::X1},   {"x2", Generator::X2},
      {"p1", Generator::P1},   {"p2", Generator::P2},
      {"tx1", Generator::TX1}, {"tx2", Generator::TX2},
      {"tp1", Generator::TP1}, {"tp2", Generator::TP2},
      {"a1", Generator::A1},   {"a2", Generator::A2},
      {"a1d", Generator::A1Dag}, {"a2d", Generator::A2Dag},
  };
  return m;
}

const std::map<std::string, Param, std::less<>>& param_names() {
  static const std::map<std::string, Param, std::less<>> m = {
      {"hbar", Param::Hbar}, {"eta", Param::Eta}, {"theta", Param::Theta},
      {"mu", Param::Mu},     {"omega", Param::Omega},
  };
  return m;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  OpPoly parse() {
    OpPoly e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& expected) {
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, "expected " + expected + ", found " + got);
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) fail(lex_.peek(), what);
    return lex_.take();
  }

  OpPoly expr() {
    OpPoly acc = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      Tok op = lex_.take().kind;
      OpPoly rhs = term();
      acc = (op == Tok::Plus) ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  OpPoly term() {
    OpPoly acc = factor();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      Token op = lex_.take();
      OpPoly rhs = factor();
      if (op.kind == Tok::Star) {
        acc = acc * rhs;
      } else {
        auto s = rhs.as_scalar();
        if (!s) throw ParseError(op.pos, "cannot divide by an operator expression");
        if (s->is_zero()) throw DomainError("division by zero in expression");
        acc = acc.scale(s->inverse());
      }
    }
    return acc;
  }

  OpPoly factor() {
    OpPoly base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token e = expect(Tok::Int, "a non-negative integer exponent");
      unsigned long k = std::stoul(e.text);
      if (k > kMaxOperatorDegree)
        throw ResourceError("exponent " + e.text + " exceeds the degree bound " +
                            std::to_string(kMaxOperatorDegree));
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  // rational := int ('/' uint)?  -- the leading '-' is consumed by the caller
  OpPoly rational(bool negative) {
    Token n = expect(Tok::Int, "an integer");
    mpz_class num(n.text);
    if (negative) num = -num;
    mpz_class den(1);
    if (lex_.peek().kind == Tok::Slash) {
      lex_.take();
      Token d = expect(Tok::Int, "a positive denominator");
      den = mpz_class(d.text);
      if (den == 0) throw ParseError(d.pos, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return OpPoly::scalar(Scalar(GaussianRational(q, mpq_class(0))));
  }

  OpPoly atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Minus:
        // sign of a rational literal only, e.g. "-3/2"
        lex_.take();
        if (lex_.peek().kind != Tok::Int)
          fail(lex_.peek(), "an integer after unary '-'");
        return rational(true);
      case Tok::Int:
        return rational(false);
      case Tok::LParen: {
        lex_.take();
        OpPoly e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        Token id = lex_.take();
        if (id.text == "comm") {
          expect(Tok::LParen, "'(' after comm");
          OpPoly a = expr();
          expect(Tok::Comma, "',' between commutator arguments");
          OpPoly b = expr();
          expect(Tok::RParen, "')'");
          return commutator(a, b);
        }
        if (id.text == "i") return OpPoly::scalar(Scalar::i());
        if (id.text == "xi") return OpPoly::scalar(Scalar::xi());
        if (id.text == "sigma") return OpPoly::scalar(Scalar::sigma());
        if (auto it = generator_names().find(id.text); it != generator_names().end())
          return OpPoly::generator(it->second);
        if (auto it = param_names().find(id.text); it != param_names().end())
          return OpPoly::scalar(Scalar::symbol(it->second));
        throw ParseError(id.pos, "unknown identifier '" + id.text + "'");
      }
      default:
        fail(t, "an operand (generator, parameter, rational, 'comm(', or '(')");
    }
  }

  Lexer lex_;
};

}  // namespace

OpPoly parse_expression(std::string_view text) { return Parser(text).parse(); }

Scalar parse_scalar_expression(std::string_view text) {
  OpPoly p = parse_expression(text);
  auto s = p.as_scalar();
  if (!s)
    throw InvalidArgument("expression '" + std::string(text) +
                          "' contains generators; a scalar is required");
  return *s;
}

void add_binding(Bindings& b, std::string_view spec) {
  auto eq = spec.find('=');
  if (eq == std::string_view::npos)
    throw InvalidArgument("binding must have the form name=expr: '" +
                          std::string(spec) + "'");
  std::string name(spec.substr(0, eq));
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
    name.pop_back();
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
    name.erase(name.begin());
  Scalar value = parse_scalar_expression(spec.substr(eq + 1));
  if (name == "xi") {
    b.xi = value;
    return;
  }
  if (name == "sigma") {
    b.sigma = value;
    return;
  }
  if (auto it = param_names().find(name); it != param_names().end()) {
    b.params[static_cast<int>(it->second)] = value;
    return;
  }
  throw InvalidArgument("unknown binding target '" + name +
                        "' (parameters, xi, or sigma)");
}

std::string caret_diagnostic(std::string_view text, std::size_t position) {
  std::string out(text);
  out += "\n";
  out += std::string(std::min(position, text.size()), ' ');
  out += "^";
  return out;
}

}  // namespace ncqm::sym
