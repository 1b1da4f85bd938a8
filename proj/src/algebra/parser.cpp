#include "pvialg/parser.hpp"

#include <cctype>

namespace pvialg {

namespace {

class Parser {
 public:
  Parser(const std::string& text, ParseContext& ctx) : s_(text), ctx_(ctx) {}

  RatX run() {
    RatX v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatX expr() {
    RatX acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  RatX term() {
    RatX acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RatX d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatX unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatX power() {
    RatX base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      if (pos_ - start > 4) fail("exponent too large");
      int e = std::stoi(s_.substr(start, pos_ - start));
      return base.pow(e);
    }
    return base;
  }

  RatX atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatX v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(s_.substr(start, pos_ - start));
      return RatX(ExtScalar(GaussRational(mpq_class(n))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name.size() == 1) return symbol(name[0], start);
      if (ctx_.lookup) {
        if (const RatX* v = ctx_.lookup(name)) return *v;
      }
      throw ParseError("unknown name '" + name + "'", start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  RatX symbol(char c, std::size_t at) {
    if (c == 'x') return RatX::variable();
    if (c == 'i') return RatX(ExtScalar(GaussRational::imaginary_unit()));
    if (c == 'w') {
      if (!ctx_.field) throw ParseError("'w' used without a field declaration", at);
      return RatX(ExtScalar::generator(ctx_.field));
    }
    if (!std::islower(static_cast<unsigned char>(c))) throw ParseError(std::string("unknown symbol '") + c + "'", at);
    if (ctx_.param == 0) ctx_.param = c;
    if (ctx_.param != c) {
      throw ParseError(std::string("second parameter '") + c + "' (already using '" + ctx_.param + "')", at);
    }
    return RatX(ExtScalar(RatFunc::variable(c)));
  }

  const std::string& s_;
  ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

RatX parse_expression(const std::string& text, ParseContext& ctx) {
  Parser p(text, ctx);
  return p.run();
}

ExtScalar parse_scalar(const std::string& text, ParseContext& ctx) {
  RatX v = parse_expression(text, ctx);
  if (!v.is_constant()) throw ParseError("expression depends on x", 0);
  return v.constant_value();
}

QPoly parse_param_poly(const std::string& text, ParseContext& ctx) {
  ExtScalar v = parse_scalar(text, ctx);
  if (!v.is_base() || !v.a().is_polynomial()) throw ParseError("expected a polynomial in the parameter", 0);
  QPoly p = v.a().num();
  if (ctx.param) p.set_var(ctx.param);
  return p;
}

mpq_class parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  std::size_t k = 0;
  bool neg = false;
  if (k < t.size() && (t[k] == '-' || t[k] == '+')) {
    neg = t[k] == '-';
    ++k;
  }
  auto digits = [&](std::size_t from) {
    std::size_t e = from;
    while (e < t.size() && std::isdigit(static_cast<unsigned char>(t[e]))) ++e;
    return e;
  };
  std::size_t e1 = digits(k);
  if (e1 == k) throw ParseError("expected a rational number '" + text + "'", k);
  mpz_class num(t.substr(k, e1 - k));
  mpz_class den = 1;
  if (e1 < t.size()) {
    if (t[e1] != '/') throw ParseError("expected a rational number '" + text + "'", e1);
    std::size_t e2 = digits(e1 + 1);
    if (e2 == e1 + 1 || e2 != t.size()) throw ParseError("expected a rational number '" + text + "'", e1 + 1);
    den = mpz_class(t.substr(e1 + 1, e2 - e1 - 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'", e1 + 1);
  }
  mpq_class q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace pvialg
