#include "lieinv/parse.hpp"

#include "lieinv/error.hpp"

#include <cctype>

namespace lieinv {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return make_add(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors{unary()};
    for (;;) {
      if (accept('*')) {
        factors.push_back(unary());
      } else if (accept('/')) {
        factors.push_back(make_pow(unary(), -1));
      } else {
        break;
      }
    }
    return make_mul(std::move(factors));
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr b = base();
    skip_ws();
    if (accept('^')) {
      const std::size_t at = pos_;
      Expr ex = unary();
      if (!ex.is_const()) throw ParseError(at, "exponent must be a rational constant");
      return make_pow(b, ex.value());
    }
    return b;
  }

  Expr base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (is_digit(c) || c == '.') return number();
    if (is_ident_start(c)) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (is_digit(s_[pos_]) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && is_digit(s_[p])) {
        pos_ = p;
        while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
      }
    }
    try {
      return Expr(parse_rational(s_.substr(start, pos_ - start)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(start, e.what());
    }
  }

  std::vector<Expr> call_args() {
    std::vector<Expr> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    return args;
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    const std::size_t after = pos_;
    const bool call = accept('(');

    static constexpr std::pair<const char*, Fn> kFuncs[] = {
        {"exp", Fn::Exp}, {"log", Fn::Log}, {"sin", Fn::Sin}, {"cos", Fn::Cos}, {"tan", Fn::Tan}};
    if (call) {
      for (const auto& [fname, fn] : kFuncs) {
        if (name == fname) {
          Expr arg = expr();
          expect(')');
          return make_func(fn, arg);
        }
      }
    } else {
      pos_ = after;
    }

    if (!call) {
      if (ctx_.resolve) {
        if (auto s = ctx_.resolve(name)) return Expr(*s);
      }
      for (const auto& dep : ctx_.dependents) {
        if (name.size() > dep.size() + 1 && name.compare(0, dep.size(), dep) == 0 &&
            name[dep.size()] == '_') {
          throw MalformedJetIndex(start, name);
        }
      }
      throw UnknownIdentifier(start, name);
    }

    if (!ctx_.allow_heads) throw UnknownIdentifier(start, name);
    std::string head = name;
    std::vector<int> deriv;
    if (const auto mark = name.rfind("__"); mark != std::string::npos && mark > 0 &&
                                            mark + 2 < name.size()) {
      bool digits = true;
      for (std::size_t i = mark + 2; i < name.size(); ++i) digits = digits && is_digit(name[i]);
      if (digits) {
        head = name.substr(0, mark);
        for (std::size_t i = mark + 2; i < name.size(); ++i) deriv.push_back(name[i] - '0');
      }
    }
    std::vector<Expr> args = call_args();
    if (!deriv.empty() && deriv.size() != args.size())
      throw ParseError(start, "derivative counts of '" + name + "' do not match its arity");
    return make_apply(head, std::move(args), std::move(deriv));
  }

  std::string_view s_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const ParseContext& ctx) { return Parser(text, ctx).run(); }

}  // namespace lieinv
