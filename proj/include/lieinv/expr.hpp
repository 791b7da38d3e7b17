#pragma once

#include "lieinv/rational.hpp"
#include "lieinv/symbol.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lieinv {

enum class ExprKind : std::uint8_t { Const, Sym, Func, Apply, Pow, Mul, Add };
enum class Fn : std::uint8_t { Exp, Log, Sin, Cos, Tan };

const char* fn_name(Fn f);

class Expr;
struct Node;

/// Immutable symbolic expression. Every constructor canonicalizes, so two
/// expressions that differ only by operand order, flattening, constant folding
/// or like-term collection compare equal.
///
/// Canonical conventions:
///  - sums and products are flattened; numeric coefficients lead;
///  - a numeric factor multiplying a single sum is distributed over it;
///  - equal bases in a product are merged by adding rational exponents, so
///    x/x is 1;
///  - all exponential factors of a product merge into one: exp(u)*exp(u) is
///    exp(2*u), and exp(a)^q is exp(q*a);
///  - sin/tan are odd and cos is even in an argument with negative leading
///    coefficient.
class Expr {
 public:
  Expr();  // the constant 0
  Expr(int value);
  Expr(const Rational& value);
  Expr(Symbol s);

  ExprKind kind() const;
  const Node& node() const { return *node_; }
  const Node* get() const { return node_.get(); }
  std::size_t hash() const;

  bool is_const() const { return kind() == ExprKind::Const; }
  bool is_zero_const() const;
  bool is_one_const() const;
  const Rational& value() const;  // Const only
  Symbol symbol() const;          // Sym only
  const std::vector<Expr>& args() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  static Expr from_node(std::shared_ptr<const Node> n) { return Expr(std::move(n)); }

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  ExprKind kind;
  Fn fn = Fn::Exp;
  Rational number;  // Const value, or the exponent of a Pow
  Symbol sym;
  std::string head;        // Apply: name of the opaque function
  std::vector<int> deriv;  // Apply: partial-derivative count per argument
  std::vector<Expr> args;
  std::size_t hash = 0;
  double dvalue = 0.0;  // Const as double
};

// Construction (all canonicalizing).
Expr make_add(std::vector<Expr> terms);
Expr make_mul(std::vector<Expr> factors);
Expr make_pow(const Expr& base, const Rational& exponent);
Expr make_func(Fn fn, const Expr& arg);
Expr make_apply(const std::string& head, std::vector<Expr> args, std::vector<int> deriv = {});

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr pow(const Expr& base, const Rational& exponent);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr tan(const Expr& a);

/// Total order on canonical trees used for operand sorting.
int compare(const Expr& a, const Expr& b);

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

/// Splits a canonical term into numeric coefficient and the remaining product.
std::pair<Rational, Expr> split_coefficient(const Expr& term);

/// Rebuilds the tree through the canonicalizing constructors. Idempotent.
Expr simplify_basic(const Expr& e);

// Rendering in the input grammar with minimal parentheses. Negative powers
// are written as division; formal derivatives of an opaque head F print as
// F__<counts>(...), e.g. F__01(a, b) for the partial in the second slot.
std::string render(const Expr& e);

// Calculus and substitution.
using Bindings = std::unordered_map<Symbol, Expr>;
Expr substitute(const Expr& e, const Bindings& bindings);
Expr diff(const Expr& e, Symbol s);
bool depends_on(const Expr& e, Symbol s);
std::set<Symbol, SymbolLess> free_symbols(const Expr& e);
std::set<Symbol, SymbolLess> free_symbols(std::span<const Expr> es);

/// Symbols occurring inside the base of a negative power.
std::set<Symbol, SymbolLess> denominator_symbols(const Expr& e);

/// Replaces every application of an opaque head by an expression built from
/// its arguments. `heads` maps head name to a builder.
using HeadBuilder = std::function<Expr(std::span<const Expr>)>;
Expr replace_heads(const Expr& e, const std::map<std::string, HeadBuilder>& heads);
std::set<std::string> head_names(const Expr& e);

/// Polynomial-style normal form: distributes products over sums, expands
/// positive integer powers of sums, rewrites tan as sin/cos and reduces
/// sin(a)^k, k >= 2, using sin^2 = 1 - cos^2. Used where structural
/// comparison of trigonometric closed forms is required.
Expr expand(const Expr& e);
Expr trig_normal_form(const Expr& e);

}  // namespace lieinv

template <>
struct std::hash<lieinv::Expr> {
  std::size_t operator()(const lieinv::Expr& e) const noexcept { return e.hash(); }
};
