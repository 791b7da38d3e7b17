#include "lieinv/expr.hpp"

#include "lieinv/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace lieinv {

namespace {

constexpr std::size_t kMix = 0x9e3779b97f4a7c15ULL;

std::size_t mix(std::size_t seed, std::size_t v) {
  seed ^= v + kMix + (seed << 6) + (seed >> 2);
  return seed;
}

std::size_t hash_rational(const Rational& q) {
  return std::hash<double>()(to_double(q)) ^ (is_integer(q) ? 0x51u : 0xa3u);
}

std::shared_ptr<Node> new_node(ExprKind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

Expr finish(std::shared_ptr<Node> n) {
  std::size_t h = mix(0x12345, static_cast<std::size_t>(n->kind));
  switch (n->kind) {
    case ExprKind::Const:
      h = mix(h, hash_rational(n->number));
      n->dvalue = to_double(n->number);
      break;
    case ExprKind::Sym:
      h = mix(h, std::hash<lieinv::Symbol>()(n->sym));
      break;
    case ExprKind::Func:
      h = mix(h, static_cast<std::size_t>(n->fn));
      break;
    case ExprKind::Apply:
      h = mix(h, std::hash<std::string>()(n->head));
      for (int d : n->deriv) h = mix(h, static_cast<std::size_t>(d));
      break;
    case ExprKind::Pow:
      h = mix(h, hash_rational(n->number));
      break;
    default:
      break;
  }
  for (const auto& a : n->args) h = mix(h, a.hash());
  n->hash = h;
  return Expr::from_node(std::move(n));
}

Expr raw_const(const Rational& q) {
  auto n = new_node(ExprKind::Const);
  n->number = q;
  return finish(std::move(n));
}

Expr raw(ExprKind kind, std::vector<Expr> args) {
  auto n = new_node(kind);
  n->args = std::move(args);
  return finish(std::move(n));
}

Expr raw_pow(const Expr& base, const Rational& q) {
  auto n = new_node(ExprKind::Pow);
  n->number = q;
  n->args = {base};
  return finish(std::move(n));
}

Expr raw_func(Fn fn, const Expr& arg) {
  auto n = new_node(ExprKind::Func);
  n->fn = fn;
  n->args = {arg};
  return finish(std::move(n));
}

const Expr& zero_expr() {
  static const Expr z = raw_const(0);
  return z;
}

Rational rational_pow(const Rational& v, const Integer& n) {
  Integer k = n < 0 ? Integer(-n) : n;
  Rational result = 1, base = v;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return n < 0 ? Rational(1 / result) : result;
}

int rank(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Const: return 0;
    case ExprKind::Sym:
      switch (e.symbol().kind()) {
        case SymbolKind::Coordinate: return 1;
        case SymbolKind::Parameter: return 2;
        case SymbolKind::Jet: return 3;
      }
      return 3;
    case ExprKind::Func: return 4;
    case ExprKind::Apply: return 5;
    case ExprKind::Pow: return 6;
    case ExprKind::Mul: return 7;
    case ExprKind::Add: return 8;
  }
  return 9;
}

int compare_lists_from_back(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  auto ia = a.rbegin(), ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (int c = compare(*ia, *ib); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool has_negative_sign(const Expr& e) {
  if (e.kind() == ExprKind::Const) return e.value() < 0;
  if (e.kind() == ExprKind::Mul) {
    const Expr& first = e.args().front();
    return first.kind() == ExprKind::Const && first.value() < 0;
  }
  return false;
}

}  // namespace

const char* fn_name(Fn f) {
  switch (f) {
    case Fn::Exp: return "exp";
    case Fn::Log: return "log";
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Tan: return "tan";
  }
  return "?";
}

Expr::Expr() : node_(zero_expr().node_) {}
Expr::Expr(int value) : Expr(Rational(value)) {}
Expr::Expr(const Rational& value) : node_(raw_const(value).node_) {}
Expr::Expr(Symbol s) {
  auto n = new_node(ExprKind::Sym);
  n->sym = s;
  node_ = finish(std::move(n)).node_;
}

ExprKind Expr::kind() const { return node_->kind; }
std::size_t Expr::hash() const { return node_->hash; }
bool Expr::is_zero_const() const { return is_const() && node_->number == 0; }
bool Expr::is_one_const() const { return is_const() && node_->number == 1; }
const Rational& Expr::value() const { return node_->number; }
Symbol Expr::symbol() const { return node_->sym; }
const std::vector<Expr>& Expr::args() const { return node_->args; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return 0;
  const bool pa = a.kind() == ExprKind::Pow;
  const bool pb = b.kind() == ExprKind::Pow;
  if (pa || pb) {
    const Expr& ba = pa ? a.args()[0] : a;
    const Expr& bb = pb ? b.args()[0] : b;
    if (int c = compare(ba, bb); c != 0) return c;
    const Rational ea = pa ? a.node().number : Rational(1);
    const Rational eb = pb ? b.node().number : Rational(1);
    if (ea == eb) return 0;
    return ea < eb ? -1 : 1;
  }
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case ExprKind::Const:
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    case ExprKind::Sym:
      return compare(a.symbol(), b.symbol());
    case ExprKind::Func:
      if (a.node().fn != b.node().fn) return a.node().fn < b.node().fn ? -1 : 1;
      return compare(a.args()[0], b.args()[0]);
    case ExprKind::Apply: {
      if (int c = a.node().head.compare(b.node().head); c != 0) return c < 0 ? -1 : 1;
      if (a.node().deriv != b.node().deriv) return a.node().deriv < b.node().deriv ? -1 : 1;
      if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = compare(a.args()[i], b.args()[i]); c != 0) return c;
      return 0;
    }
    case ExprKind::Mul:
    case ExprKind::Add:
      return compare_lists_from_back(a.args(), b.args());
    case ExprKind::Pow:
      break;
  }
  return 0;
}

std::pair<Rational, Expr> split_coefficient(const Expr& term) {
  if (term.kind() == ExprKind::Const) return {term.value(), Expr(1)};
  if (term.kind() == ExprKind::Mul && term.args().front().is_const()) {
    const auto& args = term.args();
    if (args.size() == 2) return {args[0].value(), args[1]};
    return {args[0].value(), raw(ExprKind::Mul, std::vector<Expr>(args.begin() + 1, args.end()))};
  }
  return {Rational(1), term};
}

namespace {

Expr scale_term(const Rational& c, const Expr& rest) {
  if (c == 1) return rest;
  if (rest.is_one_const()) return Expr(c);
  std::vector<Expr> args;
  args.push_back(Expr(c));
  if (rest.kind() == ExprKind::Mul) {
    args.insert(args.end(), rest.args().begin(), rest.args().end());
  } else {
    args.push_back(rest);
  }
  return raw(ExprKind::Mul, std::move(args));
}

void flatten_add(const Expr& t, Rational& constant, std::vector<std::pair<Expr, Rational>>& items) {
  switch (t.kind()) {
    case ExprKind::Add:
      for (const auto& a : t.args()) flatten_add(a, constant, items);
      return;
    case ExprKind::Const:
      constant += t.value();
      return;
    default: {
      auto [c, rest] = split_coefficient(t);
      items.emplace_back(std::move(rest), std::move(c));
    }
  }
}

}  // namespace

Expr make_add(std::vector<Expr> terms) {
  Rational constant = 0;
  std::vector<std::pair<Expr, Rational>> items;
  items.reserve(terms.size());
  for (const auto& t : terms) flatten_add(t, constant, items);
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& x, const auto& y) { return compare(x.first, y.first) < 0; });
  std::vector<Expr> out;
  if (constant != 0) out.push_back(Expr(constant));
  for (std::size_t i = 0; i < items.size();) {
    Rational c = items[i].second;
    std::size_t j = i + 1;
    while (j < items.size() && items[j].first == items[i].first) {
      c += items[j].second;
      ++j;
    }
    if (c != 0) out.push_back(scale_term(c, items[i].first));
    i = j;
  }
  if (out.empty()) return Expr(0);
  if (out.size() == 1) return out.front();
  return raw(ExprKind::Add, std::move(out));
}

namespace {

struct MulAccumulator {
  Rational coeff = 1;
  std::vector<std::pair<Expr, Rational>> items;
  std::vector<Expr> exp_args;

  void add(const Expr& f, const Rational& power) {
    switch (f.kind()) {
      case ExprKind::Const:
        if (power == 1) {
          coeff *= f.value();
        } else {
          items.emplace_back(f, power);
        }
        return;
      case ExprKind::Mul:
        for (const auto& a : f.args()) add(a, power);
        return;
      case ExprKind::Pow:
        if (power == 1 || is_integer(power)) {
          items.emplace_back(f.args()[0], f.node().number * power);
        } else {
          items.emplace_back(f, power);
        }
        return;
      case ExprKind::Func:
        if (f.node().fn == Fn::Exp) {
          exp_args.push_back(power == 1 ? f.args()[0] : make_mul({Expr(power), f.args()[0]}));
          return;
        }
        items.emplace_back(f, power);
        return;
      default:
        items.emplace_back(f, power);
    }
  }
};

}  // namespace

Expr make_mul(std::vector<Expr> factors) {
  MulAccumulator acc;
  for (const auto& f : factors) acc.add(f, 1);
  if (acc.coeff == 0) return Expr(0);
  std::stable_sort(acc.items.begin(), acc.items.end(),
                   [](const auto& x, const auto& y) { return compare(x.first, y.first) < 0; });

  std::vector<Expr> out;
  bool needs_reflatten = false;
  for (std::size_t i = 0; i < acc.items.size();) {
    Rational q = acc.items[i].second;
    std::size_t j = i + 1;
    while (j < acc.items.size() && acc.items[j].first == acc.items[i].first) {
      q += acc.items[j].second;
      ++j;
    }
    if (q != 0) {
      Expr f = make_pow(acc.items[i].first, q);
      const ExprKind k = f.kind();
      if (k == ExprKind::Const || k == ExprKind::Mul ||
          (k == ExprKind::Func && f.node().fn == Fn::Exp)) {
        needs_reflatten = true;
      }
      out.push_back(std::move(f));
    }
    i = j;
  }
  if (!acc.exp_args.empty()) {
    Expr e = make_func(Fn::Exp, make_add(acc.exp_args));
    if (!e.is_one_const()) out.push_back(std::move(e));
  }
  if (needs_reflatten) {
    out.push_back(Expr(acc.coeff));
    return make_mul(std::move(out));
  }
  std::stable_sort(out.begin(), out.end(), ExprLess());
  if (out.empty()) return Expr(acc.coeff);
  if (out.size() == 1) {
    if (acc.coeff == 1) return out.front();
    if (out.front().kind() == ExprKind::Add) {
      std::vector<Expr> terms;
      terms.reserve(out.front().args().size());
      for (const auto& t : out.front().args()) terms.push_back(make_mul({Expr(acc.coeff), t}));
      return make_add(std::move(terms));
    }
  }
  if (acc.coeff != 1) out.insert(out.begin(), Expr(acc.coeff));
  return raw(ExprKind::Mul, std::move(out));
}

Expr make_pow(const Expr& base, const Rational& q) {
  if (q == 0) return Expr(1);
  if (q == 1) return base;
  switch (base.kind()) {
    case ExprKind::Const: {
      const Rational& v = base.value();
      if (v == 1) return Expr(1);
      if (v == 0) return q > 0 ? Expr(0) : raw_pow(base, q);
      if (is_integer(q)) return Expr(rational_pow(v, numerator(q)));
      return raw_pow(base, q);
    }
    case ExprKind::Pow:
      if (is_integer(q)) return make_pow(base.args()[0], base.node().number * q);
      return raw_pow(base, q);
    case ExprKind::Mul:
      if (is_integer(q)) {
        std::vector<Expr> fs;
        fs.reserve(base.args().size());
        for (const auto& f : base.args()) fs.push_back(make_pow(f, q));
        return make_mul(std::move(fs));
      }
      return raw_pow(base, q);
    case ExprKind::Func:
      if (base.node().fn == Fn::Exp) return make_func(Fn::Exp, make_mul({Expr(q), base.args()[0]}));
      return raw_pow(base, q);
    default:
      return raw_pow(base, q);
  }
}

Expr make_func(Fn fn, const Expr& arg) {
  switch (fn) {
    case Fn::Exp:
      if (arg.is_zero_const()) return Expr(1);
      break;
    case Fn::Log:
      if (arg.is_one_const()) return Expr(0);
      if (arg.kind() == ExprKind::Func && arg.node().fn == Fn::Exp) return arg.args()[0];
      break;
    case Fn::Sin:
    case Fn::Tan:
      if (arg.is_zero_const()) return Expr(0);
      if (has_negative_sign(arg)) return make_mul({Expr(-1), raw_func(fn, make_mul({Expr(-1), arg}))});
      break;
    case Fn::Cos:
      if (arg.is_zero_const()) return Expr(1);
      if (has_negative_sign(arg)) return raw_func(fn, make_mul({Expr(-1), arg}));
      break;
  }
  return raw_func(fn, arg);
}

Expr make_apply(const std::string& head, std::vector<Expr> args, std::vector<int> deriv) {
  auto n = new_node(ExprKind::Apply);
  n->head = head;
  if (deriv.empty()) deriv.assign(args.size(), 0);
  if (deriv.size() != args.size()) throw Error("expr", "derivative index size mismatch for " + head);
  n->deriv = std::move(deriv);
  n->args = std::move(args);
  return finish(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return make_add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return make_add({a, make_mul({Expr(-1), b})}); }
Expr operator-(const Expr& a) { return make_mul({Expr(-1), a}); }
Expr operator*(const Expr& a, const Expr& b) { return make_mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return make_mul({a, make_pow(b, -1)}); }
Expr pow(const Expr& base, const Rational& exponent) { return make_pow(base, exponent); }
Expr exp(const Expr& a) { return make_func(Fn::Exp, a); }
Expr log(const Expr& a) { return make_func(Fn::Log, a); }
Expr sin(const Expr& a) { return make_func(Fn::Sin, a); }
Expr cos(const Expr& a) { return make_func(Fn::Cos, a); }
Expr tan(const Expr& a) { return make_func(Fn::Tan, a); }

Expr simplify_basic(const Expr& e) {
  std::unordered_map<const Node*, Expr> memo;
  std::function<Expr(const Expr&)> go = [&](const Expr& x) -> Expr {
    if (auto it = memo.find(x.get()); it != memo.end()) return it->second;
    Expr r;
    switch (x.kind()) {
      case ExprKind::Const:
      case ExprKind::Sym:
        r = x;
        break;
      case ExprKind::Func:
        r = make_func(x.node().fn, go(x.args()[0]));
        break;
      case ExprKind::Apply: {
        std::vector<Expr> args;
        for (const auto& a : x.args()) args.push_back(go(a));
        r = make_apply(x.node().head, std::move(args), x.node().deriv);
        break;
      }
      case ExprKind::Pow:
        r = make_pow(go(x.args()[0]), x.node().number);
        break;
      case ExprKind::Mul:
      case ExprKind::Add: {
        std::vector<Expr> args;
        for (const auto& a : x.args()) args.push_back(go(a));
        r = x.kind() == ExprKind::Mul ? make_mul(std::move(args)) : make_add(std::move(args));
        break;
      }
    }
    memo.emplace(x.get(), r);
    return r;
  };
  return go(e);
}

}  // namespace lieinv
