#include "lieinv/expr.hpp"

namespace lieinv {

namespace {

using Memo = std::unordered_map<const Node*, Expr>;

std::vector<Expr> terms_of(const Expr& e) {
  if (e.kind() == ExprKind::Add) return e.args();
  return {e};
}

Expr distribute(const std::vector<Expr>& factors) {
  std::vector<Expr> acc{Expr(1)};
  for (const auto& f : factors) {
    const auto fs = terms_of(f);
    std::vector<Expr> next;
    next.reserve(acc.size() * fs.size());
    for (const auto& a : acc)
      for (const auto& b : fs) next.push_back(a * b);
    acc = std::move(next);
  }
  return make_add(std::move(acc));
}

Expr expand_rec(const Expr& e, Memo& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  Expr r = e;
  switch (e.kind()) {
    case ExprKind::Const:
    case ExprKind::Sym:
      break;
    case ExprKind::Func:
      r = make_func(e.node().fn, expand_rec(e.args()[0], memo));
      break;
    case ExprKind::Apply: {
      std::vector<Expr> args;
      for (const auto& a : e.args()) args.push_back(expand_rec(a, memo));
      r = make_apply(e.node().head, std::move(args), e.node().deriv);
      break;
    }
    case ExprKind::Add: {
      std::vector<Expr> ts;
      for (const auto& a : e.args()) ts.push_back(expand_rec(a, memo));
      r = make_add(std::move(ts));
      break;
    }
    case ExprKind::Mul: {
      std::vector<Expr> fs;
      for (const auto& a : e.args()) fs.push_back(expand_rec(a, memo));
      r = distribute(fs);
      break;
    }
    case ExprKind::Pow: {
      Expr b = expand_rec(e.args()[0], memo);
      const Rational& q = e.node().number;
      if (b.kind() == ExprKind::Add && is_integer(q) && q > 0) {
        const long k = numerator(q).convert_to<long>();
        r = distribute(std::vector<Expr>(static_cast<std::size_t>(k), b));
      } else {
        r = make_pow(b, q);
      }
      break;
    }
  }
  memo.emplace(e.get(), r);
  return r;
}

Expr tan_to_sincos(const Expr& e, Memo& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  Expr r = e;
  if (e.kind() != ExprKind::Const && e.kind() != ExprKind::Sym) {
    std::vector<Expr> args;
    for (const auto& a : e.args()) args.push_back(tan_to_sincos(a, memo));
    if (e.kind() == ExprKind::Func && e.node().fn == Fn::Tan) {
      r = sin(args[0]) / cos(args[0]);
    } else {
      switch (e.kind()) {
        case ExprKind::Func: r = make_func(e.node().fn, args[0]); break;
        case ExprKind::Apply: r = make_apply(e.node().head, std::move(args), e.node().deriv); break;
        case ExprKind::Pow: r = make_pow(args[0], e.node().number); break;
        case ExprKind::Mul: r = make_mul(std::move(args)); break;
        case ExprKind::Add: r = make_add(std::move(args)); break;
        default: break;
      }
    }
  }
  memo.emplace(e.get(), r);
  return r;
}

// One pass of sin(a)^k -> sin(a)^(k-2) * (1 - cos(a)^2) for k >= 2.
Expr reduce_sin_powers(const Expr& e, bool& changed, Memo& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  Expr r = e;
  if (e.kind() == ExprKind::Pow && e.args()[0].kind() == ExprKind::Func &&
      e.args()[0].node().fn == Fn::Sin && is_integer(e.node().number) && e.node().number >= 2) {
    const Expr& s = e.args()[0];
    r = make_pow(s, e.node().number - 2) * (Expr(1) - make_pow(cos(s.args()[0]), 2));
    changed = true;
  } else if (e.kind() == ExprKind::Mul || e.kind() == ExprKind::Add) {
    std::vector<Expr> args;
    for (const auto& a : e.args()) args.push_back(reduce_sin_powers(a, changed, memo));
    r = e.kind() == ExprKind::Mul ? make_mul(std::move(args)) : make_add(std::move(args));
  }
  memo.emplace(e.get(), r);
  return r;
}

}  // namespace

Expr expand(const Expr& e) {
  Memo memo;
  return expand_rec(e, memo);
}

Expr trig_normal_form(const Expr& e) {
  Memo tan_memo;
  Expr r = expand(tan_to_sincos(e, tan_memo));
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    Memo memo;
    Expr next = reduce_sin_powers(r, changed, memo);
    if (!changed) break;
    r = expand(next);
  }
  return r;
}

}  // namespace lieinv
