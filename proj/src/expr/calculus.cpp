#include "lieinv/error.hpp"
#include "lieinv/expr.hpp"

#include <unordered_set>

namespace lieinv {

namespace {

using Memo = std::unordered_map<const Node*, Expr>;

template <class F>
void visit(const Expr& e, std::unordered_set<const Node*>& seen, F&& f) {
  if (!seen.insert(e.get()).second) return;
  f(e);
  for (const auto& a : e.args()) visit(a, seen, f);
}

Expr rebuild(const Expr& e, std::vector<Expr> args) {
  switch (e.kind()) {
    case ExprKind::Func: return make_func(e.node().fn, args[0]);
    case ExprKind::Apply: return make_apply(e.node().head, std::move(args), e.node().deriv);
    case ExprKind::Pow: return make_pow(args[0], e.node().number);
    case ExprKind::Mul: return make_mul(std::move(args));
    case ExprKind::Add: return make_add(std::move(args));
    default: return e;
  }
}

Expr subst_rec(const Expr& e, const Bindings& b, Memo& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  Expr r;
  if (e.kind() == ExprKind::Sym) {
    auto it = b.find(e.symbol());
    r = it == b.end() ? e : it->second;
  } else if (e.kind() == ExprKind::Const) {
    r = e;
  } else {
    std::vector<Expr> args;
    args.reserve(e.args().size());
    bool changed = false;
    for (const auto& a : e.args()) {
      args.push_back(subst_rec(a, b, memo));
      changed = changed || args.back().get() != a.get();
    }
    r = changed ? rebuild(e, std::move(args)) : e;
  }
  memo.emplace(e.get(), r);
  return r;
}

Expr diff_rec(const Expr& e, Symbol s, Memo& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  Expr r;
  switch (e.kind()) {
    case ExprKind::Const:
      r = Expr(0);
      break;
    case ExprKind::Sym:
      r = Expr(e.symbol() == s ? 1 : 0);
      break;
    case ExprKind::Add: {
      std::vector<Expr> terms;
      for (const auto& t : e.args()) terms.push_back(diff_rec(t, s, memo));
      r = make_add(std::move(terms));
      break;
    }
    case ExprKind::Mul: {
      const auto& fs = e.args();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        Expr d = diff_rec(fs[i], s, memo);
        if (d.is_zero_const()) continue;
        std::vector<Expr> prod{d};
        for (std::size_t j = 0; j < fs.size(); ++j)
          if (j != i) prod.push_back(fs[j]);
        terms.push_back(make_mul(std::move(prod)));
      }
      r = make_add(std::move(terms));
      break;
    }
    case ExprKind::Pow: {
      const Expr& b = e.args()[0];
      const Rational& q = e.node().number;
      Expr d = diff_rec(b, s, memo);
      r = d.is_zero_const() ? Expr(0) : make_mul({Expr(q), make_pow(b, q - 1), d});
      break;
    }
    case ExprKind::Func: {
      const Expr& a = e.args()[0];
      Expr d = diff_rec(a, s, memo);
      if (d.is_zero_const()) {
        r = Expr(0);
        break;
      }
      Expr outer;
      switch (e.node().fn) {
        case Fn::Exp: outer = e; break;
        case Fn::Log: outer = make_pow(a, -1); break;
        case Fn::Sin: outer = cos(a); break;
        case Fn::Cos: outer = -sin(a); break;
        case Fn::Tan: outer = Expr(1) + make_pow(e, 2); break;
      }
      r = outer * d;
      break;
    }
    case ExprKind::Apply: {
      std::vector<Expr> terms;
      const auto& args = e.args();
      for (std::size_t k = 0; k < args.size(); ++k) {
        Expr d = diff_rec(args[k], s, memo);
        if (d.is_zero_const()) continue;
        std::vector<int> deriv = e.node().deriv;
        ++deriv[k];
        terms.push_back(make_apply(e.node().head, args, std::move(deriv)) * d);
      }
      r = make_add(std::move(terms));
      break;
    }
  }
  memo.emplace(e.get(), r);
  return r;
}

Expr heads_rec(const Expr& e, const std::map<std::string, HeadBuilder>& heads, Memo& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  Expr r = e;
  if (e.kind() != ExprKind::Const && e.kind() != ExprKind::Sym) {
    std::vector<Expr> args;
    for (const auto& a : e.args()) args.push_back(heads_rec(a, heads, memo));
    auto it = e.kind() == ExprKind::Apply ? heads.find(e.node().head) : heads.end();
    if (it == heads.end()) {
      r = rebuild(e, std::move(args));
    } else {
      const auto& deriv = e.node().deriv;
      bool plain = true;
      for (int d : deriv) plain = plain && d == 0;
      if (plain) {
        r = it->second(args);
      } else {
        // Formal derivative: build on placeholder arguments, differentiate,
        // then substitute the actual arguments.
        std::vector<Expr> slots;
        Bindings back;
        for (std::size_t k = 0; k < args.size(); ++k) {
          Symbol p = Symbol::parameter("__slot" + std::to_string(k));
          slots.emplace_back(p);
          back.emplace(p, args[k]);
        }
        Expr body = it->second(slots);
        for (std::size_t k = 0; k < deriv.size(); ++k)
          for (int c = 0; c < deriv[k]; ++c) body = diff(body, slots[k].symbol());
        r = substitute(body, back);
      }
    }
  }
  memo.emplace(e.get(), r);
  return r;
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  Memo memo;
  return subst_rec(e, bindings, memo);
}

Expr diff(const Expr& e, Symbol s) {
  Memo memo;
  return diff_rec(e, s, memo);
}

bool depends_on(const Expr& e, Symbol s) {
  std::unordered_set<const Node*> seen;
  bool found = false;
  visit(e, seen, [&](const Expr& x) {
    if (x.kind() == ExprKind::Sym && x.symbol() == s) found = true;
  });
  return found;
}

std::set<Symbol, SymbolLess> free_symbols(const Expr& e) {
  std::set<Symbol, SymbolLess> out;
  std::unordered_set<const Node*> seen;
  visit(e, seen, [&](const Expr& x) {
    if (x.kind() == ExprKind::Sym) out.insert(x.symbol());
  });
  return out;
}

std::set<Symbol, SymbolLess> free_symbols(std::span<const Expr> es) {
  std::set<Symbol, SymbolLess> out;
  std::unordered_set<const Node*> seen;
  for (const auto& e : es) {
    visit(e, seen, [&](const Expr& x) {
      if (x.kind() == ExprKind::Sym) out.insert(x.symbol());
    });
  }
  return out;
}

std::set<Symbol, SymbolLess> denominator_symbols(const Expr& e) {
  std::set<Symbol, SymbolLess> out;
  std::unordered_set<const Node*> seen;
  visit(e, seen, [&](const Expr& x) {
    if (x.kind() == ExprKind::Pow && x.node().number < 0) {
      auto inner = free_symbols(x.args()[0]);
      out.insert(inner.begin(), inner.end());
    }
  });
  return out;
}

Expr replace_heads(const Expr& e, const std::map<std::string, HeadBuilder>& heads) {
  Memo memo;
  return heads_rec(e, heads, memo);
}

std::set<std::string> head_names(const Expr& e) {
  std::set<std::string> out;
  std::unordered_set<const Node*> seen;
  visit(e, seen, [&](const Expr& x) {
    if (x.kind() == ExprKind::Apply) out.insert(x.node().head);
  });
  return out;
}

}  // namespace lieinv
