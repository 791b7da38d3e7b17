#include "lieinv/expr.hpp"

namespace lieinv {

namespace {

std::string render_node(const Expr& e);

std::string as_factor(const Expr& f) {
  std::string s = render_node(f);
  if (f.kind() == ExprKind::Add) return "(" + s + ")";
  return s;
}

bool base_needs_parens(const Expr& b) {
  switch (b.kind()) {
    case ExprKind::Add:
    case ExprKind::Mul:
    case ExprKind::Pow:
      return true;
    case ExprKind::Const:
      return b.value() < 0 || !is_integer(b.value());
    default:
      return false;
  }
}

std::string render_power(const Expr& base, const Rational& q) {
  if (q == 1) return as_factor(base);
  std::string b = render_node(base);
  if (base_needs_parens(base)) b = "(" + b + ")";
  if (is_integer(q) && q > 0) return b + "^" + to_string(q);
  return b + "^(" + to_string(q) + ")";
}

std::string render_product(const Rational& coeff, const std::vector<Expr>& factors) {
  std::vector<std::string> num, den;
  for (const auto& f : factors) {
    if (f.kind() == ExprKind::Pow && f.node().number < 0) {
      den.push_back(render_power(f.args()[0], -f.node().number));
    } else {
      num.push_back(render_power(f.kind() == ExprKind::Pow ? f.args()[0] : f,
                                 f.kind() == ExprKind::Pow ? f.node().number : Rational(1)));
    }
  }
  const bool negative = coeff < 0;
  const Integer p = abs(numerator(coeff));
  const Integer q = denominator(coeff);
  if (q != 1) den.insert(den.begin(), q.str());

  std::string out;
  if (p != 1 || num.empty()) out = p.str();
  for (const auto& s : num) {
    if (!out.empty()) out += "*";
    out += s;
  }
  if (den.size() == 1) {
    out += "/" + den.front();
  } else if (den.size() > 1) {
    out += "/(";
    for (std::size_t i = 0; i < den.size(); ++i) out += (i ? "*" : "") + den[i];
    out += ")";
  }
  return negative ? "-" + out : out;
}

std::string render_node(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Const:
      return to_string(e.value());
    case ExprKind::Sym:
      return e.symbol().name();
    case ExprKind::Func:
      return std::string(fn_name(e.node().fn)) + "(" + render_node(e.args()[0]) + ")";
    case ExprKind::Apply: {
      std::string s = e.node().head;
      bool any = false;
      for (int d : e.node().deriv) any = any || d != 0;
      if (any) {
        s += "__";
        for (int d : e.node().deriv) s += std::to_string(d);
      }
      s += "(";
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        if (i) s += ", ";
        s += render_node(e.args()[i]);
      }
      return s + ")";
    }
    case ExprKind::Pow:
      return render_product(1, {e});
    case ExprKind::Mul: {
      auto [c, rest] = split_coefficient(e);
      if (rest.kind() == ExprKind::Mul) return render_product(c, rest.args());
      return render_product(c, {rest});
    }
    case ExprKind::Add: {
      std::string out;
      bool first = true;
      for (const auto& t : e.args()) {
        auto [c, rest] = split_coefficient(t);
        if (first) {
          out = render_node(t);
          first = false;
        } else if (c < 0) {
          out += " - " + render_node(make_mul({Expr(Rational(-c)), rest}));
        } else {
          out += " + " + render_node(t);
        }
      }
      return out;
    }
  }
  return "?";
}

}  // namespace

std::string render(const Expr& e) { return render_node(e); }

}  // namespace lieinv
