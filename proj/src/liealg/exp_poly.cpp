// Closed-form matrix exponential by Putzer's algorithm over Q(i).
#include "lieinv/error.hpp"
#include "lieinv/liealg.hpp"

#include <algorithm>

namespace lieinv {

namespace {

struct QI {
  Rational re, im;
  bool zero() const { return re == 0 && im == 0; }
  friend QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
  friend QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
  friend QI operator*(const QI& a, const QI& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QI operator/(const QI& a, const QI& b) {
    const Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator<(const QI& a, const QI& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  }
  friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
};

// Sum of c * t^j * exp(mu t), keyed by (mu, j).
using ExpPoly = std::map<std::pair<QI, int>, QI>;

void accumulate(ExpPoly& p, const QI& mu, int j, const QI& c) {
  if (c.zero()) return;
  auto& slot = p[{mu, j}];
  slot = slot + c;
  if (slot.zero()) p.erase({mu, j});
}

// e^{lambda t} * integral_0^t e^{-lambda s} r(s) ds
ExpPoly putzer_step(const ExpPoly& r, const QI& lambda) {
  ExpPoly out;
  for (const auto& [key, c] : r) {
    const auto& [mu, j] = key;
    const QI nu = mu - lambda;
    if (nu.zero()) {
      accumulate(out, lambda, j + 1, c / QI{Rational(j + 1), 0});
      continue;
    }
    // integral_0^t s^j e^{nu s} ds = F(t) - F(0),
    // F(s) = e^{nu s} sum_i (-1)^i j!/(j-i)! s^{j-i} / nu^{i+1}.
    QI nu_pow = nu;
    Rational falling = 1;
    for (int i = 0; i <= j; ++i) {
      const QI coef = c * QI{(i % 2 == 0 ? falling : Rational(-falling)), 0} / nu_pow;
      accumulate(out, mu, j - i, coef);
      if (i == j) accumulate(out, lambda, 0, QI{0, 0} - coef);
      falling *= (j - i);
      nu_pow = nu_pow * nu;
    }
  }
  return out;
}

using QMat = std::vector<std::vector<QI>>;

QMat identity(std::size_t n) {
  QMat m(n, std::vector<QI>(n, QI{0, 0}));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = QI{1, 0};
  return m;
}

QMat multiply(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat r(n, std::vector<QI>(n, QI{0, 0}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!a[i][k].zero())
        for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

// Characteristic polynomial det(lambda I - M), coefficients low to high,
// by Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));  // M_k
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} I, with M_0 = 0
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    mk = next;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += m[i][l] * mk[l][i];
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& x) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// Divides p by (x - root); p must vanish at root.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& root) {
  const std::size_t d = p.size() - 1;
  std::vector<Rational> q(d);
  Rational carry = 0;
  for (std::size_t i = d; i >= 1; --i) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

std::vector<QI> eigenvalues(const std::vector<std::vector<Rational>>& m) {
  std::vector<Rational> p = characteristic_polynomial(m);
  std::vector<QI> roots;
  while (p.size() > 1 && p[0] == 0) {
    roots.push_back(QI{0, 0});
    p.erase(p.begin());
  }
  for (bool found = true; found && p.size() > 3;) {
    found = false;
    Integer lcd = 1;
    for (const auto& c : p) lcd = boost::multiprecision::lcm(lcd, denominator(c));
    const Integer a0 = numerator(Rational(p.front() * lcd));
    const Integer an = numerator(Rational(p.back() * lcd));
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int sign : {1, -1}) {
          const Rational cand = Rational(Integer(num * sign), den);
          if (!found && evaluate(p, cand) == 0) {
            roots.push_back(QI{cand, 0});
            p = deflate(p, cand);
            found = true;
          }
        }
      }
    }
  }
  if (p.size() == 2) {
    roots.push_back(QI{-p[0] / p[1], 0});
  } else if (p.size() == 3) {
    const Rational a = -p[1] / (2 * p[2]);
    const Rational disc = a * a - p[0] / p[2];
    Rational s;
    if (disc >= 0) {
      if (!exact_sqrt(disc, s))
        throw EigenvalueUnsupported("irrational real eigenvalues");
      roots.push_back(QI{a + s, 0});
      roots.push_back(QI{a - s, 0});
    } else {
      if (!exact_sqrt(-disc, s))
        throw EigenvalueUnsupported("complex eigenvalues with irrational imaginary part");
      roots.push_back(QI{a, s});
      roots.push_back(QI{a, -s});
    }
  } else if (p.size() > 3) {
    throw EigenvalueUnsupported("characteristic polynomial has an irreducible factor of degree > 2");
  }
  std::stable_sort(roots.begin(), roots.end());
  return roots;
}

Expr real_part(const ExpPoly& p, const Expr& t) {
  std::vector<Expr> terms;
  for (const auto& [key, c] : p) {
    const auto& [mu, j] = key;
    Expr scale = make_mul({make_pow(t, j), exp(Expr(mu.re) * t)});
    if (mu.im == 0) {
      terms.push_back(Expr(c.re) * scale);
    } else {
      const Expr arg = Expr(mu.im) * t;
      terms.push_back(scale * (Expr(c.re) * cos(arg) - Expr(c.im) * sin(arg)));
    }
  }
  return expand(make_add(std::move(terms)));
}

}  // namespace

std::vector<std::complex<double>> supported_eigenvalues(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::complex<double>> out;
  for (const auto& r : eigenvalues(m)) out.emplace_back(to_double(r.re), to_double(r.im));
  return out;
}

std::vector<std::vector<Expr>> exp_matrix(const std::vector<std::vector<Rational>>& m, const Expr& t) {
  const std::size_t n = m.size();
  const auto lambdas = eigenvalues(m);
  QMat mq(n, std::vector<QI>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mq[i][j] = QI{m[i][j], 0};

  std::vector<std::vector<ExpPoly>> acc(n, std::vector<ExpPoly>(n));
  QMat p = identity(n);
  ExpPoly r;
  accumulate(r, lambdas[0], 0, QI{1, 0});
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) r = putzer_step(r, lambdas[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!p[i][j].zero())
          for (const auto& [key, c] : r) accumulate(acc[i][j], key.first, key.second, c * p[i][j]);
    if (k + 1 < n) {
      QMat shifted = mq;
      for (std::size_t i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] - lambdas[k];
      p = multiply(p, shifted);
    }
  }
  std::vector<std::vector<Expr>> out(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = real_part(acc[i][j], t);
  return out;
}

}  // namespace lieinv
