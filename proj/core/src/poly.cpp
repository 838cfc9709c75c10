#include "tenspec/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenspec {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t(unsigned power) {
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = Rational(1);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Rational& Poly::leading() const {
  if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::scale(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

Rational Poly::operator()(const Rational& alpha) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * alpha + c_[i];
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  Poly rem = *this;
  if (rem.degree() < d.degree()) return {Poly(), rem};
  std::vector<Rational> q(rem.degree() - d.degree() + 1, Rational(0));
  const Rational lead_inv = d.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const size_t shift = rem.degree() - d.degree();
    const Rational f = rem.leading() * lead_inv;
    q[shift] = f;
    for (size_t i = 0; i < d.c_.size(); ++i) rem.c_[shift + i] -= f * d.c_[i];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::divexact(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("Poly: divexact with nonzero remainder");
  return q;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(c));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = (a == Rational(1));
    if (i == 0) {
      out += a.str();
    } else {
      if (!unit) out += a.str();
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> Poly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  if (out.empty()) out.push_back("0");
  return out;
}

Rational poly_eval(const Poly& p, const Rational& alpha) { return p(alpha); }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) x = x.scale(x.leading().inverse());
  return x;
}

Poly poly_matrix_det_cofactor(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_matrix_det: non-square matrix");
  if (n == 0) return Poly(Rational(1));
  if (n == 1) return m[0][0];
  Poly det;
  std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Poly term = m[0][j] * poly_matrix_det_cofactor(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

Poly poly_matrix_det_bareiss(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_matrix_det: non-square matrix");
  if (n == 0) return Poly(Rational(1));
  auto a = m;
  Poly prev(Rational(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Poly();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev);
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

// Integer Bareiss determinant; exact divisions stay in Z.
BigInt integer_det(std::vector<std::vector<BigInt>> a) {
  const size_t n = a.size();
  if (n == 0) return BigInt(1);
  BigInt prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return BigInt(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? BigInt(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

// Rational determinant, used pointwise by the interpolation route: rows are
// cleared to integers and the accumulated scaling divided back out.
Rational rational_det(const std::vector<std::vector<Rational>>& a) {
  const size_t n = a.size();
  if (n == 0) return Rational(1);
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  BigInt scale(1);
  for (size_t i = 0; i < n; ++i) {
    BigInt l(1);
    for (const auto& e : a[i]) l = lcm(l, BigInt(e.den()));
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j].num() * (l / a[i][j].den());
    scale *= l;
  }
  return Rational(integer_det(std::move(m)), scale);
}

Poly interpolate_newton(const std::vector<Rational>& xs, std::vector<Rational> vals) {
  const size_t n = xs.size();
  // divided differences in place
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n; i-- > level;)
      vals[i] = (vals[i] - vals[i - 1]) / (xs[i] - xs[i - level]);
  Poly p(vals[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    p = p * (Poly::t() - Poly(xs[i])) + Poly(vals[i]);
  }
  return p;
}

}  // namespace

Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_matrix_det: non-square matrix");
  if (n <= 6) return poly_matrix_det_bareiss(m);
  // degree bound: sum over rows of the max entry degree
  long bound = 0;
  for (const auto& row : m) {
    int d = 0;
    for (const auto& e : row) d = std::max(d, std::max(0, e.degree()));
    bound += d;
  }
  std::vector<Rational> xs, vals;
  xs.reserve(bound + 1);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (long x = 0; x <= bound; ++x) {
    const Rational alpha(x);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j](alpha);
    xs.push_back(alpha);
    vals.push_back(rational_det(a));
  }
  return interpolate_newton(xs, std::move(vals));
}

size_t poly_matrix_rank(std::vector<std::vector<Poly>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      const Poly a = m[rank][col], b = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] * a - m[rank][j] * b;
      // keep entries small: strip the rational content of the row
      BigInt gnum(0), lden(1);
      for (size_t j = col; j < cols; ++j)
        for (const auto& c : m[i][j].coeffs())
          if (!c.is_zero()) {
            gnum = gcd(gnum, c.num());
            lden = lcm(lden, c.den());
          }
      if (gnum != 0) {
        const Rational content(gnum, lden);
        if (content != Rational(1)) {
          const Rational inv = content.inverse();
          for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j].scale(inv);
        }
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// primitive integer form: multiply by the lcm of denominators, divide by the
// gcd of numerators, make the leading coefficient positive
std::vector<BigInt> primitive_int_coeffs(const Poly& p) {
  BigInt l(1);
  for (const auto& c : p.coeffs()) {
    BigInt d = c.den();
    l = lcm(l, d);
  }
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  BigInt g(0);
  for (const auto& c : p.coeffs()) {
    BigInt v = c.num() * (l / c.den());
    g = gcd(g, v);
    out.push_back(v);
  }
  if (g != 0 && g != 1)
    for (auto& v : out) v /= g;
  if (!out.empty() && out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

// Cauchy bound: every root r satisfies |r| <= 1 + max |a_i| / |a_n|.
BigInt root_bound(const std::vector<BigInt>& c) {
  BigInt lead = abs(c.back());
  BigInt mx(0);
  for (size_t i = 0; i + 1 < c.size(); ++i) mx = std::max(mx, BigInt(abs(c[i])));
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

void divisors_up_to(const BigInt& n, const BigInt& bound, std::set<BigInt>& out) {
  // factor by trial division; a residual cofactor beyond the trial range is
  // kept as a single factor (it only matters if it is itself <= bound)
  std::vector<std::pair<BigInt, unsigned>> factors;
  BigInt r = n;
  auto take = [&](const BigInt& p) {
    unsigned e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  };
  take(BigInt(2));
  for (BigInt d(3); d <= 1000000 && d * d <= r; d += 2) take(d);
  if (r > 1) factors.emplace_back(r, 1);
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factors) {
    std::vector<BigInt> next;
    for (const auto& d : divs) {
      BigInt v = d;
      for (unsigned i = 0; i <= e; ++i) {
        if (v <= bound) next.push_back(v);
        if (i < e) v *= p;
      }
    }
    divs = std::move(next);
  }
  for (const auto& d : divs) out.insert(d);
}

}  // namespace

IntegerRoots integer_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
  IntegerRoots result;
  Poly work = p;
  // root 0 = trailing zero coefficients
  size_t zmult = 0;
  while (!work.is_zero() && work.coeff(0).is_zero()) {
    work = work.divexact(Poly::t());
    ++zmult;
  }
  if (zmult) result.roots.insert(BigInt(0));
  if (work.is_constant()) {
    result.all_integer = true;
    return result;
  }
  // candidates: divisors of the trailing coefficient of the squarefree part
  Poly sqfree = work.divexact(gcd(work, work.derivative()));
  auto sq = primitive_int_coeffs(sqfree);
  const BigInt bound = root_bound(sq);
  std::set<BigInt> cands;
  divisors_up_to(abs(sq.front()), bound, cands);
  for (const auto& c : cands) {
    for (const BigInt r : {c, BigInt(-c)}) {
      const Rational rr(r);
      if (!work(rr).is_zero()) continue;
      result.roots.insert(r);
      const Poly lin = Poly::t() - Poly(rr);
      while (work(rr).is_zero() && !work.is_constant()) work = work.divexact(lin);
    }
  }
  result.all_integer = work.is_constant();
  return result;
}

}  // namespace tenspec
