#include "primdiv/zpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace primdiv {
namespace poly {

int degree(const ZPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

int degree(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void trim(ZPoly& p) { p.resize(degree(p) + 1); }
void trim(QPoly& p) { p.resize(degree(p) + 1); }

template <typename P>
static P add_impl(const P& a, const P& b) {
  P r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

template <typename P>
static P sub_impl(const P& a, const P& b) {
  P r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

template <typename P>
static P mul_impl(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly add(const ZPoly& a, const ZPoly& b) { return add_impl(a, b); }
ZPoly sub(const ZPoly& a, const ZPoly& b) { return sub_impl(a, b); }
ZPoly mul(const ZPoly& a, const ZPoly& b) { return mul_impl(a, b); }
QPoly add(const QPoly& a, const QPoly& b) { return add_impl(a, b); }
QPoly sub(const QPoly& a, const QPoly& b) { return sub_impl(a, b); }
QPoly mul(const QPoly& a, const QPoly& b) { return mul_impl(a, b); }

QPoly scale(const QPoly& a, const mpq_class& c) {
  QPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  int db = degree(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  ZPoly rem = a;
  trim(rem);
  int da = degree(rem);
  if (da < db) {
    if (da < 0) return {};
    throw std::invalid_argument("inexact polynomial division");
  }
  ZPoly q(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    mpz_class c = rem[i] / b[db];
    if (c * b[db] != rem[i]) throw std::invalid_argument("inexact polynomial division");
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  if (degree(rem) >= 0) throw std::invalid_argument("inexact polynomial division");
  trim(q);
  return q;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  int db = degree(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  QPoly rem = a;
  trim(rem);
  int da = degree(rem);
  if (da < db) return {{}, rem};
  QPoly q(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    mpq_class c = rem[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  trim(q);
  trim(rem);
  return {q, rem};
}

QPoly mod(const QPoly& a, const QPoly& m) { return divmod(a, m).second; }

std::tuple<QPoly, QPoly, QPoly> ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  QPoly s0 = {mpq_class(1)}, s1 = {};
  QPoly t0 = {}, t1 = {mpq_class(1)};
  while (degree(r1) >= 0) {
    auto [q, r2] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  int d = degree(r0);
  if (d >= 0 && r0[d] != 1) {
    mpq_class inv = 1 / r0[d];
    r0 = scale(r0, inv);
    s0 = scale(s0, inv);
    t0 = scale(t0, inv);
  }
  return {r0, s0, t0};
}

QPoly inv_mod(const QPoly& a, const QPoly& m) {
  auto [g, u, v] = ext_gcd(a, m);
  (void)v;
  if (degree(g) != 0) throw std::domain_error("element not invertible modulo minimal polynomial");
  return mod(u, m);
}

QPoly to_q(const ZPoly& p) {
  QPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i];
  return r;
}

std::pair<ZPoly, mpz_class> primitive_integer(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.get_den());
  ZPoly z(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    mpq_class c = p[i] * l;
    z[i] = c.get_num();
  }
  mpz_class content = 0;
  for (const auto& c : z) content = gcd(content, c);
  if (content > 1)
    for (auto& c : z) c /= content;
  trim(z);
  int d = degree(z);
  mpz_class lc = d >= 0 ? z[d] : mpz_class(0);
  return {z, abs(lc)};
}

mpz_class eval(const ZPoly& p, const mpz_class& x) {
  mpz_class r = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

mpz_class eval2(const ZPoly& p, const mpz_class& x, const mpz_class& y) {
  // p homogenized to degree(p): sum p[i] * x^i * y^(d-i), evaluated as
  // Horner in x with a running power of y.
  int d = degree(p);
  if (d < 0) return 0;
  mpz_class r = p[d];
  mpz_class ypow = 1;
  for (int i = d - 1; i >= 0; --i) {
    ypow *= y;
    r = r * x + p[i] * ypow;
  }
  return r;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class r = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

BigFloat eval(const ZPoly& p, const BigFloat& x) {
  BigFloat r(0.0, x.prec());
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    r = r * x + BigFloat(p[i], x.prec());
  return r;
}

BigFloat eval(const QPoly& p, const BigFloat& x) {
  BigFloat r(0.0, x.prec());
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    r = r * x + BigFloat(p[i], x.prec());
  return r;
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  trim(r);
  return r;
}

mpz_class resultant(const ZPoly& a_in, const ZPoly& b_in) {
  // Determinant of the Sylvester matrix by fraction-free (Bareiss)
  // elimination. The polynomials involved here are small, so the O(n^3)
  // determinant is plenty fast and has no PRS corner cases.
  ZPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return 0;
  if (da == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), db);
    return r;
  }
  if (db == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), da);
    return r;
  }
  int n = da + db;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

static void mobius_factors(long n, std::vector<long>& plus, std::vector<long>& minus) {
  // squarefree divisors d of n with mu(d) = +1 / -1; term is x^(n/d) - 1
  std::vector<long> primes;
  long m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  size_t k = primes.size();
  for (size_t mask = 0; mask < (1u << k); ++mask) {
    long d = 1;
    int bits = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        d *= primes[i];
        ++bits;
      }
    (bits % 2 == 0 ? plus : minus).push_back(n / d);
  }
}

ZPoly cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  if (n == 1) return {-1, 1};
  std::vector<long> plus, minus;
  mobius_factors(n, plus, minus);
  ZPoly num = {1};
  for (long e : plus) {
    ZPoly t(e + 1);
    t[0] = -1;
    t[e] = 1;
    num = mul(num, t);
  }
  ZPoly den = {1};
  for (long e : minus) {
    ZPoly t(e + 1);
    t[0] = -1;
    t[e] = 1;
    den = mul(den, t);
  }
  return divexact(num, den);
}

ZPoly real_cyclotomic_minpoly(long n) {
  if (n < 3) throw std::invalid_argument("real_cyclotomic_minpoly: n must be >= 3");
  ZPoly phi = cyclotomic(n);
  int deg = degree(phi);
  int d = deg / 2;
  // phi is palindromic for n > 2; fold with u^k + u^-k = D_k(w).
  ZPoly result(d + 1);
  result[0] = phi[d];
  for (int k = 1; k <= d; ++k) {
    ZPoly dk = dickson(k);
    for (size_t i = 0; i < dk.size(); ++i) result[i] += phi[d + k] * dk[i];
  }
  trim(result);
  return result;
}

std::vector<mpz_class> dickson_param(long t) {
  // c[k] for D_t(X, A) = sum c[k] X^(t-2k) A^k
  std::vector<mpz_class> dm1 = {2};  // D_0
  if (t == 0) return dm1;
  std::vector<mpz_class> d0 = {1};  // D_1 = X
  for (long i = 2; i <= t; ++i) {
    // D_i = X*D_{i-1} - A*D_{i-2}
    std::vector<mpz_class> di(i / 2 + 1);
    for (size_t k = 0; k < d0.size(); ++k) di[k] += d0[k];
    for (size_t k = 0; k < dm1.size(); ++k) di[k + 1] -= dm1[k];
    dm1 = std::move(d0);
    d0 = std::move(di);
  }
  return d0;
}

ZPoly dickson(long t) {
  auto c = dickson_param(t);
  ZPoly p(t + 1);
  for (size_t k = 0; k < c.size(); ++k) p[t - 2 * k] = c[k];
  trim(p);
  return p;
}

long euler_phi(long n) {
  long r = n, m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  if (m > 1) r -= r / m;
  return r;
}

long largest_prime_factor(long n) {
  long best = 1, m = n;
  for (long p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      best = p;
      m /= p;
    }
  if (m > 1) best = m;
  return best;
}

std::vector<long> coprime_residues_below_half(long n) {
  std::vector<long> r;
  for (long a = 1; 2 * a < n; ++a)
    if (std::gcd(a, n) == 1) r.push_back(a);
  return r;
}

QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  // Newton's divided differences.
  size_t n = xs.size();
  std::vector<mpq_class> coef = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly p = {coef[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    QPoly lin = {-xs[i], mpq_class(1)};
    p = mul(p, lin);
    p = add(p, QPoly{coef[i]});
  }
  trim(p);
  return p;
}

}  // namespace poly

namespace linalg {

std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a,
                                            std::vector<mpq_class> b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      mpq_class f = a[row][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<mpq_class> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<std::vector<mpq_class>> solve_rect(std::vector<std::vector<mpq_class>> a,
                                                 std::vector<mpq_class> b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t rank = 0;
  std::vector<size_t> pivot_row;
  for (size_t col = 0; col < cols; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    for (size_t row = 0; row < rows; ++row) {
      if (row == rank || a[row][col] == 0) continue;
      mpq_class f = a[row][col] / a[rank][col];
      for (size_t k = col; k < cols; ++k) a[row][k] -= f * a[rank][k];
      b[row] -= f * b[rank];
    }
    pivot_row.push_back(rank);
    ++rank;
  }
  for (size_t row = rank; row < rows; ++row)
    if (b[row] != 0) return std::nullopt;
  std::vector<mpq_class> x(cols);
  for (size_t col = 0; col < cols; ++col) x[col] = b[col] / a[col][col];
  return x;
}

std::optional<std::pair<size_t, std::vector<mpq_class>>> first_dependency(
    const std::vector<std::vector<mpq_class>>& vecs) {
  if (vecs.empty()) return std::nullopt;
  size_t dim = vecs[0].size();
  // Row-reduce incrementally, remembering how each reduced row was formed.
  std::vector<std::vector<mpq_class>> rows;    // reduced independent rows
  std::vector<std::vector<mpq_class>> combos;  // expression in original vecs
  std::vector<size_t> pivots;
  for (size_t k = 0; k < vecs.size(); ++k) {
    std::vector<mpq_class> v = vecs[k];
    std::vector<mpq_class> c(vecs.size());
    c[k] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      size_t p = pivots[r];
      if (v[p] == 0) continue;
      mpq_class f = v[p] / rows[r][p];
      for (size_t j = 0; j < dim; ++j) v[j] -= f * rows[r][j];
      for (size_t j = 0; j < c.size(); ++j) c[j] -= f * combos[r][j];
    }
    size_t p = 0;
    while (p < dim && v[p] == 0) ++p;
    if (p == dim) {
      // v_k = -(sum_{i<k} c_i v_i) with c_k = 1
      std::vector<mpq_class> out(k);
      for (size_t i = 0; i < k; ++i) out[i] = -c[i];
      return std::make_pair(k, out);
    }
    rows.push_back(std::move(v));
    combos.push_back(std::move(c));
    pivots.push_back(p);
  }
  return std::nullopt;
}

}  // namespace linalg
}  // namespace primdiv
