#include "primdiv/forms.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace primdiv {

mpz_class BinaryForm::evaluate(const mpz_class& x, const mpz_class& y) const {
  mpz_class r = 0;
  mpz_class ypow = 1;
  // Horner in x over descending coefficients, with an explicit power of y.
  for (int k = 0; k <= degree; ++k) {
    r = r * x + coeffs[k] * ypow;
    if (k < degree) ypow *= y;
  }
  return r;
}

BigFloat BinaryForm::evaluate(const BigFloat& x, const BigFloat& y) const {
  BigFloat r(0.0, x.prec());
  BigFloat ypow(1.0, x.prec());
  for (int k = 0; k <= degree; ++k) {
    r = r * x + BigFloat(coeffs[k], x.prec()) * ypow;
    if (k < degree) ypow = ypow * y;
  }
  return r;
}

ZPoly BinaryForm::univariate() const {
  ZPoly g(degree + 1);
  for (int k = 0; k <= degree; ++k) g[degree - k] = coeffs[k];
  return g;
}

std::string BinaryForm::dump_line() const {
  std::ostringstream os;
  os << n << " " << degree;
  for (const auto& c : coeffs) os << " " << c;
  return os.str();
}

bool FormTarget::contains(const mpz_class& m) const {
  for (const auto& v : rhs_values)
    if (v == m) return true;
  return false;
}

mpz_class CoreReduction::x_image(const mpz_class& x, const mpz_class& y) const {
  if (e == 1) return x;
  mpz_class y2 = y * y;
  mpz_class r = 0;
  // sum xsub[k] x^(e-2k) y^(2k), assembled highest-power-of-x first
  for (size_t k = 0; k < xsub.size(); ++k) {
    mpz_class term = xsub[k];
    for (long i = 0; i < e - 2 * static_cast<long>(k); ++i) term *= x;
    for (size_t i = 0; i < k; ++i) term *= y2;
    r += term;
  }
  return r;
}

mpz_class CoreReduction::y_image(const mpz_class& x, const mpz_class& y) const {
  (void)x;
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), y.get_mpz_t(), e);
  return ysign < 0 ? mpz_class(-r) : r;
}

BinaryForm build_form(long n) {
  if (n <= 4 || n == 6)
    throw std::invalid_argument("build_form: n must satisfy n > 4, n != 6");
  ZPoly psi = poly::real_cyclotomic_minpoly(n);
  int d = poly::degree(psi);
  BinaryForm f;
  f.n = n;
  f.degree = d;
  f.coeffs.resize(d + 1);
  for (int k = 0; k <= d; ++k) f.coeffs[k] = psi[d - k];
  if (f.coeffs[0] != 1) throw std::logic_error("build_form: leading coefficient is not 1");
  return f;
}

FormTarget form_target(long n) {
  if (n <= 4 || n == 6)
    throw std::invalid_argument("form_target: n must satisfy n > 4, n != 6");
  FormTarget t;
  t.n = n;
  if (n == 12) {
    t.rhs_values = {1, -1, 2, -2, 3, -3, 6, -6};
  } else {
    long p = poly::largest_prime_factor(n / std::gcd(n, 3L));
    t.rhs_values = {1, -1, p, -p};
  }
  return t;
}

BinaryForm reduce_even(long t) {
  if (t % 2 == 0) throw std::invalid_argument("reduce_even: t must be odd");
  if (t <= 3) throw std::invalid_argument("reduce_even: t must exceed 3");
  BinaryForm ft = build_form(t);
  BinaryForm f2t = ft;
  f2t.n = 2 * t;
  for (int k = 1; k <= f2t.degree; k += 2) f2t.coeffs[k] = -f2t.coeffs[k];
  return f2t;
}

static bool same_prime_support(long a, long b) {
  auto radical = [](long v) {
    long r = 1;
    for (long p = 2; p * p <= v; ++p)
      if (v % p == 0) {
        r *= p;
        while (v % p == 0) v /= p;
      }
    if (v > 1) r *= v;
    return r;
  };
  return radical(a) == radical(b);
}

CoreReduction reduce_to_core(long n) {
  CoreReduction cr;
  cr.n = n;
  if (n % 4 == 2) {
    cr.m = n / 2;
    cr.e = 1;
    cr.ysign = -1;
    cr.xsub = {1};
  } else {
    long m = 0;
    for (long cand = 2; cand < n; ++cand)
      if (n % cand == 0 && same_prime_support(cand, n) && poly::euler_phi(cand) / 2 >= 3) {
        m = cand;
        break;
      }
    if (m == 0) throw std::invalid_argument("reduce_to_core: no smaller core index");
    cr.m = m;
    cr.e = n / m;
    cr.ysign = 1;
    cr.xsub = poly::dickson_param(cr.e);
  }
  long pn = poly::largest_prime_factor(n / std::gcd(n, 3L));
  long pm = poly::largest_prime_factor(cr.m / std::gcd(cr.m, 3L));
  if (pn != pm) throw std::logic_error("reduce_to_core: P(n/(3,n)) changed under reduction");
  return cr;
}

}  // namespace primdiv
