#include "primdiv/bigfloat.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace primdiv {

mpfr_prec_t BigFloat::digits_to_bits(long digits) {
  // log2(10) = 3.3219...; a few spare bits keep decimal round trips honest.
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::two_cos_2pi(long num, long den, mpfr_prec_t prec) {
  mpfr_prec_t work = prec + 32;
  BigFloat ang(work);
  mpfr_const_pi(ang.raw(), MPFR_RNDN);
  mpfr_mul_si(ang.raw(), ang.raw(), 2 * num, MPFR_RNDN);
  mpfr_div_si(ang.raw(), ang.raw(), den, MPFR_RNDN);
  BigFloat c(work);
  mpfr_cos(c.raw(), ang.raw(), MPFR_RNDN);
  BigFloat r(prec);
  mpfr_mul_si(r.x_, c.raw(), 2, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sin_pi_frac(long num, long den, mpfr_prec_t prec) {
  mpfr_prec_t work = prec + 32;
  BigFloat ang(work);
  mpfr_const_pi(ang.raw(), MPFR_RNDN);
  mpfr_mul_si(ang.raw(), ang.raw(), num, MPFR_RNDN);
  mpfr_div_si(ang.raw(), ang.raw(), den, MPFR_RNDN);
  BigFloat r(prec);
  mpfr_sin(r.x_, ang.raw(), MPFR_RNDN);
  return r;
}

mpz_class BigFloat::floor_z() const {
  BigFloat f = floor();
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), f.x_, MPFR_RNDZ);
  return z;
}

mpz_class BigFloat::trunc_z() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDZ);
  return z;
}

mpz_class BigFloat::round_ties_away() const {
  BigFloat t(prec() + 4);
  mpfr_abs(t.x_, x_, MPFR_RNDN);
  mpfr_add_d(t.x_, t.x_, 0.5, MPFR_RNDN);
  mpfr_floor(t.x_, t.x_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.x_, MPFR_RNDZ);
  if (sign() < 0) z = -z;
  return z;
}

double BigFloat::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  BigFloat a(prec());
  mpfr_abs(a.x_, x_, MPFR_RNDN);
  mpfr_log10(a.x_, a.x_, MPFR_RNDN);
  return a.to_double();
}

std::string BigFloat::to_string(long digits) const {
  if (mpfr_nan_p(x_)) return "nan";
  if (mpfr_inf_p(x_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
  if (!s) throw std::runtime_error("mpfr_get_str failed");
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string m = neg ? mant.substr(1) : mant;
  std::string out = (neg ? "-" : "");
  out += "0.";
  out += m;
  out += "e";
  out += std::to_string(static_cast<long>(e));
  return out;
}

}  // namespace primdiv
