#ifndef PRIMDIV_BIGFLOAT_HPP
#define PRIMDIV_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace primdiv {

// Arbitrary-precision real backed by MPFR. Every value carries its own
// precision; binary operations work at the larger of the two operand
// precisions, so precision decisions stay local to the call site.
class BigFloat {
 public:
  BigFloat() : BigFloat(0.0, 64) {}
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  BigFloat(double v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_d(x_, v, MPFR_RNDN); }
  BigFloat(long v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_si(x_, v, MPFR_RNDN); }
  BigFloat(const mpz_class& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const mpq_class& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_str(x_, s.c_str(), 10, MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) { mpfr_init2(x_, o.prec()); mpfr_set(x_, o.x_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, 64);
    mpfr_swap(x_, o.x_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(x_, o.prec());
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  const mpfr_t& raw() const { return x_; }
  mpfr_t& raw() { return x_; }

  static mpfr_prec_t digits_to_bits(long digits);

  static BigFloat pi(mpfr_prec_t prec);
  // 2*cos(2*pi*num/den), computed with guard bits and rounded back.
  static BigFloat two_cos_2pi(long num, long den, mpfr_prec_t prec);
  // sin(num*pi/den)
  static BigFloat sin_pi_frac(long num, long den, mpfr_prec_t prec);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_div); }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
  BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_); }

  BigFloat abs() const {
    BigFloat r(prec());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
  }
  BigFloat log() const {
    BigFloat r(prec());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
  }
  BigFloat exp() const {
    BigFloat r(prec());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
  }
  BigFloat pow_si(long e) const {
    BigFloat r(prec());
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
  }
  BigFloat pow(const BigFloat& e) const {
    BigFloat r(std::max(prec(), e.prec()));
    mpfr_pow(r.x_, x_, e.x_, MPFR_RNDN);
    return r;
  }
  BigFloat floor() const {
    BigFloat r(prec());
    mpfr_floor(r.x_, x_);
    return r;
  }

  mpz_class floor_z() const;
  // Round to nearest integer, ties away from zero.
  mpz_class round_ties_away() const;
  mpz_class trunc_z() const;

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  double log10_abs() const;  // log10|x|, as double; -inf for 0
  std::string to_string(long digits = 20) const;

 private:
  using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat bin(const BigFloat& a, const BigFloat& b, mpfr_bin_fn f) {
    BigFloat r(std::max(a.prec(), b.prec()));
    f(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  mpfr_t x_;
};

}  // namespace primdiv

#endif
