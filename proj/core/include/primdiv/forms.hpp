#ifndef PRIMDIV_FORMS_HPP
#define PRIMDIV_FORMS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "primdiv/zpoly.hpp"

namespace primdiv {

// Homogeneous binary form F_n(X, Y) of degree phi(n)/2 with
// F_n(a^2 + b^2, a*b) = Phi_n(a, b).  Coefficients are exact integers,
// stored descending in X: coeffs[k] is the coefficient of X^(d-k) Y^k.
struct BinaryForm {
  long n = 0;
  int degree = 0;
  std::vector<mpz_class> coeffs;

  mpz_class evaluate(const mpz_class& x, const mpz_class& y) const;
  BigFloat evaluate(const BigFloat& x, const BigFloat& y) const;
  // g(X) = F(X, 1), low-to-high coefficients.
  ZPoly univariate() const;
  std::string dump_line() const;  // "n degree c_0 c_1 ... c_d"
};

// Admissible right-hand sides of F_n(x, y) = m: by the primitive-divisor
// criterion these are {+-1, +-P(n/(n,3))}, except n = 12 where the set is
// {+-1, +-2, +-3, +-6}.
struct FormTarget {
  long n = 0;
  std::vector<mpz_class> rhs_values;
  bool contains(const mpz_class& m) const;
};

// Substitution pulling solutions of F_n back from the core form F_m.
// Either the odd/even identity F_{2t}(X,Y) = F_t(X,-Y), or the exponent
// reduction F_n(X,Y) = F_m(X', Y^e) with X' = D_e(X, Y^2).
struct CoreReduction {
  long n = 0;
  long m = 0;
  long e = 1;                      // Y' = ysign * Y^e
  int ysign = 1;
  std::vector<mpz_class> xsub;     // X' = sum xsub[k] X^(e-2k) (Y^2)^k
  mpz_class x_image(const mpz_class& x, const mpz_class& y) const;
  mpz_class y_image(const mpz_class& x, const mpz_class& y) const;
};

BinaryForm build_form(long n);
FormTarget form_target(long n);

// F_{2t}(X, Y) = F_t(X, -Y) for odd t > 3.
BinaryForm reduce_even(long t);

// Core index and substitution for non-squarefree n or n == 2 (mod 4).
CoreReduction reduce_to_core(long n);

}  // namespace primdiv

#endif
