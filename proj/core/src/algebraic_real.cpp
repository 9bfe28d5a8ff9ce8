#include "primdiv/algebraic_real.hpp"

namespace primdiv {

AlgebraicReal AlgebraicReal::two_cos_2pi(long a, long n) {
  return AlgebraicReal("2cos(2pi*" + std::to_string(a) + "/" + std::to_string(n) + ")",
                       [a, n](mpfr_prec_t prec) { return BigFloat::two_cos_2pi(a, n, prec); });
}

AlgebraicReal AlgebraicReal::from_constant(const BigFloat& v, std::string descriptor) {
  return AlgebraicReal(std::move(descriptor), [v](mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
    return r;
  });
}

bool AlgebraicReal::consistent_at(long digits) const {
  BigFloat a = at_digits(digits);
  BigFloat b = at_digits(digits + 20);
  BigFloat diff = (a - b).abs();
  BigFloat tol = BigFloat(10.0, 64).pow_si(-(digits - 5));
  BigFloat scale = a.abs() + BigFloat(1.0, 64);
  return diff <= tol * scale;
}

}  // namespace primdiv
