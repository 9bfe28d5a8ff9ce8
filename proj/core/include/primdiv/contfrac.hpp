#ifndef PRIMDIV_CONTFRAC_HPP
#define PRIMDIV_CONTFRAC_HPP

#include <gmpxx.h>

#include <vector>

#include "primdiv/algebraic_real.hpp"

namespace primdiv {

struct Convergent {
  mpz_class p;
  mpz_class q;
};

// Continued fraction data for one target, with certified partial quotients.
struct ConvergentStream {
  AlgebraicReal target;
  std::vector<mpz_class> partial_quotients;
  std::vector<Convergent> convergents;  // q strictly increasing
};

// All convergents p/q of x with q <= qmax. Partial quotients are accepted
// only when a recomputation with 50 extra digits reproduces them; on
// disagreement the working precision doubles (a few times) before giving up.
ConvergentStream convergents_up_to(const AlgebraicReal& x, const mpz_class& qmax);

}  // namespace primdiv

#endif
