#include "primdiv/contfrac.hpp"

#include <stdexcept>

namespace primdiv {

namespace {

// Expand at fixed precision until q exceeds qmax or the tail becomes too
// small to trust. Returns the quotients it is sure of.
std::vector<mpz_class> expand_at(const AlgebraicReal& x, const mpz_class& qmax, long digits) {
  BigFloat v = x.at_digits(digits);
  BigFloat tiny = BigFloat(10.0, 64).pow_si(-(digits - 10));
  std::vector<mpz_class> out;
  // q_{-1} = 0, q_0 = 1; only a_0 may be non-positive.
  mpz_class qprev = 0, q = 1;
  while (true) {
    mpz_class a = v.floor_z();
    BigFloat frac = v - BigFloat(a, v.prec());
    if (frac < tiny) break;  // cannot certify further quotients
    if (!out.empty()) {
      mpz_class qn = a * q + qprev;
      qprev = q;
      q = qn;
    }
    out.push_back(a);
    if (q > qmax) break;
    v = BigFloat(1.0, v.prec()) / frac;
  }
  return out;
}

bool prefix_covers(const std::vector<mpz_class>& pq, const mpz_class& qmax) {
  mpz_class qprev = 0, q = 1;
  for (size_t i = 0; i < pq.size(); ++i) {
    if (i > 0) {
      mpz_class qn = pq[i] * q + qprev;
      qprev = q;
      q = qn;
    }
    if (q > qmax) return true;
  }
  return false;
}

}  // namespace

ConvergentStream convergents_up_to(const AlgebraicReal& x, const mpz_class& qmax) {
  ConvergentStream s;
  s.target = x;
  if (qmax < 1) return s;

  double lg = mpz_sizeinbase(qmax.get_mpz_t(), 10);
  long digits = std::max<long>(60, static_cast<long>(2.2 * lg) + 40);
  std::vector<mpz_class> certified;
  for (int attempt = 0; attempt < 7; ++attempt) {
    std::vector<mpz_class> a1 = expand_at(x, qmax, digits);
    std::vector<mpz_class> a2 = expand_at(x, qmax, digits + 50);
    size_t common = 0;
    while (common < a1.size() && common < a2.size() && a1[common] == a2[common]) ++common;
    certified.assign(a1.begin(), a1.begin() + common);
    if (prefix_covers(certified, qmax)) break;
    digits *= 2;
    if (attempt == 6)
      throw std::runtime_error("convergents_up_to: precision escalation exhausted");
  }

  mpz_class pprev = 1, p = certified.empty() ? mpz_class(0) : certified[0];
  mpz_class qprev = 0, q = 1;
  for (size_t i = 0; i < certified.size(); ++i) {
    if (i > 0) {
      mpz_class pn = certified[i] * p + pprev;
      mpz_class qn = certified[i] * q + qprev;
      pprev = p;
      qprev = q;
      p = pn;
      q = qn;
    }
    if (q > qmax) break;
    s.partial_quotients.push_back(certified[i]);
    s.convergents.push_back({p, q});
  }
  return s;
}

}  // namespace primdiv
