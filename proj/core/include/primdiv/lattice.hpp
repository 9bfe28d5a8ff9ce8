#ifndef PRIMDIV_LATTICE_HPP
#define PRIMDIV_LATTICE_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "primdiv/bigfloat.hpp"

namespace primdiv {

// Column-major integer lattice basis.
struct LatticeBasis {
  int dim = 0;
  std::vector<std::vector<mpz_class>> cols;  // cols[i][row]

  static LatticeBasis identity(int p);
  // The reduction-lattice shape: identity rows on top, scaled logarithm
  // row at the bottom.
  static LatticeBasis scaled_log_rows(const std::vector<mpz_class>& bottom);
};

struct ReductionOutcome {
  LatticeBasis original;
  LatticeBasis reduced;
  std::vector<std::vector<mpz_class>> transform;  // reduced = original * transform
  mpz_class b1_norm_sq;
  std::vector<mpq_class> gs_norms_sq;  // |b*_i|^2, exact
  BigFloat b1_norm(mpfr_prec_t prec) const;
};

// Exact integer LLL with delta = 3/4, tracking the unimodular transform.
// Throws on linearly dependent columns.
ReductionOutcome lll_reduce(const LatticeBasis& basis);

struct TargetCoords {
  std::vector<mpq_class> s;   // x = sum s_i b_i in the reduced basis
  bool in_lattice = false;    // all s_i integral
  int k_index = -1;           // largest k (0-based) with s_k not integral
  mpq_class s_k_dist;         // distance from s_k to the nearest integer
};

// Exact rational coordinates of an integer target vector in the reduced
// basis.
TargetCoords coords_of_target(const ReductionOutcome& outcome, const std::vector<mpz_class>& x);

struct ReductionParams {
  int d = 0;        // degree of the Thue form
  int p = 0;        // lattice dimension
  long T = 1;
  long t0 = 1;
  BigFloat C5;
  BigFloat C6;
  BigFloat C9cur;   // bound being reduced (C9 on pass one, A1 on pass two)
  BigFloat c0;
};

// Reduced bound when the target is not in the lattice span of the logs.
// Returns the new bound for A, or nullopt when the hypothesis fails and
// c0 must be increased.
std::optional<double> reduced_bound_nz(const ReductionOutcome& outcome, const TargetCoords& tc,
                                       const ReductionParams& rp);

// Homogeneous variant, used when log(alpha_0) is a Z-combination of the
// unit logarithms (n = 7, 9).
std::optional<double> reduced_bound_z(const ReductionOutcome& outcome, const ReductionParams& rp);

}  // namespace primdiv

#endif
