#include "primdiv/lattice.hpp"

#include <stdexcept>

#include "primdiv/zpoly.hpp"

namespace primdiv {

LatticeBasis LatticeBasis::identity(int p) {
  LatticeBasis b;
  b.dim = p;
  b.cols.assign(p, std::vector<mpz_class>(p, 0));
  for (int i = 0; i < p; ++i) b.cols[i][i] = 1;
  return b;
}

LatticeBasis LatticeBasis::scaled_log_rows(const std::vector<mpz_class>& bottom) {
  int p = static_cast<int>(bottom.size());
  LatticeBasis b;
  b.dim = p;
  b.cols.assign(p, std::vector<mpz_class>(p, 0));
  for (int i = 0; i < p - 1; ++i) b.cols[i][i] = 1;
  for (int i = 0; i < p; ++i) b.cols[i][p - 1] = bottom[i];
  return b;
}

BigFloat ReductionOutcome::b1_norm(mpfr_prec_t prec) const {
  return BigFloat(b1_norm_sq, prec).sqrt();
}

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

mpz_class round_nearest(const mpz_class& num, const mpz_class& den) {
  // nearest integer to num/den, den > 0, ties toward even not required:
  // any consistent rounding works for the reduction step
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  return q;
}

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
  int n = static_cast<int>(m.size());
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
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

ReductionOutcome lll_reduce(const LatticeBasis& basis) {
  int n = basis.dim;
  if (n <= 0) throw std::invalid_argument("lll_reduce: empty basis");
  std::vector<std::vector<mpz_class>> b = basis.cols;
  std::vector<std::vector<mpz_class>> h(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) h[i][i] = 1;

  // Integral LLL with Gram determinants d[] and integral lambda (de Weger's
  // iterative integer version; delta = 3/4).
  std::vector<mpz_class> d(n + 1);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1, 0));
  d[0] = 1;

  auto red = [&](int k, int l) {
    // indices 1-based into d/lam, 0-based into b/h
    if (2 * abs(lam[k][l]) > d[l]) {
      mpz_class q = round_nearest(lam[k][l], d[l]);
      for (int row = 0; row < n; ++row) b[k - 1][row] -= q * b[l - 1][row];
      for (int row = 0; row < n; ++row) h[k - 1][row] -= q * h[l - 1][row];
      lam[k][l] -= q * d[l];
      for (int i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  auto swapi = [&](int k, int kmax) {
    std::swap(b[k - 1], b[k - 2]);
    std::swap(h[k - 1], h[k - 2]);
    for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    mpz_class l = lam[k][k - 1];
    mpz_class bb = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (int i = k + 1; i <= kmax; ++i) {
      mpz_class t = lam[i][k];
      lam[i][k] = (lam[i][k - 1] * d[k] - l * t) / d[k - 1];
      lam[i][k - 1] = (bb * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = bb;
  };

  int k = 2, kmax = 1;
  d[1] = dot(b[0], b[0]);
  if (n == 1) {
    if (d[1] == 0) throw std::invalid_argument("lll_reduce: zero vector");
  }
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        mpz_class u = dot(b[k - 1], b[j - 1]);
        for (int i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) throw std::invalid_argument("lll_reduce: dependent columns");
    }
    red(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swapi(k, kmax);
      k = std::max(2, k - 1);
    } else {
      for (int l = k - 2; l >= 1; --l) red(k, l);
      ++k;
    }
  }

  ReductionOutcome out;
  out.original = basis;
  out.reduced.dim = n;
  out.reduced.cols = b;
  out.transform = h;
  out.b1_norm_sq = dot(b[0], b[0]);
  // |b*_i|^2 = d_i / d_{i-1}; the d[] of the final configuration. For a
  // 1-dimensional basis the loop above never ran, so fill d[1] here.
  if (n == 1) d[1] = out.b1_norm_sq;
  out.gs_norms_sq.resize(n);
  for (int i = 0; i < n; ++i) out.gs_norms_sq[i] = mpq_class(d[i + 1]) / mpq_class(d[i]);

  // The transform must be unimodular and reproduce the reduced basis.
  mpz_class det = det_bareiss(h);
  if (!(det == 1 || det == -1)) throw std::logic_error("lll_reduce: transform not unimodular");
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      mpz_class acc = 0;
      for (int t = 0; t < n; ++t) acc += basis.cols[t][r] * h[c][t];
      if (acc != b[c][r]) throw std::logic_error("lll_reduce: transform mismatch");
    }
  return out;
}

TargetCoords coords_of_target(const ReductionOutcome& outcome, const std::vector<mpz_class>& x) {
  int n = outcome.reduced.dim;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> rhs(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = outcome.reduced.cols[c][r];
    rhs[r] = x[r];
  }
  auto sol = linalg::solve(std::move(a), std::move(rhs));
  if (!sol) throw std::logic_error("coords_of_target: reduced basis is singular");
  TargetCoords tc;
  tc.s = *sol;
  tc.in_lattice = true;
  for (int i = n - 1; i >= 0; --i) {
    mpq_class s = tc.s[i];
    mpz_class nearest;
    {
      mpz_class num = s.get_num(), den = s.get_den();
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (2 * r >= den) q += 1;
      nearest = q;
    }
    mpq_class dist = abs(s - mpq_class(nearest));
    if (dist != 0 && tc.in_lattice) {
      tc.in_lattice = false;
      tc.k_index = i;
      tc.s_k_dist = dist;
    }
  }
  return tc;
}

std::optional<double> reduced_bound_nz(const ReductionOutcome& outcome, const TargetCoords& tc,
                                       const ReductionParams& rp) {
  if (tc.in_lattice) return std::nullopt;
  mpfr_prec_t prec = 256;
  // The distance from the target to the lattice is at least
  // ||s_k|| * |b*_k| for the largest k with s_k not integral; this is the
  // sharp form of the usual 2^(-(p-1)/2) ||s_k|| |b_1| estimate.
  BigFloat bstar_k = BigFloat(outcome.gs_norms_sq[tc.k_index], prec).sqrt();
  BigFloat lhs = BigFloat(tc.s_k_dist, prec) * bstar_k;
  BigFloat rhs = BigFloat(static_cast<double>(rp.p) * rp.p + 5.0 * rp.p + 3.0, prec).sqrt() *
                 BigFloat(static_cast<long>(rp.d - rp.p), prec) * BigFloat(rp.T, prec) * rp.C9cur;
  if (!(lhs >= rhs)) return std::nullopt;
  BigFloat arg = rp.c0 * BigFloat(rp.t0, prec) * rp.C6 /
                 (BigFloat(static_cast<long>(rp.d - rp.p), prec) * BigFloat(rp.T, prec) * rp.C9cur);
  BigFloat bound = rp.C5 / BigFloat(static_cast<long>(rp.d), prec) * arg.log();
  return bound.to_double();
}

std::optional<double> reduced_bound_z(const ReductionOutcome& outcome, const ReductionParams& rp) {
  mpfr_prec_t prec = 256;
  BigFloat b1 = outcome.b1_norm(prec);
  if (rp.d < 3) throw std::invalid_argument("reduced_bound_z: requires d >= 3");
  BigFloat lhs = BigFloat(2.0, prec).pow_si(rp.d - 2).sqrt() * b1;
  BigFloat rhs = BigFloat(1.17, prec) *
                 BigFloat(static_cast<double>(rp.d) * rp.d + rp.d - 2.0, prec).sqrt() *
                 BigFloat(rp.T, prec) * rp.C9cur;
  if (!(lhs > rhs)) return std::nullopt;
  // Matches the published computations: coefficient 1.16 * T * d / C5 and
  // the c0*t0*C6 / (1.17*T*C9) argument.
  BigFloat arg =
      rp.c0 * BigFloat(rp.t0, prec) * rp.C6 / (BigFloat(1.17, prec) * BigFloat(rp.T, prec) * rp.C9cur);
  BigFloat dd(static_cast<long>(rp.d), prec);
  BigFloat aprime = BigFloat(1.16, prec) * BigFloat(rp.T, prec) * dd / rp.C5 * arg.log();
  BigFloat bound = (aprime + BigFloat(rp.T, prec)) / BigFloat(rp.t0, prec);
  return bound.to_double();
}

}  // namespace primdiv
