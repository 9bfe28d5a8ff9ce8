#ifndef PRIMDIV_ZPOLY_HPP
#define PRIMDIV_ZPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "primdiv/bigfloat.hpp"

namespace primdiv {

// Dense univariate polynomials, coefficient of x^i at index i.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

namespace poly {

int degree(const ZPoly& p);
int degree(const QPoly& p);
void trim(ZPoly& p);
void trim(QPoly& p);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
// Exact division; throws if the remainder is nonzero.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
// Euclidean division by a polynomial with invertible leading coefficient.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly mod(const QPoly& a, const QPoly& m);
// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<QPoly, QPoly, QPoly> ext_gcd(const QPoly& a, const QPoly& b);
// Inverse of a modulo m; throws if gcd(a, m) != 1.
QPoly inv_mod(const QPoly& a, const QPoly& m);

QPoly to_q(const ZPoly& p);
// Smallest positive L with L*p integral, and the integer polynomial L*p
// divided by its content. Returns {primitive, lc_of_primitive}.
std::pair<ZPoly, mpz_class> primitive_integer(const QPoly& p);

mpz_class eval(const ZPoly& p, const mpz_class& x);
mpz_class eval2(const ZPoly& p, const mpz_class& x, const mpz_class& y);  // homogenized
mpq_class eval(const QPoly& p, const mpq_class& x);
BigFloat eval(const ZPoly& p, const BigFloat& x);
BigFloat eval(const QPoly& p, const BigFloat& x);

// Resultant of integer polynomials via the subresultant PRS.
mpz_class resultant(const ZPoly& a, const ZPoly& b);

// Derivative.
ZPoly derivative(const ZPoly& p);

// n-th cyclotomic polynomial, exact.
ZPoly cyclotomic(long n);
// Minimal polynomial of 2cos(2pi/n) over Q (degree phi(n)/2), n >= 3.
// Its roots are exactly 2cos(2pi*a/n) for a < n/2 coprime to n.
ZPoly real_cyclotomic_minpoly(long n);

// Coefficients c[k] with D_t(X, A) = sum_k c[k] X^(t-2k) A^k, where
// D_t(u+v, uv... ) satisfies u^t + v^t = D_t(u+v, uv). D_0 = 2, D_1 = X.
std::vector<mpz_class> dickson_param(long t);
// D_t(x) = D_t(x, 1) as a ZPoly.
ZPoly dickson(long t);

long euler_phi(long n);
long largest_prime_factor(long n);
std::vector<long> coprime_residues_below_half(long n);  // a < n/2, gcd(a,n)=1

// Lagrange interpolation through (x_i, y_i), exact.
QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

}  // namespace poly

namespace linalg {

// Solves A*x = b over Q by Gaussian elimination. A is row-major, square.
// Returns std::nullopt for singular A.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a,
                                            std::vector<mpq_class> b);

// Solves a (possibly overdetermined) consistent system A*x = b, A r-by-c
// with r >= c and full column rank. Returns nullopt if rank-deficient or
// inconsistent.
std::optional<std::vector<mpq_class>> solve_rect(std::vector<std::vector<mpq_class>> a,
                                                 std::vector<mpq_class> b);

// First linear dependency among the given vectors v_0..v_k (checked in
// order): smallest k such that v_k is in the span of v_0..v_{k-1}, plus
// coefficients c with v_k = sum c_i v_i. Returns nullopt if independent.
std::optional<std::pair<size_t, std::vector<mpq_class>>> first_dependency(
    const std::vector<std::vector<mpq_class>>& vecs);

}  // namespace linalg

}  // namespace primdiv

#endif
