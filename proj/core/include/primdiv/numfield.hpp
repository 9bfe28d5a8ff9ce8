#ifndef PRIMDIV_NUMFIELD_HPP
#define PRIMDIV_NUMFIELD_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "primdiv/algebraic_real.hpp"
#include "primdiv/bigfloat.hpp"
#include "primdiv/zpoly.hpp"

namespace primdiv {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q[x]/(minpoly) on the power basis of the generator.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, QPoly coords);

  static FieldElem from_rational(FieldPtr field, const mpq_class& c);
  static FieldElem generator(FieldPtr field);

  const QPoly& coords() const { return coords_; }
  const FieldPtr& field() const { return field_; }
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  bool operator==(const FieldElem& o) const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;  // e may be negative

  // Value under the j-th real embedding (0-based), at given precision.
  BigFloat embed(int j, mpfr_prec_t prec) const;

  // Image under the j-th field automorphism (Galois fields only).
  FieldElem conjugate(int j) const;

  // Exact norm over Q.
  mpq_class norm() const;

  // Monic minimal polynomial over Q and the leading coefficient of its
  // primitive integer multiple.
  std::pair<QPoly, mpz_class> minimal_polynomial() const;

  // Absolute logarithmic height.
  double height() const;

 private:
  FieldPtr field_;
  QPoly coords_;
};

// A totally real number field with an explicitly ordered set of real
// embeddings. For the real cyclotomic fields Q(2cos(2pi/n)) the ordering
// follows the increasing sequence a_1 = 1 < a_2 < ... of residues coprime
// to n below n/2, and the field is Galois with automorphisms given by
// r -> D_{a_j}(r). The quartic field attached to the n = 12, k = -2 Thue
// equation is handled with the same interface minus the Galois maps.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Real cyclotomic field Q(2cos(2pi/n)).
  static FieldPtr real_cyclotomic(long n);
  // The quartic field with the fixed root ordering used for n = 12.
  static FieldPtr quartic12();

  long tag() const { return n_; }  // n, or 12 for the quartic
  int degree() const { return d_; }
  const ZPoly& minpoly() const { return minpoly_; }
  bool galois() const { return galois_; }
  const std::vector<long>& conjugate_indices() const { return a_; }
  const AlgebraicReal& root(int j) const { return roots_[j]; }
  BigFloat root_value(int j, mpfr_prec_t prec) const { return roots_[j].at_bits(prec); }

  // Generator image under automorphism j (Galois only).
  const QPoly& sigma(int j) const;

  QPoly reduce(const QPoly& p) const { return poly::mod(p, minpoly_q_); }
  const QPoly& minpoly_q() const { return minpoly_q_; }

 private:
  friend class FieldElem;
  long n_ = 0;
  int d_ = 0;
  bool galois_ = false;
  ZPoly minpoly_;
  QPoly minpoly_q_;
  std::vector<long> a_;
  std::vector<AlgebraicReal> roots_;
  std::vector<QPoly> sigma_;  // generator images, Galois case
};

struct UnitSystem {
  long n = 0;
  int d = 0;
  std::vector<FieldElem> units;  // d-1 fundamental units, catalog order
  // |eps_i^(j)| for unit i (0-based), embedding j (0-based).
  BigFloat conj_abs(int i, int j, mpfr_prec_t prec) const;
};

struct Representative {
  mpz_class abs_norm;  // |Norm(mu)|
  FieldElem mu;
};

struct RepresentativeSet {
  long n = 0;
  mpz_class rhs;                  // |m| this set serves
  std::vector<FieldElem> mus;     // {1} when |m| = 1
};

struct FieldData {
  long n = 0;
  int d = 0;
  FieldPtr field;
  UnitSystem units;
  std::vector<Representative> reps;  // ideal generators for |m| = P; empty if targets are +-1 only
  long p_value = 0;                  // P(n/(n,3)), 0 for the quartic instance
  long prec_digits = 0;

  RepresentativeSet rep_set(const mpz_class& m) const;
  // All mu values relevant to any admissible m (always includes 1).
  std::vector<FieldElem> all_mus() const;
};

// Per-field bundle from the built-in catalog. Supported n: 7, 9, 11, 13,
// 15, 16, 17, 19, 20, 21, 23, 24, 25, 29, and 12 for the special quartic.
FieldData field_data(long n, long prec_digits);

// h'(gamma) = max(h(gamma), |log gamma|/D, 1/D).
double h_prime(double h, double abs_log_gamma, int D);

// Exact power-basis coordinates of the cyclotomic unit
// sin(a*pi/n)/sin(pi/n) in terms of r = 2cos(2pi/n), for prime-power n.
QPoly cyclotomic_unit_coords(long n, long a);

// The checked-in catalog text (also embedded in the library).
const char* unit_catalog_text();

// Heights of the root differences of the quartic field, indexed by
// unordered embedding pairs; used where exact ratio heights are not
// available. Returned map key: i*4+j with i < j.
std::map<int, double> quartic12_difference_heights();

}  // namespace primdiv

#endif
