#ifndef PRIMDIV_SEQUENCES_HPP
#define PRIMDIV_SEQUENCES_HPP

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace primdiv {

enum class SequenceKind { Lucas, Lehmer, Degenerate };

// A solution (x, y) of F_n(X,Y) = m seen as the pair (alpha, beta) with
// alpha*beta = y and (alpha+beta)^2 = x + 2y. alpha, beta are the roots of
// X^2 - sqrt(x+2y) X + y.
struct SequenceCandidate {
  mpz_class x, y;
  mpz_class s, t;  // s = x + 2y = (a+b)^2, t = x - 2y = (a-b)^2
  SequenceKind kind = SequenceKind::Degenerate;
  bool valid = false;      // gcd(s, y) == 1
  bool canonical = false;  // normalized representative of its equivalence class
  std::string surd() const;
};

SequenceCandidate reconstruct(const mpz_class& x, const mpz_class& y);

// Lucas classes collapse (alpha,beta) ~ (-alpha,-beta), which fixes (x,y);
// Lehmer classes collapse the fourth-root-of-unity multiples, realized on
// (x,y) as (x,y) ~ (-x,-y); the representative has s > 0.
SequenceCandidate canonicalize(const SequenceCandidate& c);

// u_0..u_count of the Lucas sequence with alpha+beta = P, alpha*beta = Q.
std::vector<mpz_class> lucas_u_sequence(const mpz_class& p, const mpz_class& q, int count);
// u_0..u_count of the Lehmer sequence with (alpha+beta)^2 = R, alpha*beta = Q.
std::vector<mpz_class> lehmer_u_sequence(const mpz_class& r, const mpz_class& q, int count);

struct PrimDivCheck {
  bool criterion_no_primdiv = false;  // Phi_n(alpha,beta) lies in the admissible set
  mpz_class criterion_value;
  bool direct_no_primdiv = false;     // definition-based, via the integer recurrences
  mpz_class u_n;
  bool agree() const { return criterion_no_primdiv == direct_no_primdiv; }
};

// Runs both the criterion and the definition-based computation; the two
// must agree (callers treat disagreement as a fatal diagnostic).
// as_lehmer forces the Lehmer recurrences for a square-s candidate.
PrimDivCheck check_primitive_divisor(const SequenceCandidate& c, long n, bool as_lehmer = false);

struct TableEntry {
  long n = 0;
  mpz_class s, t;
  std::string surd;
  bool operator<(const TableEntry& o) const {
    if (n != o.n) return n < o.n;
    if (s != o.s) return s < o.s;
    return t < o.t;
  }
};

struct FilterAudit {
  long n = 0;
  mpz_class x, y;
  std::string reason;
};

struct SequenceTables {
  std::map<long, std::vector<TableEntry>> lucas;
  std::map<long, std::vector<TableEntry>> lehmer;
  std::vector<FilterAudit> filtered;
  bool cross_checked = false;  // definition-based verification ran
};

// Solves every index 4 < n <= 30 (n != 6) and assembles the Lucas and
// Lehmer tables. check_direct additionally runs the u-sequence
// verification on every emitted entry.
SequenceTables emit_tables(bool check_direct);

// The published tables, as (n -> set of (s,t)).
const std::map<long, std::set<std::pair<long, long>>>& expected_lucas_table();
const std::map<long, std::set<std::pair<long, long>>>& expected_lehmer_table();

}  // namespace primdiv

#endif
