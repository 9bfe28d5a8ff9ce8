#ifndef PRIMDIV_SMALLN_HPP
#define PRIMDIV_SMALLN_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace primdiv {

using XYPair = std::pair<mpz_class, mpz_class>;

// Quartic shapes the degree-two cases reduce to once X + 2Y is forced to
// be a perfect square.
enum class QuarticShape {
  W2_5Z4_4k,     // W^2 = 5Z^4 + 4k        (pairs (W, Z))
  TwoV2_Z4_k,    // 2V^2 = Z^4 + k         (pairs (V, Z))
  FiveV2_Z4_4k,  // 5V^2 = Z^4 + 4k        (pairs (V, Z))
  W2_3Z4_k,      // W^2 = 3Z^4 + k         (pairs (W, Z))
  V2_125U4_k,    // V^2 = 125U^4 + k       (pairs (V, U))
  H4_2K4_k,      // H^4 - 2K^4 = k         (pairs (H, K))
};

struct QuarticInstance {
  QuarticShape shape;
  long k = 0;
  std::vector<XYPair> known_complete_solutions;  // nonnegative pairs
  std::string citation;
};

// The literature-complete solution lists used by the degree-two cases.
// Every listed pair is verified against its equation at load time.
const std::vector<QuarticInstance>& quartic_fixtures();

// Exhaustive search over 0 <= second <= bound with exact square tests.
std::vector<XYPair> bounded_quartic_search(QuarticShape shape, long k, long bound);

struct CaseSolution {
  long n = 0;
  mpz_class k;
  std::vector<XYPair> pairs;        // complete (X, Y) with X + 2Y a square
  std::string obstruction;          // nonempty when ruled out by a congruence
};

// Complete solutions of F_n(X, Y) = k with X + 2Y a perfect square, for
// n in {5, 8, 10, 12}. For n = 12, k = -2 the underlying Thue solutions
// (S, T) must be supplied (see solve_special_thue_12).
CaseSolution solve_case(long n, long k);
CaseSolution solve_case(long n, long k, const std::vector<XYPair>& thue12_st);

// Union over both signs of k.
std::vector<XYPair> solve_case_pm(long n, long abs_k);
std::vector<XYPair> solve_case_pm(long n, long abs_k, const std::vector<XYPair>& thue12_st);

struct SpecialThue12 {
  std::vector<XYPair> st_solutions;  // (S, T)
  std::vector<XYPair> wz_solutions;  // (W, Z)
  std::vector<XYPair> xy_solutions;  // (X, Y)
};

// Validates the (S, T) solution list of S^4-4S^3T-12S^2T^2+8ST^3+4T^4 = 1
// and maps it back to F_12(X, Y) = -2 with X + 2Y square.
SpecialThue12 solve_special_thue_12(const std::vector<XYPair>& st_solutions);

// Exact check of the two Pell-theta candidates used for n = 12, k = 6:
// theta = 24 + 12*sqrt(3) admits no (V, Z); theta = 8 + 4*sqrt(3) gives
// (V, Z) = (1, 1). Also verifies the relative units behind them.
bool verify_pell_theta_data();

// Exact integer square root test.
bool is_perfect_square(const mpz_class& v, mpz_class* root = nullptr);

}  // namespace primdiv

#endif
