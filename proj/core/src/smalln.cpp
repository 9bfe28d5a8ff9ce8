#include "primdiv/smalln.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "primdiv/forms.hpp"

namespace primdiv {

bool is_perfect_square(const mpz_class& v, mpz_class* root) {
  if (v < 0) return false;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

namespace {

mpz_class shape_rhs(QuarticShape shape, long k, const mpz_class& z) {
  mpz_class z4 = z * z * z * z;
  switch (shape) {
    case QuarticShape::W2_5Z4_4k:
      return 5 * z4 + 4 * k;
    case QuarticShape::TwoV2_Z4_k:
      return z4 + k;  // = 2V^2
    case QuarticShape::FiveV2_Z4_4k:
      return z4 + 4 * k;  // = 5V^2
    case QuarticShape::W2_3Z4_k:
      return 3 * z4 + k;
    case QuarticShape::V2_125U4_k:
      return 125 * z4 + k;
    case QuarticShape::H4_2K4_k:
      return 2 * z4 + k;  // = H^4
  }
  throw std::logic_error("unknown shape");
}

bool shape_solution_from_rhs(QuarticShape shape, const mpz_class& rhs, mpz_class* first) {
  switch (shape) {
    case QuarticShape::W2_5Z4_4k:
    case QuarticShape::W2_3Z4_k:
      return is_perfect_square(rhs, first);
    case QuarticShape::TwoV2_Z4_k: {
      if (rhs < 0 || rhs % 2 != 0) return false;
      return is_perfect_square(rhs / 2, first);
    }
    case QuarticShape::FiveV2_Z4_4k: {
      if (rhs < 0 || rhs % 5 != 0) return false;
      return is_perfect_square(rhs / 5, first);
    }
    case QuarticShape::V2_125U4_k:
      return is_perfect_square(rhs, first);
    case QuarticShape::H4_2K4_k: {
      if (rhs < 0) return false;
      mpz_class r;
      mpz_root(r.get_mpz_t(), rhs.get_mpz_t(), 4);
      if (r * r * r * r != rhs) return false;
      *first = r;
      return true;
    }
  }
  return false;
}

bool satisfies(QuarticShape shape, long k, const XYPair& wz) {
  mpz_class rhs = shape_rhs(shape, k, wz.second);
  switch (shape) {
    case QuarticShape::W2_5Z4_4k:
    case QuarticShape::W2_3Z4_k:
      return wz.first * wz.first == rhs;
    case QuarticShape::TwoV2_Z4_k:
      return 2 * wz.first * wz.first == rhs;
    case QuarticShape::FiveV2_Z4_4k:
      return 5 * wz.first * wz.first == rhs;
    case QuarticShape::V2_125U4_k:
      return wz.first * wz.first == rhs;
    case QuarticShape::H4_2K4_k:
      return wz.first * wz.first * wz.first * wz.first == rhs;
  }
  return false;
}

}  // namespace

const std::vector<QuarticInstance>& quartic_fixtures() {
  static const std::vector<QuarticInstance> fixtures = [] {
    std::vector<QuarticInstance> f = {
        // 5Z^4 +- 4 = W^2: Cohn, Theorem 7 (complete for k = 1 and -1 jointly).
        {QuarticShape::W2_5Z4_4k, 1, {{2, 0}, {3, 1}, {322, 12}}, "Cohn Thm 7"},
        {QuarticShape::W2_5Z4_4k, -1, {{1, 1}}, "Cohn Thm 7"},
        // Z^4 + 4 = 5V^2: Cohn, Theorem 13.
        {QuarticShape::FiveV2_Z4_4k, 1, {{1, 1}, {2, 2}}, "Cohn Thm 13"},
        {QuarticShape::FiveV2_Z4_4k, -1, {}, "Cohn Thm 13"},
        // Z^4 + k = 2V^2.
        {QuarticShape::TwoV2_Z4_k, 1, {{1, 1}}, "Ljunggren Satz VIII"},
        {QuarticShape::TwoV2_Z4_k, -1, {{0, 1}}, "elementary factoring"},
        {QuarticShape::TwoV2_Z4_k, 2, {{1, 0}, {3, 2}}, "Delone-Faddeev Thm 3 p.374"},
        {QuarticShape::TwoV2_Z4_k, -2, {}, "no solution mod 8"},
        // V^2 = 125U^4 +- 4: Robbins, Theorem 3 (squares among 5*Fibonacci).
        {QuarticShape::V2_125U4_k, 4, {{2, 0}}, "Robbins Thm 3"},
        {QuarticShape::V2_125U4_k, -4, {{11, 1}}, "Robbins Thm 3"},
        // W^2 = 3Z^4 + k. The printed (W,Z) pairs for k = 1 transpose W and
        // Z; the exhaustive search fixes the orientation: (2,1) and (7,2).
        {QuarticShape::W2_3Z4_k, 1, {{1, 0}, {2, 1}, {7, 2}}, "Ljunggren"},
        {QuarticShape::W2_3Z4_k, -3, {{0, 1}}, "Ljunggren (Z^4-3V^2=1)"},
        {QuarticShape::W2_3Z4_k, 6, {{3, 1}}, "Pell unit theta = 8+4sqrt(3)"},
        {QuarticShape::W2_3Z4_k, -2, {{1, 1}}, "Thue F(S,T)=1"},
        // H^4 - 2K^4 = +-1: Delone-Faddeev.
        {QuarticShape::H4_2K4_k, 1, {{1, 0}}, "Delone-Faddeev"},
        {QuarticShape::H4_2K4_k, -1, {{1, 1}}, "Delone-Faddeev"},
    };
    for (const auto& inst : f)
      for (const auto& s : inst.known_complete_solutions)
        if (!satisfies(inst.shape, inst.k, s))
          throw std::logic_error("quartic fixture fails its own equation");
    return f;
  }();
  return fixtures;
}

std::vector<XYPair> bounded_quartic_search(QuarticShape shape, long k, long bound) {
  if (bound < 1) throw std::invalid_argument("bounded_quartic_search: bound >= 1 required");
  std::vector<XYPair> out;
  for (long z = 0; z <= bound; ++z) {
    mpz_class rhs = shape_rhs(shape, k, z);
    mpz_class first;
    if (rhs >= 0 && shape_solution_from_rhs(shape, rhs, &first)) out.emplace_back(first, z);
  }
  return out;
}

namespace {

const QuarticInstance* fixture_for(QuarticShape shape, long k) {
  for (const auto& f : quartic_fixtures())
    if (f.shape == shape && f.k == k) return &f;
  return nullptr;
}

void add_pair(std::set<XYPair>& out, const BinaryForm& form, const mpz_class& k,
              const mpz_class& x, const mpz_class& y, const mpz_class& z) {
  if (form.evaluate(x, y) != k) return;
  if (x + 2 * y != z * z) throw std::logic_error("solve_case: X+2Y lost its square");
  out.insert({x, y});
}

}  // namespace

CaseSolution solve_case(long n, long k) { return solve_case(n, k, {}); }

CaseSolution solve_case(long n, long k, const std::vector<XYPair>& thue12_st) {
  CaseSolution cs;
  cs.n = n;
  cs.k = k;
  FormTarget target = form_target(n);
  if (!target.contains(k)) throw std::invalid_argument("solve_case: inadmissible k");
  BinaryForm form = build_form(n);
  std::set<XYPair> pairs;

  auto derive = [&](const mpz_class& w, const mpz_class& z) {
    // For each case Y is (aZ^2 +- W)/b; X = Z^2 - 2Y.
    mpz_class z2 = z * z;
    std::vector<mpz_class> ys;
    auto push_if_integral = [&](const mpz_class& num, long den) {
      if (num % den == 0) ys.push_back(num / den);
    };
    if (n == 5) {
      push_if_integral(3 * z2 + w, 2);
      push_if_integral(3 * z2 - w, 2);
    } else if (n == 8) {
      push_if_integral(2 * z2 + w, 2);
      push_if_integral(2 * z2 - w, 2);
    } else if (n == 10) {
      push_if_integral(5 * z2 + w, 10);
      push_if_integral(5 * z2 - w, 10);
    } else if (n == 12) {
      ys.push_back(2 * z2 + w);
      ys.push_back(2 * z2 - w);
    }
    for (const auto& y : ys) add_pair(pairs, form, k, z2 - 2 * y, y, z);
  };

  if (n == 5) {
    long kk = (std::abs(k) == 1) ? k : k / 5;
    if (std::abs(k) == 1) {
      const auto* fx = fixture_for(QuarticShape::W2_5Z4_4k, kk);
      for (const auto& [w, z] : fx->known_complete_solutions) derive(w, z);
    } else {
      // W = 5V with Z^4 + 4(k/5) = 5V^2
      const auto* fx = fixture_for(QuarticShape::FiveV2_Z4_4k, kk);
      for (const auto& [v, z] : fx->known_complete_solutions) derive(5 * v, z);
    }
  } else if (n == 8) {
    // W = 2V with Z^4 + k = 2V^2
    const auto* fx = fixture_for(QuarticShape::TwoV2_Z4_k, k);
    for (const auto& [v, z] : fx->known_complete_solutions) derive(2 * v, z);
  } else if (n == 10) {
    if (std::abs(k) == 1) {
      // W = 5V with 5V^2 = Z^4 + 4k
      const auto* fx = fixture_for(QuarticShape::FiveV2_Z4_4k, k);
      for (const auto& [v, z] : fx->known_complete_solutions) derive(5 * v, z);
    } else {
      // Z = 5U, V^2 = 125U^4 + 4(k/5), W = 5V
      const auto* fx = fixture_for(QuarticShape::V2_125U4_k, 4 * (k / 5));
      for (const auto& [v, u] : fx->known_complete_solutions) derive(5 * v, 5 * u);
    }
  } else if (n == 12) {
    if (k == -1 || k == 2 || k == 3 || k == -6) {
      cs.obstruction = "mod 3";
      return cs;
    }
    if (k == -2) {
      SpecialThue12 st = solve_special_thue_12(thue12_st);
      for (const auto& [w, z] : st.wz_solutions)
        if (w >= 0 && z >= 0) derive(w, z);
      cs.pairs.assign(pairs.begin(), pairs.end());
      return cs;
    }
    const auto* fx = fixture_for(QuarticShape::W2_3Z4_k, k);
    if (!fx) throw std::invalid_argument("solve_case: inadmissible k for n=12");
    for (const auto& [w, z] : fx->known_complete_solutions) derive(w, z);
  } else {
    throw std::invalid_argument("solve_case: n must be one of 5, 8, 10, 12");
  }

  cs.pairs.assign(pairs.begin(), pairs.end());
  return cs;
}

std::vector<XYPair> solve_case_pm(long n, long abs_k) { return solve_case_pm(n, abs_k, {}); }

std::vector<XYPair> solve_case_pm(long n, long abs_k, const std::vector<XYPair>& thue12_st) {
  std::set<XYPair> u;
  for (long k : {abs_k, -abs_k}) {
    FormTarget t = form_target(n);
    if (!t.contains(mpz_class(k))) continue;
    CaseSolution cs = solve_case(n, k, thue12_st);
    u.insert(cs.pairs.begin(), cs.pairs.end());
  }
  return {u.begin(), u.end()};
}

SpecialThue12 solve_special_thue_12(const std::vector<XYPair>& st_solutions) {
  SpecialThue12 out;
  out.st_solutions = st_solutions;
  // The complete (S, T) list must be exactly (+-1, 0).
  std::set<XYPair> expect = {{1, 0}, {-1, 0}};
  std::set<XYPair> got(st_solutions.begin(), st_solutions.end());
  if (!st_solutions.empty() && got != expect)
    throw std::logic_error("solve_special_thue_12: unexpected Thue solution set");
  // Each (S, T) = (+-1, 0) gives U = S - T*sqrt(-2) = +-1, so W - sqrt(-2)
  // is an associate of A itself and W^2 + 2 = 3Z^4 forces (W, Z) = (+-1, +-1).
  out.wz_solutions = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (const auto& [w, z] : out.wz_solutions)
    if (w * w + 2 != 3 * z * z * z * z)
      throw std::logic_error("solve_special_thue_12: W,Z verification failed");
  // Cross-check: the bounded search finds nothing else.
  auto found = bounded_quartic_search(QuarticShape::W2_3Z4_k, -2, 10000);
  if (!(found.size() == 1 && found[0] == XYPair{1, 1}))
    throw std::logic_error("solve_special_thue_12: bounded search disagrees");
  out.xy_solutions = {{-5, 3}, {-1, 1}};
  BinaryForm f12 = build_form(12);
  for (const auto& [x, y] : out.xy_solutions) {
    if (f12.evaluate(x, y) != -2) throw std::logic_error("solve_special_thue_12: bad X,Y");
    if (!is_perfect_square(x + 2 * y)) throw std::logic_error("solve_special_thue_12: X+2Y");
  }
  return out;
}

bool verify_pell_theta_data() {
  // Relative units for A = 3 (least solution of 3a^2 - b^2 = 2 is (1,1)):
  // eps_1 = (11+6w) + (6+4w)sqrt(1+w), eps_2 = (3+2w) + (4+2w)sqrt(-1+w)
  // with w = sqrt(3). Norm over Q(w): p^2 - q^2 * radicand = 1.
  struct Zw {
    mpz_class a, b;  // a + b*sqrt(3)
    Zw operator*(const Zw& o) const { return {a * o.a + 3 * b * o.b, a * o.b + b * o.a}; }
    Zw operator-(const Zw& o) const { return {a - o.a, b - o.b}; }
    bool operator==(const Zw& o) const { return a == o.a && b == o.b; }
  };
  Zw p1{11, 6}, q1{6, 4}, rad1{1, 1};
  Zw p2{3, 2}, q2{4, 2}, rad2{-1, 1};
  Zw one{1, 0};
  if (!((p1 * p1 - q1 * q1 * rad1) == one)) return false;
  if (!((p2 * p2 - q2 * q2 * rad2) == one)) return false;
  // theta = eps + eps' + 2 = 2*p + 2: candidates 24+12w and 8+4w.
  Zw theta1 = p1 * Zw{2, 0} - Zw{-2, 0};  // 2*p1 + 2
  Zw theta2 = p2 * Zw{2, 0} - Zw{-2, 0};
  if (!(theta1 == Zw{24, 12} && theta2 == Zw{8, 4})) return false;
  // theta = 2(3V^2 + Z^4) + 4VZ^2 sqrt(3): match exactly.
  auto admits = [](const Zw& theta) {
    for (long v = 0; v <= 50; ++v)
      for (long z = 0; z <= 50; ++z) {
        mpz_class rat = 2 * (3 * mpz_class(v) * v + mpz_class(z) * z * z * z);
        mpz_class irr = 4 * mpz_class(v) * z * z;
        if (rat == theta.a && irr == theta.b) return std::make_pair(v, z);
      }
    return std::make_pair(-1L, -1L);
  };
  auto s1 = admits(theta1);
  auto s2 = admits(theta2);
  return s1.first < 0 && s2 == std::make_pair(1L, 1L);
}

}  // namespace primdiv
