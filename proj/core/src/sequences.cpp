#include "primdiv/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "primdiv/forms.hpp"
#include "primdiv/smalln.hpp"
#include "primdiv/thue.hpp"

namespace primdiv {

SequenceCandidate reconstruct(const mpz_class& x, const mpz_class& y) {
  SequenceCandidate c;
  c.x = x;
  c.y = y;
  c.s = x + 2 * y;
  c.t = x - 2 * y;
  c.valid = gcd(c.s, y) == 1 && c.s != 0;
  if (y == 0 || x == 0 || x == y || x == -y || x == 2 * y || x == -2 * y) {
    c.kind = SequenceKind::Degenerate;
  } else if (is_perfect_square(c.s)) {
    c.kind = SequenceKind::Lucas;
  } else {
    c.kind = SequenceKind::Lehmer;
  }
  return c;
}

SequenceCandidate canonicalize(const SequenceCandidate& c) {
  if (c.kind == SequenceKind::Degenerate)
    throw std::invalid_argument("canonicalize: degenerate candidate");
  SequenceCandidate r = c;
  if (r.kind == SequenceKind::Lehmer && r.s < 0) r = reconstruct(-c.x, -c.y);
  r.canonical = true;
  return r;
}

std::string SequenceCandidate::surd() const {
  mpz_class ss = s, tt = t;
  bool halves = true;
  if (ss % 4 == 0 && tt % 4 == 0) {
    ss /= 4;
    tt /= 4;
    halves = false;
  }
  auto root_str = [](const mpz_class& v) {
    mpz_class r;
    if (v >= 0 && is_perfect_square(v, &r)) return r.get_str();
    return "\xE2\x88\x9A" + (v < 0 ? "-" + mpz_class(-v).get_str() : v.get_str());
  };
  std::string body = root_str(ss) + "\xC2\xB1" + root_str(tt);
  if (!halves) return body;
  return "(" + body + ")/2";
}

std::vector<mpz_class> lucas_u_sequence(const mpz_class& p, const mpz_class& q, int count) {
  std::vector<mpz_class> u(count + 1);
  if (count >= 1) u[1] = 1;
  for (int k = 2; k <= count; ++k) u[k] = p * u[k - 1] - q * u[k - 2];
  return u;
}

std::vector<mpz_class> lehmer_u_sequence(const mpz_class& r, const mpz_class& q, int count) {
  std::vector<mpz_class> u(count + 1);
  if (count >= 1) u[1] = 1;
  for (int k = 2; k <= count; ++k)
    u[k] = (k % 2 == 1) ? mpz_class(r * u[k - 1] - q * u[k - 2]) : mpz_class(u[k - 1] - q * u[k - 2]);
  return u;
}

PrimDivCheck check_primitive_divisor(const SequenceCandidate& c, long n, bool as_lehmer) {
  if (c.kind == SequenceKind::Degenerate || !c.valid)
    throw std::invalid_argument("check_primitive_divisor: degenerate or invalid candidate");
  PrimDivCheck out;

  BinaryForm f = build_form(n);
  FormTarget targets = form_target(n);
  out.criterion_value = f.evaluate(c.x, c.y);
  out.criterion_no_primdiv = targets.contains(out.criterion_value);

  bool lehmer = as_lehmer || c.kind == SequenceKind::Lehmer;
  std::vector<mpz_class> u;
  mpz_class base;
  if (!lehmer) {
    mpz_class p;
    if (!is_perfect_square(c.s, &p)) throw std::logic_error("Lucas candidate without square s");
    u = lucas_u_sequence(p, c.y, static_cast<int>(n));
    base = c.t;  // (alpha-beta)^2
    for (long k = 2; k < n; ++k) base *= u[k];
  } else {
    u = lehmer_u_sequence(c.s, c.y, static_cast<int>(n));
    base = c.s * c.t;  // (alpha^2-beta^2)^2
    for (long k = 3; k < n; ++k) base *= u[k];
  }
  out.u_n = u[n];
  if (out.u_n == 0 || base == 0)
    throw std::logic_error("check_primitive_divisor: vanishing term for non-degenerate pair");
  mpz_class rest = abs(out.u_n);
  mpz_class b = abs(base);
  while (true) {
    mpz_class g = gcd(rest, b);
    if (g == 1) break;
    while (rest % g == 0) rest /= g;
  }
  out.direct_no_primdiv = (rest == 1);
  return out;
}

namespace {

void insert_entry(std::map<long, std::vector<TableEntry>>& table, long n,
                  const SequenceCandidate& c) {
  TableEntry e;
  e.n = n;
  e.s = c.s;
  e.t = c.t;
  e.surd = c.surd();
  auto& row = table[n];
  for (const auto& ex : row)
    if (ex.s == e.s && ex.t == e.t) return;
  row.push_back(e);
}

}  // namespace

SequenceTables emit_tables(bool check_direct) {
  SequenceTables tables;
  tables.cross_checked = check_direct;
  for (long n = 5; n <= 30; ++n) {
    if (n == 6) continue;
    IndexSolutions sols = solve_index(n);
    bool lucas_range = true;                                  // n > 4, n != 6
    bool lehmer_range = n > 6 && n != 8 && n != 10 && n != 12;
    for (const auto& [m, list] : sols.by_m) {
      (void)m;
      for (const auto& [x, y] : list) {
        SequenceCandidate c = reconstruct(x, y);
        if (c.kind == SequenceKind::Degenerate) {
          std::string why = (y == 0) ? "alpha*beta = 0"
                                     : (c.s == 0 ? "alpha + beta = 0" : "alpha/beta root of unity");
          tables.filtered.push_back({n, x, y, why});
          continue;
        }
        if (!c.valid) {
          tables.filtered.push_back({n, x, y, "gcd((alpha+beta)^2, alpha*beta) > 1"});
          continue;
        }
        if (c.kind == SequenceKind::Lucas && lucas_range) {
          SequenceCandidate canon = canonicalize(c);
          if (check_direct) {
            PrimDivCheck pc = check_primitive_divisor(canon, n, false);
            if (!pc.agree() || pc.criterion_no_primdiv != true)
              throw std::logic_error("emit_tables: criterion/direct disagreement (Lucas)");
          }
          insert_entry(tables.lucas, n, canon);
        }
        if (lehmer_range) {
          SequenceCandidate canon = c;
          canon.kind = SequenceKind::Lehmer;  // treat square-s pairs as Lehmer pairs too
          canon = canonicalize(canon);
          if (check_direct) {
            PrimDivCheck pc = check_primitive_divisor(canon, n, true);
            if (!pc.agree() || pc.criterion_no_primdiv != true)
              throw std::logic_error("emit_tables: criterion/direct disagreement (Lehmer)");
          }
          insert_entry(tables.lehmer, n, canon);
        }
      }
    }
  }
  for (auto& [n, row] : tables.lucas) {
    (void)n;
    std::sort(row.begin(), row.end());
  }
  for (auto& [n, row] : tables.lehmer) {
    (void)n;
    std::sort(row.begin(), row.end());
  }
  return tables;
}

const std::map<long, std::set<std::pair<long, long>>>& expected_lucas_table() {
  static const std::map<long, std::set<std::pair<long, long>>> t = {
      {5, {{1, 5}, {1, -7}, {4, -40}, {1, -11}, {1, -15}, {144, -76}, {144, -1364}}},
      {7, {{1, -7}, {1, -19}}},
      {8, {{4, -24}, {1, -7}}},
      {10, {{4, -8}, {25, -3}, {25, -47}}},
      {12, {{1, 5}, {1, -7}, {1, -11}, {4, -56}, {1, -15}, {1, -19}}},
      {13, {{1, -7}}},
      {18, {{1, -7}}},
      {30, {{1, -7}}},
  };
  return t;
}

const std::map<long, std::set<std::pair<long, long>>>& expected_lehmer_table() {
  static const std::map<long, std::set<std::pair<long, long>>> t = {
      {7, {{1, -7}, {1, -19}, {3, -5}, {5, -7}, {13, -3}, {14, -22}}},
      {9, {{5, -3}, {7, -1}, {7, -5}}},
      {13, {{1, -7}}},
      {14, {{3, -13}, {5, -3}, {7, -1}, {7, -5}, {19, -1}, {22, -14}}},
      {15, {{7, -1}, {10, -2}}},
      {18, {{1, -7}, {3, -5}, {5, -7}}},
      {24, {{3, -5}, {5, -3}}},
      {26, {{7, -1}}},
      {30, {{1, -7}, {2, -10}}},
  };
  return t;
}

}  // namespace primdiv
