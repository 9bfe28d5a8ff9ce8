#include "primdiv/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace primdiv {

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(FieldPtr field, QPoly coords) : field_(std::move(field)) {
  coords_ = field_->reduce(std::move(coords));
}

FieldElem FieldElem::from_rational(FieldPtr field, const mpq_class& c) {
  return FieldElem(std::move(field), QPoly{c});
}

FieldElem FieldElem::generator(FieldPtr field) {
  return FieldElem(std::move(field), QPoly{mpq_class(0), mpq_class(1)});
}

bool FieldElem::is_rational() const { return poly::degree(coords_) <= 0; }

mpq_class FieldElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return coords_.empty() ? mpq_class(0) : coords_[0];
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return FieldElem(field_, poly::add(coords_, o.coords_));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  return FieldElem(field_, poly::sub(coords_, o.coords_));
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  return FieldElem(field_, poly::mul(coords_, o.coords_));
}
FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }
FieldElem FieldElem::operator-() const { return FieldElem(field_, poly::scale(coords_, -1)); }

bool FieldElem::operator==(const FieldElem& o) const {
  return poly::degree(poly::sub(coords_, o.coords_)) < 0;
}

FieldElem FieldElem::inverse() const {
  return FieldElem(field_, poly::inv_mod(coords_, field_->minpoly_q()));
}

FieldElem FieldElem::pow(long e) const {
  FieldElem base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  FieldElem r = from_rational(field_, 1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

BigFloat FieldElem::embed(int j, mpfr_prec_t prec) const {
  return poly::eval(coords_, field_->root_value(j, prec));
}

FieldElem FieldElem::conjugate(int j) const {
  const QPoly& s = field_->sigma(j);
  // Horner: coords evaluated at sigma_j(generator), all mod minpoly.
  QPoly acc;
  for (int i = poly::degree(coords_); i >= 0; --i) {
    acc = field_->reduce(poly::mul(acc, s));
    acc = poly::add(acc, QPoly{coords_[i]});
  }
  return FieldElem(field_, acc);
}

std::pair<QPoly, mpz_class> FieldElem::minimal_polynomial() const {
  int d = field_->degree();
  // Powers of the element as coordinate vectors; first linear dependency
  // yields the monic minimal polynomial.
  std::vector<std::vector<mpq_class>> pows;
  FieldElem p = from_rational(field_, 1);
  for (int k = 0; k <= d; ++k) {
    std::vector<mpq_class> v(d);
    for (int i = 0; i <= poly::degree(p.coords()); ++i) v[i] = p.coords()[i];
    pows.push_back(std::move(v));
    if (k < d) p = p * *this;
  }
  auto dep = linalg::first_dependency(pows);
  if (!dep) throw std::logic_error("minimal polynomial: no dependency found");
  auto [deg, combo] = *dep;
  QPoly m(deg + 1);
  m[deg] = 1;
  for (size_t i = 0; i < combo.size(); ++i) m[i] = -combo[i];
  auto [prim, lc] = poly::primitive_integer(m);
  (void)prim;
  return {m, lc};
}

mpq_class FieldElem::norm() const {
  auto [m, lc] = minimal_polynomial();
  (void)lc;
  int e = poly::degree(m);
  int d = field_->degree();
  // Product of the roots of the monic minimal polynomial is (-1)^e m[0];
  // the full norm repeats it d/e times.
  mpq_class base = (e % 2 == 0) ? m[0] : mpq_class(-m[0]);
  mpq_class out = 1;
  for (int i = 0; i < d / e; ++i) out *= base;
  return out;
}

double FieldElem::height() const {
  auto [m, lc] = minimal_polynomial();
  int e = poly::degree(m);
  int d = field_->degree();
  mpfr_prec_t prec = BigFloat::digits_to_bits(120);
  double sum = 0.0;
  for (int j = 0; j < d; ++j) {
    BigFloat v = embed(j, prec).abs();
    double lg = v.log10_abs() * std::log(10.0);
    if (lg > 0) sum += lg;
  }
  double lclog = std::log(mpz_get_d(lc.get_mpz_t()));
  return (sum + (static_cast<double>(d) / e) * lclog) / d;
}

// -------------------------------------------------------------- NumberField

const QPoly& NumberField::sigma(int j) const {
  if (!galois_) throw std::logic_error("sigma: field is not Galois");
  return sigma_[j];
}

FieldPtr NumberField::real_cyclotomic(long n) {
  auto f = std::make_shared<NumberField>();
  f->n_ = n;
  f->minpoly_ = poly::real_cyclotomic_minpoly(n);
  f->minpoly_q_ = poly::to_q(f->minpoly_);
  f->d_ = poly::degree(f->minpoly_);
  f->galois_ = true;
  f->a_ = poly::coprime_residues_below_half(n);
  for (long a : f->a_) f->roots_.push_back(AlgebraicReal::two_cos_2pi(a, n));
  for (long a : f->a_) {
    ZPoly dk = poly::dickson(a);
    f->sigma_.push_back(f->reduce(poly::to_q(dk)));
  }
  return f;
}

FieldPtr NumberField::quartic12() {
  auto f = std::make_shared<NumberField>();
  f->n_ = 12;
  f->minpoly_ = ZPoly{4, 8, -12, -4, 1};  // x^4 - 4x^3 - 12x^2 + 8x + 4
  f->minpoly_q_ = poly::to_q(f->minpoly_);
  f->d_ = 4;
  f->galois_ = false;
  f->a_ = {1, 2, 3, 4};
  // Roots in the fixed order 1+s3+sqrt(6+2*s3), 1+s3-sqrt(6+2*s3),
  // 1-s3+sqrt(6-2*s3), 1-s3-sqrt(6-2*s3).
  for (int idx = 1; idx <= 4; ++idx) {
    f->roots_.push_back(AlgebraicReal(
        "quartic12 root " + std::to_string(idx), [idx](mpfr_prec_t prec) {
          mpfr_prec_t work = prec + 32;
          BigFloat s3 = BigFloat(3.0, work).sqrt();
          BigFloat six(6.0, work);
          BigFloat two(2.0, work);
          BigFloat one(1.0, work);
          bool plus_outer = idx <= 2;
          bool plus_inner = (idx == 1 || idx == 3);
          BigFloat inner = plus_outer ? (six + two * s3) : (six - two * s3);
          BigFloat rad = inner.sqrt();
          BigFloat base = plus_outer ? (one + s3) : (one - s3);
          BigFloat v = plus_inner ? (base + rad) : (base - rad);
          BigFloat out(prec);
          mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
          return out;
        }));
  }
  return f;
}

// ------------------------------------------------------------ unit catalog

namespace {

struct CatalogField {
  long n = 0;
  int d = 0;
  std::string kind;
  std::vector<std::pair<int, QPoly>> units;  // (index, coords)
  std::vector<std::pair<long, QPoly>> mus;   // (|norm|, coords)
};

mpq_class parse_rational(const std::string& tok) {
  mpq_class q(tok);
  q.canonicalize();
  return q;
}

std::map<long, CatalogField> parse_catalog(const std::string& text) {
  std::map<long, CatalogField> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "field") {
      CatalogField f;
      ls >> f.n >> f.d >> f.kind;
      out[f.n] = f;
    } else if (tag == "unit" || tag == "mu") {
      long n;
      ls >> n;
      auto it = out.find(n);
      if (it == out.end()) throw std::runtime_error("catalog: unit before field line");
      long key;
      ls >> key;
      QPoly coords;
      std::string tok;
      while (ls >> tok) coords.push_back(parse_rational(tok));
      if (tag == "unit")
        it->second.units.emplace_back(static_cast<int>(key), coords);
      else
        it->second.mus.emplace_back(key, coords);
    }
  }
  return out;
}

const std::map<long, CatalogField>& catalog() {
  static const std::map<long, CatalogField> c = parse_catalog(unit_catalog_text());
  return c;
}

}  // namespace

BigFloat UnitSystem::conj_abs(int i, int j, mpfr_prec_t prec) const {
  return units[i].embed(j, prec).abs();
}

RepresentativeSet FieldData::rep_set(const mpz_class& m) const {
  RepresentativeSet rs;
  rs.n = n;
  rs.rhs = abs(m);
  if (rs.rhs == 1) {
    rs.mus = {FieldElem::from_rational(field, 1)};
    return rs;
  }
  for (const auto& r : reps)
    if (r.abs_norm == rs.rhs) rs.mus.push_back(r.mu);
  if (rs.mus.empty()) throw std::invalid_argument("rep_set: no representatives for this m");
  return rs;
}

std::vector<FieldElem> FieldData::all_mus() const {
  std::vector<FieldElem> v = {FieldElem::from_rational(field, 1)};
  for (const auto& r : reps) v.push_back(r.mu);
  return v;
}

FieldData field_data(long n, long prec_digits) {
  if (prec_digits < 50) throw std::invalid_argument("field_data: precision floor is 50 digits");
  auto it = catalog().find(n);
  if (it == catalog().end()) throw std::invalid_argument("field_data: unsupported n");
  const CatalogField& cf = it->second;

  FieldData fd;
  fd.n = n;
  fd.prec_digits = prec_digits;
  fd.field = (cf.kind == "quartic12") ? NumberField::quartic12() : NumberField::real_cyclotomic(n);
  fd.d = fd.field->degree();
  if (fd.d != cf.d) throw std::logic_error("field_data: catalog degree mismatch");

  fd.units.n = n;
  fd.units.d = fd.d;
  std::vector<std::pair<int, QPoly>> us = cf.units;
  std::sort(us.begin(), us.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [idx, coords] : us) {
    (void)idx;
    fd.units.units.emplace_back(fd.field, coords);
  }
  if (static_cast<int>(fd.units.units.size()) != fd.d - 1)
    throw std::logic_error("field_data: expected d-1 fundamental units");

  for (auto& [nrm, coords] : cf.mus) {
    Representative r;
    r.abs_norm = nrm;
    r.mu = FieldElem(fd.field, coords);
    fd.reps.push_back(r);
  }
  if (cf.kind != "quartic12") {
    fd.p_value = poly::largest_prime_factor(n / std::gcd(n, 3L));
  }

  // Unit norms must be +-1 and representative norms +-P, exactly.
  for (const auto& u : fd.units.units) {
    mpq_class nm = u.norm();
    if (!(nm == 1 || nm == -1)) throw std::logic_error("field_data: unit norm is not a unit");
  }
  for (const auto& r : fd.reps) {
    mpq_class nm = r.mu.norm();
    if (!(abs(nm) == r.abs_norm)) throw std::logic_error("field_data: representative norm mismatch");
  }
  return fd;
}

double h_prime(double h, double abs_log_gamma, int D) {
  return std::max({h, std::abs(abs_log_gamma) / D, 1.0 / D});
}

// ------------------------------------------------- cyclotomic unit coords

QPoly cyclotomic_unit_coords(long n, long a) {
  ZPoly phi_z = poly::cyclotomic(n);
  QPoly phi = poly::to_q(phi_z);
  long deg = poly::degree(phi);
  auto zeta_pow = [&](long e) {
    e %= n;
    if (e < 0) e += n;
    QPoly p(e + 1);
    p[e] = 1;
    return poly::mod(p, phi);
  };
  // exponent with zeta^(2e) = zeta^(1-a)
  long e;
  if ((1 - a) % 2 == 0) {
    e = (1 - a) / 2;
  } else {
    if (n % 2 == 0) throw std::invalid_argument("cyclotomic_unit_coords: parity clash");
    e = ((1 - a) % n + n) % n;
    e = (e * ((n + 1) / 2)) % n;
  }
  QPoly one = {mpq_class(1)};
  QPoly num = poly::sub(one, zeta_pow(a));
  QPoly den = poly::sub(one, zeta_pow(1));
  QPoly u = poly::mod(poly::mul(poly::mul(zeta_pow(e), num), poly::inv_mod(den, phi)), phi);

  // Express u in the power basis of w = zeta + zeta^(n-1).
  long d = poly::euler_phi(n) / 2;
  QPoly w = poly::mod(poly::add(zeta_pow(1), zeta_pow(n - 1)), phi);
  std::vector<std::vector<mpq_class>> cols;
  QPoly wp = one;
  for (long k = 0; k < d; ++k) {
    std::vector<mpq_class> col(deg, 0);
    for (int i = 0; i <= poly::degree(wp); ++i) col[i] = wp[i];
    cols.push_back(std::move(col));
    wp = poly::mod(poly::mul(wp, w), phi);
  }
  std::vector<std::vector<mpq_class>> mat(deg, std::vector<mpq_class>(d));
  for (long r = 0; r < deg; ++r)
    for (long c = 0; c < d; ++c) mat[r][c] = cols[c][r];
  std::vector<mpq_class> rhs(deg, 0);
  for (int i = 0; i <= poly::degree(u); ++i) rhs[i] = u[i];
  auto sol = linalg::solve_rect(std::move(mat), std::move(rhs));
  if (!sol) throw std::logic_error("cyclotomic_unit_coords: unit is not in the real subfield");
  QPoly coords = *sol;
  poly::trim(coords);
  // The half-exponent is only defined modulo n, which can flip the global
  // sign; normalize to the positive value sin(a pi/n)/sin(pi/n).
  mpfr_prec_t chk = BigFloat::digits_to_bits(60);
  if (poly::eval(coords, BigFloat::two_cos_2pi(1, n, chk)).sign() < 0)
    coords = poly::scale(coords, -1);
  return coords;
}

// ---------------------------------------- quartic difference-poly heights

std::map<int, double> quartic12_difference_heights() {
  ZPoly g = {4, 8, -12, -4, 1};
  // D(x) = Res_z(g(z), g(z+x)) / x^4, degree 12, monic; computed by
  // interpolation through integer points.
  std::vector<mpq_class> xs, ys;
  for (long x0 = -9; xs.size() < 17; ++x0) {
    // g(z + x0)
    ZPoly shifted = {0};
    ZPoly zx = {x0, 1};
    ZPoly p = {1};
    shifted.assign(5, 0);
    for (int i = 0; i <= 4; ++i) {
      ZPoly term = p;
      for (auto& c : term) c *= g[i];
      shifted = poly::add(shifted, term);
      p = poly::mul(p, zx);
    }
    mpz_class r = poly::resultant(g, shifted);
    xs.emplace_back(x0);
    ys.emplace_back(r);
  }
  QPoly res_q = poly::interpolate(xs, ys);
  auto [res_z, lc] = poly::primitive_integer(res_q);
  (void)lc;
  // divide by x^4
  if (poly::degree(res_z) != 16) throw std::logic_error("difference resultant degree != 16");
  for (int i = 0; i < 4; ++i)
    if (res_z[i] != 0) throw std::logic_error("difference resultant not divisible by x^4");
  ZPoly diff_poly(res_z.begin() + 4, res_z.end());

  // Numeric roots: all ordered differences of the four field roots.
  FieldPtr f = NumberField::quartic12();
  mpfr_prec_t prec = BigFloat::digits_to_bits(220);
  std::vector<BigFloat> roots;
  std::vector<std::pair<int, int>> labels;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        roots.push_back(f->root_value(i, prec) - f->root_value(j, prec));
        labels.emplace_back(i, j);
      }

  // Certified minimal polynomial by subset search: the monic product over
  // a subset of the numeric roots must round to integers and divide
  // diff_poly exactly. Smallest passing subset containing the target is
  // the minimal polynomial.
  int m = static_cast<int>(roots.size());
  auto try_subset = [&](const std::vector<int>& idx) -> double {
    std::vector<BigFloat> coef(idx.size() + 1, BigFloat(0.0, prec));
    coef[0] = BigFloat(1.0, prec);
    for (int id : idx)
      for (int k = static_cast<int>(idx.size()); k >= 1; --k)
        coef[k] = coef[k] - roots[id] * coef[k - 1];
    ZPoly cand(idx.size() + 1);
    for (size_t k = 0; k < coef.size(); ++k) {
      mpz_class r = coef[k].round_ties_away();
      if (!((coef[k] - BigFloat(r, prec)).abs() < BigFloat(1e-40, 64))) return -1.0;
      cand[idx.size() - k] = r;
    }
    try {
      poly::divexact(diff_poly, cand);
    } catch (const std::exception&) {
      return -1.0;
    }
    double sum = 0.0;
    for (int id : idx) {
      double lg = roots[id].abs().log10_abs() * std::log(10.0);
      if (lg > 0) sum += lg;
    }
    return sum / static_cast<double>(idx.size());
  };

  auto min_h_for = [&](int target) {
    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1u << m); ++mask)
      if (mask & (1u << target)) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (unsigned mask : masks) {
      std::vector<int> idx;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      double h = try_subset(idx);
      if (h >= 0) return h;
    }
    throw std::logic_error("no certified factor found for root difference");
  };

  std::map<int, double> out;
  for (size_t t = 0; t < labels.size(); ++t) {
    auto [i, j] = labels[t];
    if (i < j) out[i * 4 + j] = min_h_for(static_cast<int>(t));
  }
  return out;
}

}  // namespace primdiv
