// Regenerates data/unit_catalog.txt and the embedded copy in
// core/src/catalog_data.cpp from the unit constructions:
//   - prime-power n: cyclotomic units sin(a pi/n)/sin(pi/n) expressed on
//     the power basis of 2cos(2pi/n) by exact arithmetic in Q(zeta_n);
//   - n = 15, 20, 21, 24: the published polynomial units;
//   - the quartic field attached to n = 12: its three units over 4.
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "primdiv/bigfloat.hpp"
#include "primdiv/numfield.hpp"
#include "primdiv/zpoly.hpp"

using namespace primdiv;

namespace {

std::string q_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string coords_line(const QPoly& c, int d) {
  std::ostringstream os;
  for (int i = 0; i < d; ++i) {
    mpq_class v = i < static_cast<int>(c.size()) ? c[i] : mpq_class(0);
    os << " " << q_str(v);
  }
  return os.str();
}

void check_unit_value(long n, long a, const QPoly& coords) {
  mpfr_prec_t prec = BigFloat::digits_to_bits(80);
  BigFloat r = BigFloat::two_cos_2pi(1, n, prec);
  BigFloat got = poly::eval(coords, r);
  BigFloat want = BigFloat::sin_pi_frac(a, n, prec) / BigFloat::sin_pi_frac(1, n, prec);
  if (!((got - want).abs() < BigFloat(1e-60, 64)))
    throw std::runtime_error("unit value mismatch for n=" + std::to_string(n) +
                             " a=" + std::to_string(a));
}

}  // namespace

int main(int argc, char** argv) {
  std::string root = argc > 1 ? argv[1] : ".";
  std::ostringstream cat;
  cat << "# Fundamental-unit and ideal-generator catalog for the real\n";
  cat << "# cyclotomic fields Q(2cos(2pi/n)) and the quartic field used by\n";
  cat << "# the n = 12 Thue equation. Coordinates are on the power basis of\n";
  cat << "# the field generator, constant term first.\n";
  cat << "# unit <n> <i> <c_0> ... <c_{d-1}>   |   mu <n> <|norm|> <c_0> ...\n";

  const long prime_powers[] = {7, 9, 11, 13, 16, 17, 19, 23, 25, 29};
  for (long n : prime_powers) {
    auto as = poly::coprime_residues_below_half(n);
    int d = static_cast<int>(as.size());
    cat << "field " << n << " " << d << " prime_power\n";
    for (int i = 1; i < d; ++i) {
      QPoly coords = cyclotomic_unit_coords(n, as[i]);
      check_unit_value(n, as[i], coords);
      cat << "unit " << n << " " << i << coords_line(coords, d) << "\n";
    }
    long p = poly::largest_prime_factor(n / std::gcd(n, 3L));
    if (n == 16 || n == 20) {
      cat << "mu " << n << " " << p << coords_line({0, 1}, d) << "\n";  // r
    } else {
      cat << "mu " << n << " " << p << coords_line({2, -1}, d) << "\n";  // 2 - r
    }
  }

  struct Composite {
    long n;
    std::vector<QPoly> units;
    QPoly mu;
  };
  std::vector<Composite> comps = {
      {15, {{0, 1}, {-1, 1}, {-3, 0, 1}}, {1, 1}},
      {20, {{-1, 1}, {-2, 1}, {-2, 0, 1}}, {0, 1}},
      {21, {{0, 1}, {-1, 1}, {-1, 1, 1}, {-2, 0, 1}, {-3, 0, 1}}, {1, 1}},
      {24, {{0, 1}, {-1, 2}, {-1, -1, 1}}, {1, 1}},
  };
  for (const auto& c : comps) {
    int d = static_cast<int>(poly::euler_phi(c.n)) / 2;
    cat << "field " << c.n << " " << d << " composite\n";
    for (size_t i = 0; i < c.units.size(); ++i)
      cat << "unit " << c.n << " " << i + 1 << coords_line(c.units[i], d) << "\n";
    long p = poly::largest_prime_factor(c.n / std::gcd(c.n, 3L));
    cat << "mu " << c.n << " " << p << coords_line(c.mu, d) << "\n";
  }

  // Quartic field for n = 12, k = -2: units over denominator 4.
  cat << "field 12 4 quartic12\n";
  cat << "unit 12 1 3 -5/2 -1 1/4\n";
  cat << "unit 12 2 13/2 -5 -9/4 1/2\n";
  cat << "unit 12 3 13/2 -6 -9/4 1/2\n";

  std::string text = cat.str();
  {
    std::ofstream out(root + "/data/unit_catalog.txt");
    out << text;
  }
  {
    std::ofstream out(root + "/core/src/catalog_data.cpp");
    out << "// Embedded copy of data/unit_catalog.txt. Regenerated by tools/gen_catalog;\n";
    out << "// do not edit by hand.\n";
    out << "#include \"primdiv/numfield.hpp\"\n\n";
    out << "namespace primdiv {\n\n";
    out << "const char* unit_catalog_text() {\n";
    out << "  return R\"CATALOG(" << text << ")CATALOG\";\n";
    out << "}\n\n";
    out << "}  // namespace primdiv\n";
  }
  std::cout << "catalog written (" << text.size() << " bytes)\n";
  return 0;
}
