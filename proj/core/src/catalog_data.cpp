// Embedded copy of data/unit_catalog.txt. Regenerated by tools/gen_catalog;
// do not edit by hand.
#include "primdiv/numfield.hpp"

namespace primdiv {

const char* unit_catalog_text() {
  return R"CATALOG(# Fundamental-unit and ideal-generator catalog for the real
# cyclotomic fields Q(2cos(2pi/n)) and the quartic field used by
# the n = 12 Thue equation. Coordinates are on the power basis of
# the field generator, constant term first.
# unit <n> <i> <c_0> ... <c_{d-1}>   |   mu <n> <|norm|> <c_0> ...
field 7 3 prime_power
unit 7 1 -1 1 1
unit 7 2 1 1 0
mu 7 7 2 -1 0
field 9 3 prime_power
unit 9 1 -2 1 1
unit 9 2 -1 1 1
mu 9 3 2 -1 0
field 11 5 prime_power
unit 11 1 1 -2 -3 1 1
unit 11 2 1 1 0 0 0
unit 11 3 -1 -2 1 1 0
unit 11 4 -1 1 1 0 0
mu 11 11 2 -1 0 0 0
field 13 6 prime_power
unit 13 1 1 3 -3 -4 1 1
unit 13 2 1 1 0 0 0 0
unit 13 3 1 -2 -3 1 1 0
unit 13 4 -1 1 1 0 0 0
unit 13 5 -1 -2 1 1 0 0
mu 13 13 2 -1 0 0 0 0
field 16 4 prime_power
unit 16 1 1 1 0 0
unit 16 2 -1 1 1 0
unit 16 3 -1 -2 1 1
mu 16 2 0 1 0 0
field 17 8 prime_power
unit 17 1 -1 -4 6 10 -5 -6 1 1
unit 17 2 1 1 0 0 0 0 0 0
unit 17 3 -1 3 6 -4 -5 1 1 0
unit 17 4 -1 1 1 0 0 0 0 0
unit 17 5 1 3 -3 -4 1 1 0 0
unit 17 6 -1 -2 1 1 0 0 0 0
unit 17 7 1 -2 -3 1 1 0 0 0
mu 17 17 2 -1 0 0 0 0 0 0
field 19 9 prime_power
unit 19 1 1 -4 -10 10 15 -6 -7 1 1
unit 19 2 1 1 0 0 0 0 0 0 0
unit 19 3 -1 -4 6 10 -5 -6 1 1 0
unit 19 4 -1 1 1 0 0 0 0 0 0
unit 19 5 -1 3 6 -4 -5 1 1 0 0
unit 19 6 -1 -2 1 1 0 0 0 0 0
unit 19 7 1 3 -3 -4 1 1 0 0 0
unit 19 8 1 -2 -3 1 1 0 0 0 0
mu 19 19 2 -1 0 0 0 0 0 0 0
field 23 11 prime_power
unit 23 1 -1 5 15 -20 -35 21 28 -8 -9 1 1
unit 23 2 1 1 0 0 0 0 0 0 0 0 0
unit 23 3 1 5 -10 -20 15 21 -7 -8 1 1 0
unit 23 4 -1 1 1 0 0 0 0 0 0 0 0
unit 23 5 1 -4 -10 10 15 -6 -7 1 1 0 0
unit 23 6 -1 -2 1 1 0 0 0 0 0 0 0
unit 23 7 -1 -4 6 10 -5 -6 1 1 0 0 0
unit 23 8 1 -2 -3 1 1 0 0 0 0 0 0
unit 23 9 -1 3 6 -4 -5 1 1 0 0 0 0
unit 23 10 1 3 -3 -4 1 1 0 0 0 0 0
mu 23 23 2 -1 0 0 0 0 0 0 0 0 0
field 25 10 prime_power
unit 25 1 0 -10 -15 15 20 -7 -8 1 1 0
unit 25 2 1 1 0 0 0 0 0 0 0 0
unit 25 3 0 0 -10 -15 15 20 -7 -8 1 1
unit 25 4 1 5 -10 -20 15 21 -7 -8 1 1
unit 25 5 -1 -2 1 1 0 0 0 0 0 0
unit 25 6 1 -4 -10 10 15 -6 -7 1 1 0
unit 25 7 1 -2 -3 1 1 0 0 0 0 0
unit 25 8 1 3 -3 -4 1 1 0 0 0 0
unit 25 9 -1 3 6 -4 -5 1 1 0 0 0
mu 25 5 2 -1 0 0 0 0 0 0 0 0
field 29 14 prime_power
unit 29 1 1 7 -21 -56 70 126 -84 -120 45 55 -11 -12 1 1
unit 29 2 1 1 0 0 0 0 0 0 0 0 0 0 0 0
unit 29 3 1 -6 -21 35 70 -56 -84 36 45 -10 -11 1 1 0
unit 29 4 -1 1 1 0 0 0 0 0 0 0 0 0 0 0
unit 29 5 -1 -6 15 35 -35 -56 28 36 -9 -10 1 1 0 0
unit 29 6 -1 -2 1 1 0 0 0 0 0 0 0 0 0 0
unit 29 7 -1 5 15 -20 -35 21 28 -8 -9 1 1 0 0 0
unit 29 8 1 -2 -3 1 1 0 0 0 0 0 0 0 0 0
unit 29 9 1 5 -10 -20 15 21 -7 -8 1 1 0 0 0 0
unit 29 10 1 3 -3 -4 1 1 0 0 0 0 0 0 0 0
unit 29 11 1 -4 -10 10 15 -6 -7 1 1 0 0 0 0 0
unit 29 12 -1 3 6 -4 -5 1 1 0 0 0 0 0 0 0
unit 29 13 -1 -4 6 10 -5 -6 1 1 0 0 0 0 0 0
mu 29 29 2 -1 0 0 0 0 0 0 0 0 0 0 0 0
field 15 4 composite
unit 15 1 0 1 0 0
unit 15 2 -1 1 0 0
unit 15 3 -3 0 1 0
mu 15 5 1 1 0 0
field 20 4 composite
unit 20 1 -1 1 0 0
unit 20 2 -2 1 0 0
unit 20 3 -2 0 1 0
mu 20 5 0 1 0 0
field 21 6 composite
unit 21 1 0 1 0 0 0 0
unit 21 2 -1 1 0 0 0 0
unit 21 3 -1 1 1 0 0 0
unit 21 4 -2 0 1 0 0 0
unit 21 5 -3 0 1 0 0 0
mu 21 7 1 1 0 0 0 0
field 24 4 composite
unit 24 1 0 1 0 0
unit 24 2 -1 2 0 0
unit 24 3 -1 -1 1 0
mu 24 2 1 1 0 0
field 12 4 quartic12
unit 12 1 3 -5/2 -1 1/4
unit 12 2 13/2 -5 -9/4 1/2
unit 12 3 13/2 -6 -9/4 1/2
)CATALOG";
}

}  // namespace primdiv
