#ifndef PRIMDIV_RUNCONFIG_HPP
#define PRIMDIV_RUNCONFIG_HPP

#include <string>
#include <vector>

namespace primdiv {

struct RunConfig {
  long precision = 200;  // working decimal digits
  std::vector<long> n_list;
  long box = 1000000;
  int d1_margin = 0;       // extra digits added to the catalogued c0 exponents
  int escalation_cap = 5;  // c0 *= 10 retries on hypothesis failure
  std::string output;      // path; empty = stdout
  bool json = false;
  bool check_direct = false;
  int threads = 1;

  void validate() const;  // throws std::invalid_argument
};

// Flat key=value file; '#' comments and blank lines ignored. Unknown keys
// are rejected. Flags parsed by the CLI override these values.
RunConfig load_config_file(const std::string& path);
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace primdiv

#endif
