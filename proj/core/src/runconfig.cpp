#include "primdiv/runconfig.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace primdiv {

void RunConfig::validate() const {
  if (precision < 50) throw std::invalid_argument("config: precision must be >= 50");
  if (box < 1) throw std::invalid_argument("config: box must be >= 1");
  if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
  if (escalation_cap < 0) throw std::invalid_argument("config: escalation_cap must be >= 0");
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "precision") {
    cfg.precision = std::stol(value);
  } else if (key == "box") {
    cfg.box = std::stol(value);
  } else if (key == "d1_margin") {
    cfg.d1_margin = std::stoi(value);
  } else if (key == "escalation_cap") {
    cfg.escalation_cap = std::stoi(value);
  } else if (key == "threads") {
    cfg.threads = std::stoi(value);
  } else if (key == "output") {
    cfg.output = value;
  } else if (key == "json") {
    cfg.json = (value == "1" || value == "true");
  } else if (key == "check_direct") {
    cfg.check_direct = (value == "1" || value == "true");
  } else if (key == "n_list") {
    cfg.n_list.clear();
    std::istringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) cfg.n_list.push_back(std::stol(tok));
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value: " + line);
    apply_key_value(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

}  // namespace primdiv
