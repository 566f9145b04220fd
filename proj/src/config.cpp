#include "landau/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace landau {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const KeyValues& kv, const std::string& key, double fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  std::size_t used = 0;
  const double v = std::stod(it->second, &used);
  if (used != it->second.size()) {
    throw std::invalid_argument("bad numeric value for " + key + ": " + it->second);
  }
  return v;
}

}  // namespace

double wrap_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("angle must be finite");
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

InfiniteConfig make_infinite_config(double mass, double charge, double field) {
  require_positive(mass, "mass");
  require_positive(charge, "charge");
  require_positive(field, "field");
  return {mass, charge, field};
}

TorusConfig::TorusConfig(double mass, double charge, double lx, double ly, int nphi,
                         double theta_x, double theta_y)
    : mass_(mass),
      charge_(charge),
      lx_(lx),
      ly_(ly),
      nphi_(nphi),
      theta_x_(wrap_angle(theta_x)),
      theta_y_(wrap_angle(theta_y)) {
  require_positive(mass, "mass");
  require_positive(charge, "charge");
  require_positive(lx, "lx");
  require_positive(ly, "ly");
  if (nphi < 1) throw std::invalid_argument("nphi must be >= 1");
  field_ = kTwoPi * nphi_ / (charge_ * lx_ * ly_);
}

TorusConfig TorusConfig::with_thetas(double theta_x, double theta_y) const {
  return TorusConfig(mass_, charge_, lx_, ly_, nphi_, theta_x, theta_y);
}

double cyclotron_frequency(const InfiniteConfig& cfg) { return cfg.charge * cfg.field / cfg.mass; }

double cyclotron_frequency(const TorusConfig& cfg) { return cfg.omega(); }

std::pair<double, double> elementary_steps(const TorusConfig& cfg) {
  return {cfg.step_x(), cfg.step_y()};
}

std::pair<double, double> elementary_steps_from_field(const TorusConfig& cfg) {
  const double eb = cfg.charge() * cfg.field();
  return {kTwoPi / (eb * cfg.ly()), kTwoPi / (eb * cfg.lx())};
}

KeyValues parse_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    for (char& c : key) {
      if (c == '-') c = '_';
    }
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    }
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValues read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return parse_key_values(in);
}

TorusConfig torus_config_from(const KeyValues& kv) {
  const auto it = kv.find("nphi");
  if (it == kv.end()) throw std::invalid_argument("nphi is required");
  const double nphi = to_double(kv, "nphi", 0.0);
  if (nphi != std::floor(nphi)) throw std::invalid_argument("nphi must be an integer");
  return TorusConfig(to_double(kv, "mass", 1.0), to_double(kv, "charge", 1.0),
                     to_double(kv, "lx", 1.0), to_double(kv, "ly", 1.0), static_cast<int>(nphi),
                     to_double(kv, "theta_x", 0.0), to_double(kv, "theta_y", 0.0));
}

}  // namespace landau
