#pragma once

#include <iosfwd>
#include <map>
#include <numbers>
#include <string>
#include <utility>

namespace landau {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2π).
double wrap_angle(double theta);

/// Charged particle in the infinite plane, natural units (ħ = c = 1).
struct InfiniteConfig {
  double mass = 1.0;
  double charge = 1.0;
  double field = 1.0;
};

/// Validates and returns an infinite-plane configuration; throws
/// std::invalid_argument on non-positive or non-finite inputs.
InfiniteConfig make_infinite_config(double mass, double charge, double field);

/// Flux-quantized rectangular torus. The magnetic field is derived from the
/// number of flux quanta, B = 2π nΦ / (e Lx Ly), so flux quantization holds
/// by construction. θx, θy are stored reduced to [0, 2π).
class TorusConfig {
 public:
  TorusConfig(double mass, double charge, double lx, double ly, int nphi,
              double theta_x = 0.0, double theta_y = 0.0);

  double mass() const { return mass_; }
  double charge() const { return charge_; }
  double lx() const { return lx_; }
  double ly() const { return ly_; }
  int nphi() const { return nphi_; }
  double theta_x() const { return theta_x_; }
  double theta_y() const { return theta_y_; }

  double field() const { return field_; }
  double omega() const { return charge_ * field_ / mass_; }
  /// M ω = e B; inverse squared magnetic length.
  double mass_frequency() const { return mass_ * omega(); }
  double step_x() const { return lx_ / nphi_; }
  double step_y() const { return ly_ / nphi_; }

  InfiniteConfig plane() const { return {mass_, charge_, field_}; }

  TorusConfig with_thetas(double theta_x, double theta_y) const;

 private:
  double mass_;
  double charge_;
  double lx_;
  double ly_;
  int nphi_;
  double theta_x_;
  double theta_y_;
  double field_;
};

double cyclotron_frequency(const InfiniteConfig& cfg);
double cyclotron_frequency(const TorusConfig& cfg);

/// (a_x, a_y) = (Lx/nΦ, Ly/nΦ).
std::pair<double, double> elementary_steps(const TorusConfig& cfg);

/// a_x and a_y from the field, 2π/(eBLy) and 2π/(eBLx).
std::pair<double, double> elementary_steps_from_field(const TorusConfig& cfg);

using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. '#' starts a comment; dashes in keys are
/// normalized to underscores. Throws std::invalid_argument on malformed lines.
KeyValues parse_key_values(std::istream& in);
KeyValues read_key_value_file(const std::string& path);

/// Builds a torus configuration from keys mass, charge, lx, ly, nphi,
/// theta_x, theta_y. nphi is required; the rest default to 1 / 0.
TorusConfig torus_config_from(const KeyValues& kv);

}  // namespace landau
