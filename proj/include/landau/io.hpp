#pragma once

#include <filesystem>
#include "json.hpp"
#include <string>

#include "landau/config.hpp"
#include "landau/sampled.hpp"
#include "landau/spectral_oracle.hpp"
#include "landau/torus_states.hpp"

namespace landau {

using json = nlohmann::ordered_json;

/// Round-trip decimal text ("%.17g").
std::string format_double(double v);

json to_json(const TorusConfig& cfg);
json to_json(const SpectrumReport& report);

/// Writes `doc` with two-space indent and a trailing newline.
void write_json(const std::filesystem::path& path, const json& doc);

/// x,y,re,im over the interior nodes, x fastest.
void write_state_csv(const std::filesystem::path& path, const SampledState& state);

/// x,y,density over the interior nodes.
void write_density_csv(const std::filesystem::path& path, const SampledState& state,
                       const DensityMap& map);

/// Plain PGM (P2), width nx, height ny, top row at the largest y, grey levels
/// scaled to the maximum density.
void write_density_pgm(const std::filesystem::path& path, const DensityMap& map);

}  // namespace landau
