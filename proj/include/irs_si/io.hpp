#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irs_si/algorithms.hpp"
#include "irs_si/channel.hpp"

namespace irs_si {

/// A scenario file: geometry for channel generation, or explicit channels.
struct Scenario {
  ScenarioConfig config;
  /// Set when the file carries a "channels" object; generation is skipped.
  std::optional<ChannelSet> channels;

  [[nodiscard]] ChannelSet resolve_channels() const;
  [[nodiscard]] double power() const { return config.total_power_w; }
};

/// Watts from a JSON-ish value: plain number, "XdBm" or "XdB" (dB re 1 W).
double parse_power(const std::string& text);

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

/// Explicit channels in the scenario-file format.
std::string channels_to_json(const ChannelSet& ch);

/// One region per power value (a single region for cmd_region).
struct TaggedRegion {
  std::optional<double> power_w;
  RegionBoundary region;
};

void write_region_csv(std::ostream& out, const std::vector<TaggedRegion>& regions, Scheme scheme,
                      std::uint64_t seed);
void write_phases_json(std::ostream& out, const std::vector<TaggedRegion>& regions, Scheme scheme,
                       std::uint64_t seed);

/// N phases in radians from a JSON array file.
std::vector<double> load_phases(const std::string& path);

}  // namespace irs_si
