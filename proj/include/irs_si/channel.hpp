#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irs_si/linalg.hpp"
#include "irs_si/rng.hpp"

namespace irs_si {

using Position = std::array<double, 3>;

/// Explicit geometry for one link. Unset fields fall back to the
/// coordinate-derived value.
struct LinkOverride {
  std::optional<double> distance_m;
  std::optional<double> azimuth_rad;
  std::optional<double> elevation_rad;
};

/// Scenario geometry and propagation parameters for one fading block.
///
/// User 1 (index 0) is the user requesting the confidential service; all
/// other users are potential eavesdroppers. Link names used as keys of
/// `distance_overrides` are "ap_irs", "ap_user_<k>" and "irs_user_<k>" with
/// 1-based k.
struct ScenarioConfig {
  Position ap_position{0.0, 0.0, 0.0};
  Position irs_position{0.0, 0.0, 0.0};
  std::vector<Position> user_positions;
  int n_y = 1;
  int n_z = 1;
  double element_spacing_over_wavelength = 0.5;
  double rician_kappa = 10.0;
  double pathloss_exponent_direct = 3.75;
  double pathloss_exponent_irs = 2.2;
  double reference_loss_db = 30.0;
  double reference_distance_m = 1.0;
  std::vector<double> noise_powers_w;
  double total_power_w = 1.0;
  std::uint64_t seed = 0;
  std::map<std::string, LinkOverride> distance_overrides;

  [[nodiscard]] int num_elements() const { return n_y * n_z; }
  [[nodiscard]] int num_users() const { return static_cast<int>(user_positions.size()); }

  /// Throws ConfigError when the scenario breaks an invariant.
  void validate() const;
};

/// Propagation state: g (AP->IRS), m_k (IRS->user k, the row channel is
/// m_k^H), h_k (AP->user k) and noise powers in watts.
struct ChannelSet {
  CVector g;
  std::vector<CVector> m;
  std::vector<Complex> h;
  std::vector<double> sigma2;

  [[nodiscard]] int n() const { return static_cast<int>(g.size()); }
  [[nodiscard]] int k() const { return static_cast<int>(h.size()); }

  void validate() const;

  /// Same channels with user `user` (0-based) moved to the confidential slot.
  [[nodiscard]] ChannelSet with_legitimate_user(int user) const;
};

/// Resolved geometry of one link.
struct LinkGeometry {
  double distance_m;
  double azimuth_rad;
  double elevation_rad;
};

/// L0 + 10 a log10(d / d0) in dB.
double path_loss_db(double distance_m, double exponent, double reference_loss_db,
                    double reference_distance_m);

/// Linear amplitude sqrt(10^(-L/10)) for a path loss in dB.
double amplitude_from_loss_db(double loss_db);

/// UPA steering vector with 1/sqrt(N) normalization. Element (iy, iz) is stored
/// at index iy * n_z + iz.
CVector upa_response(double azimuth, double elevation, int n_y, int n_z, double spacing_ratio);

/// Rician mix of a LoS vector with CN(0, 1) scattering. kappa >= 1e12 is
/// treated as the pure LoS limit and consumes no randomness.
CVector draw_rician(const CVector& los, double kappa, Rng& rng);

/// Geometry of a link seen from the IRS: azimuth is the signed angle in the
/// x-z plane from the IRS boresight (pointing at the origin) to the link
/// direction; elevation is measured from the y axis, so terminals in the x-z
/// plane have elevation pi/2.
LinkGeometry irs_link_geometry(const Position& irs, const Position& other);

/// Resolves a named link, applying overrides.
LinkGeometry resolve_link(const ScenarioConfig& config, const std::string& name);

ChannelSet generate_channels(const ScenarioConfig& config, Rng& rng);

/// Convenience: generate with a stream seeded from `config.seed`.
ChannelSet generate_channels(const ScenarioConfig& config);

/// Two-user layout of the simulation table (AP (0,0,30), IRS (30,0,30),
/// user 1 at (0,0,d1), user 2 at (30,0,-10)); the AP-user-1 distance and the
/// IRS-user-1 departure angle come from the table via overrides.
ScenarioConfig table_i_scenario(double d1, int n_elements = 10, double kappa = 10.0,
                                double total_power_w = 1.0, std::uint64_t seed = 0);

/// K-user layout: AP (0,0,30), IRS (30,0,30), user k on the ground 10k metres
/// from the AP's foot point, i.e. at (10k, 0, 0).
ScenarioConfig multi_user_scenario(int num_users, int n_elements = 10, double kappa = 10.0,
                                   double total_power_w = 1.0, std::uint64_t seed = 0);

/// -80 dBm and friends.
double dbm_to_watts(double dbm);

}  // namespace irs_si
