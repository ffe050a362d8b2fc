#include "irs_si/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "irs_si/errors.hpp"

namespace irs_si {

namespace {

constexpr double kPureLosKappa = 1e12;

double distance(const Position& a, const Position& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a + std::numbers::pi, two_pi);
  if (a < 0.0) a += two_pi;
  return a - std::numbers::pi;
}

std::string user_link(const char* prefix, int k) {
  return std::string(prefix) + std::to_string(k + 1);
}

}  // namespace

void ScenarioConfig::validate() const {
  if (user_positions.size() < 2) throw ConfigError("scenario needs at least two users");
  if (n_y < 1 || n_z < 1) throw ConfigError("IRS grid dimensions must be positive");
  if (!(element_spacing_over_wavelength > 0.0)) throw ConfigError("element spacing must be positive");
  if (!(rician_kappa >= 0.0)) throw ConfigError("rician_kappa must be nonnegative");
  if (!(reference_distance_m > 0.0)) throw ConfigError("reference distance must be positive");
  if (!(total_power_w > 0.0)) throw ConfigError("total power must be positive");
  if (noise_powers_w.size() != 1 && noise_powers_w.size() != user_positions.size())
    throw ConfigError("noise_powers_w must have one entry or one per user");
  for (double s : noise_powers_w)
    if (!(s > 0.0)) throw ConfigError("noise powers must be positive");
  for (const auto& [name, link] : distance_overrides) {
    bool known = name == "ap_irs";
    for (int k = 0; k < num_users() && !known; ++k)
      known = name == user_link("ap_user_", k) || name == user_link("irs_user_", k);
    if (!known) throw ConfigError("unknown link in distance_overrides: " + name);
    if (link.distance_m && !(*link.distance_m > 0.0))
      throw ConfigError("override distance for " + name + " must be positive");
  }
  auto check = [&](const std::string& name) {
    if (!(resolve_link(*this, name).distance_m > 0.0))
      throw ConfigError("link " + name + " has zero length");
  };
  check("ap_irs");
  for (int k = 0; k < num_users(); ++k) {
    check(user_link("ap_user_", k));
    check(user_link("irs_user_", k));
  }
}

void ChannelSet::validate() const {
  const auto users = h.size();
  if (users < 2) throw ConfigError("channel set needs at least two users");
  if (m.size() != users || sigma2.size() != users)
    throw ConfigError("channel set user counts disagree");
  for (const auto& mk : m)
    if (mk.size() != g.size()) throw ConfigError("IRS-user channel length differs from N");
  for (double s : sigma2)
    if (!(s > 0.0)) throw ConfigError("noise powers must be positive");
}

ChannelSet ChannelSet::with_legitimate_user(int user) const {
  if (user < 0 || user >= k()) throw ConfigError("user index out of range");
  ChannelSet out = *this;
  std::swap(out.m[0], out.m[user]);
  std::swap(out.h[0], out.h[user]);
  std::swap(out.sigma2[0], out.sigma2[user]);
  return out;
}

double path_loss_db(double distance_m, double exponent, double reference_loss_db,
                    double reference_distance_m) {
  if (!(distance_m > 0.0) || !(reference_distance_m > 0.0))
    throw DomainError("path loss needs positive distances");
  return reference_loss_db + 10.0 * exponent * std::log10(distance_m / reference_distance_m);
}

double amplitude_from_loss_db(double loss_db) { return std::sqrt(std::pow(10.0, -loss_db / 10.0)); }

CVector upa_response(double azimuth, double elevation, int n_y, int n_z, double spacing_ratio) {
  const int n = n_y * n_z;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const double ky = std::sin(azimuth) * std::sin(elevation);
  const double kz = std::cos(elevation);
  const double two_pi_d = 2.0 * std::numbers::pi * spacing_ratio;
  CVector a(n);
  for (int iy = 0; iy < n_y; ++iy) {
    for (int iz = 0; iz < n_z; ++iz) {
      const double phase = two_pi_d * (iy * ky + iz * kz);
      a(iy * n_z + iz) = scale * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return a;
}

CVector draw_rician(const CVector& los, double kappa, Rng& rng) {
  if (!(kappa >= 0.0)) throw DomainError("Rician factor must be nonnegative");
  if (kappa >= kPureLosKappa) return los;
  const double w_los = std::sqrt(kappa / (1.0 + kappa));
  const double w_nlos = std::sqrt(1.0 / (1.0 + kappa));
  return w_los * los + w_nlos * complex_normal_vector(rng, los.size());
}

LinkGeometry irs_link_geometry(const Position& irs, const Position& other) {
  const double dx = other[0] - irs[0];
  const double dy = other[1] - irs[1];
  const double dz = other[2] - irs[2];
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  double bx = -irs[0];
  double bz = -irs[2];
  if (bx == 0.0 && bz == 0.0) bx = -1.0;
  const double azimuth = wrap_angle(std::atan2(dz, dx) - std::atan2(bz, bx));
  const double elevation = d > 0.0 ? std::acos(std::clamp(dy / d, -1.0, 1.0)) : std::numbers::pi / 2;
  return {d, azimuth, elevation};
}

LinkGeometry resolve_link(const ScenarioConfig& config, const std::string& name) {
  LinkGeometry geo{};
  if (name == "ap_irs") {
    geo = irs_link_geometry(config.irs_position, config.ap_position);
  } else {
    const bool ap = name.rfind("ap_user_", 0) == 0;
    const bool irs = name.rfind("irs_user_", 0) == 0;
    if (!ap && !irs) throw ConfigError("unknown link " + name);
    const int k = std::stoi(name.substr(ap ? 8 : 9)) - 1;
    if (k < 0 || k >= config.num_users()) throw ConfigError("unknown link " + name);
    const Position& user = config.user_positions[static_cast<std::size_t>(k)];
    if (ap) {
      geo = {distance(config.ap_position, user), 0.0, 0.0};
    } else {
      geo = irs_link_geometry(config.irs_position, user);
    }
  }
  if (auto it = config.distance_overrides.find(name); it != config.distance_overrides.end()) {
    const LinkOverride& o = it->second;
    if (o.distance_m) geo.distance_m = *o.distance_m;
    if (o.azimuth_rad) geo.azimuth_rad = *o.azimuth_rad;
    if (o.elevation_rad) geo.elevation_rad = *o.elevation_rad;
  }
  return geo;
}

ChannelSet generate_channels(const ScenarioConfig& config, Rng& rng) {
  config.validate();
  const int users = config.num_users();
  const double kappa = config.rician_kappa;
  auto amplitude = [&](double d, double exponent) {
    return amplitude_from_loss_db(
        path_loss_db(d, exponent, config.reference_loss_db, config.reference_distance_m));
  };

  // One stream per link, so a link's draws do not depend on N or K.
  const std::uint64_t base = rng();
  auto link_rng = [&](std::uint64_t link) { return substream(base, link, 0x4c4e4bu); };

  ChannelSet ch;
  const LinkGeometry ai = resolve_link(config, "ap_irs");
  const CVector a_r = upa_response(ai.azimuth_rad, ai.elevation_rad, config.n_y, config.n_z,
                                   config.element_spacing_over_wavelength);
  Rng g_rng = link_rng(0);
  ch.g = amplitude(ai.distance_m, config.pathloss_exponent_irs) * draw_rician(a_r, kappa, g_rng);

  for (int k = 0; k < users; ++k) {
    const LinkGeometry iu = resolve_link(config, user_link("irs_user_", k));
    // Row channel m_k^H has LoS a_t^H, so the stored column m_k has LoS a_t.
    const CVector a_t = upa_response(iu.azimuth_rad, iu.elevation_rad, config.n_y, config.n_z,
                                     config.element_spacing_over_wavelength);
    Rng m_rng = link_rng(1 + 2 * static_cast<std::uint64_t>(k));
    ch.m.push_back(amplitude(iu.distance_m, config.pathloss_exponent_irs) *
                   draw_rician(a_t, kappa, m_rng));

    const LinkGeometry au = resolve_link(config, user_link("ap_user_", k));
    const CVector unit = CVector::Ones(1);
    Rng h_rng = link_rng(2 + 2 * static_cast<std::uint64_t>(k));
    ch.h.push_back(amplitude(au.distance_m, config.pathloss_exponent_direct) *
                   draw_rician(unit, kappa, h_rng)(0));

    const auto idx = config.noise_powers_w.size() == 1 ? 0 : static_cast<std::size_t>(k);
    ch.sigma2.push_back(config.noise_powers_w[idx]);
  }
  return ch;
}

ChannelSet generate_channels(const ScenarioConfig& config) {
  Rng rng = substream(config.seed, 0, 0x43484eu);
  return generate_channels(config, rng);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

ScenarioConfig table_i_scenario(double d1, int n_elements, double kappa, double total_power_w,
                                std::uint64_t seed) {
  ScenarioConfig c;
  c.ap_position = {0.0, 0.0, 30.0};
  c.irs_position = {30.0, 0.0, 30.0};
  c.user_positions = {{0.0, 0.0, d1}, {30.0, 0.0, -10.0}};
  c.n_y = n_elements;
  c.n_z = 1;
  c.rician_kappa = kappa;
  c.noise_powers_w = {dbm_to_watts(-80.0)};
  c.total_power_w = total_power_w;
  c.seed = seed;
  LinkOverride ap_user1;
  ap_user1.distance_m = std::sqrt(30.0 * 30.0 + d1 * d1);
  c.distance_overrides["ap_user_1"] = ap_user1;
  LinkOverride irs_user1;
  irs_user1.distance_m = std::sqrt(30.0 * 30.0 + (30.0 - d1) * (30.0 - d1));
  irs_user1.azimuth_rad = std::atan2(30.0, 30.0 - d1) - std::numbers::pi / 4;
  irs_user1.elevation_rad = std::numbers::pi / 2;
  c.distance_overrides["irs_user_1"] = irs_user1;
  return c;
}

ScenarioConfig multi_user_scenario(int num_users, int n_elements, double kappa,
                                   double total_power_w, std::uint64_t seed) {
  ScenarioConfig c;
  c.ap_position = {0.0, 0.0, 30.0};
  c.irs_position = {30.0, 0.0, 30.0};
  // Users sit on the same line as user 1 of the two-user layout, at offset
  // 10k, so their links follow that layout's distance and angle formulas.
  for (int k = 1; k <= num_users; ++k) {
    const double d = 10.0 * k;
    c.user_positions.push_back({0.0, 0.0, d});
    LinkOverride ap_user;
    ap_user.distance_m = std::sqrt(30.0 * 30.0 + d * d);
    c.distance_overrides["ap_user_" + std::to_string(k)] = ap_user;
    LinkOverride irs_user;
    irs_user.distance_m = std::sqrt(30.0 * 30.0 + (30.0 - d) * (30.0 - d));
    irs_user.azimuth_rad = std::atan2(30.0, 30.0 - d) - std::numbers::pi / 4;
    irs_user.elevation_rad = std::numbers::pi / 2;
    c.distance_overrides["irs_user_" + std::to_string(k)] = irs_user;
  }
  c.n_y = n_elements;
  c.n_z = 1;
  c.rician_kappa = kappa;
  c.noise_powers_w = {dbm_to_watts(-80.0)};
  c.total_power_w = total_power_w;
  c.seed = seed;
  return c;
}

}  // namespace irs_si
