#include "irs_si/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "irs_si/errors.hpp"
#include "json.hpp"

namespace irs_si {

namespace {

using nlohmann::json;

double to_power(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_power(v.get<std::string>());
  throw ConfigError(field + " must be a number or a string with a dBm/dB suffix");
}

Position to_position(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 3) throw ConfigError(field + " must be a 3-element array");
  Position p{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_number()) throw ConfigError(field + " entries must be numbers");
    p[i] = v[i].get<double>();
  }
  return p;
}

Complex to_complex(const json& v, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(field + " entries must be [re, im] pairs");
  return {v[0].get<double>(), v[1].get<double>()};
}

CVector to_cvector(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field + " must be an array");
  CVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = to_complex(v[i], field);
  return out;
}

json from_complex(Complex c) { return json::array({c.real(), c.imag()}); }

json from_cvector(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(from_complex(v(i)));
  return out;
}

ChannelSet parse_channels(const json& j, const std::vector<double>& noise) {
  for (const auto& [key, _] : j.items())
    if (key != "g" && key != "m" && key != "h" && key != "sigma2")
      throw ConfigError("unknown field in channels: " + key);
  if (!j.contains("g") || !j.contains("m") || !j.contains("h"))
    throw ConfigError("channels needs g, m and h");
  ChannelSet ch;
  ch.g = to_cvector(j["g"], "channels.g");
  if (!j["m"].is_array()) throw ConfigError("channels.m must be an array of vectors");
  for (const auto& mk : j["m"]) ch.m.push_back(to_cvector(mk, "channels.m"));
  if (!j["h"].is_array()) throw ConfigError("channels.h must be an array");
  for (const auto& hk : j["h"]) ch.h.push_back(to_complex(hk, "channels.h"));
  if (j.contains("sigma2")) {
    if (!j["sigma2"].is_array()) throw ConfigError("channels.sigma2 must be an array");
    for (const auto& s : j["sigma2"]) ch.sigma2.push_back(to_power(s, "channels.sigma2"));
  } else if (noise.size() == 1) {
    ch.sigma2.assign(ch.h.size(), noise[0]);
  } else {
    ch.sigma2 = noise;
  }
  ch.validate();
  return ch;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

double parse_power(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  double scale_db = 0.0;
  bool log_units = false;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "dBm") == 0) {
    s.resize(s.size() - 3);
    scale_db = -30.0;
    log_units = true;
  } else if (s.size() > 2 && s.compare(s.size() - 2, 2, "dB") == 0) {
    s.resize(s.size() - 2);
    log_units = true;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse power value '" + text + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw ConfigError("cannot parse power value '" + text + "'");
  return log_units ? std::pow(10.0, (value + scale_db) / 10.0) : value;
}

ChannelSet Scenario::resolve_channels() const {
  if (channels) return *channels;
  return generate_channels(config);
}

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
  static const std::set<std::string> known{
      "ap_position", "irs_position", "user_positions", "n_y", "n_z", "element_spacing_over_wavelength",
      "rician_kappa", "pathloss_exponent_direct", "pathloss_exponent_irs", "reference_loss_db",
      "reference_distance_m", "noise_powers_w", "total_power_w", "seed", "distance_overrides", "channels"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ConfigError("unknown scenario field: " + key);

  Scenario sc;
  ScenarioConfig& c = sc.config;
  try {
    if (j.contains("ap_position")) c.ap_position = to_position(j["ap_position"], "ap_position");
    if (j.contains("irs_position")) c.irs_position = to_position(j["irs_position"], "irs_position");
    if (j.contains("user_positions")) {
      if (!j["user_positions"].is_array()) throw ConfigError("user_positions must be an array");
      for (const auto& u : j["user_positions"]) c.user_positions.push_back(to_position(u, "user_positions"));
    }
    if (j.contains("n_y")) c.n_y = j["n_y"].get<int>();
    if (j.contains("n_z")) c.n_z = j["n_z"].get<int>();
    if (j.contains("element_spacing_over_wavelength"))
      c.element_spacing_over_wavelength = j["element_spacing_over_wavelength"].get<double>();
    if (j.contains("rician_kappa")) c.rician_kappa = to_power(j["rician_kappa"], "rician_kappa");
    if (j.contains("pathloss_exponent_direct")) c.pathloss_exponent_direct = j["pathloss_exponent_direct"].get<double>();
    if (j.contains("pathloss_exponent_irs")) c.pathloss_exponent_irs = j["pathloss_exponent_irs"].get<double>();
    if (j.contains("reference_loss_db")) c.reference_loss_db = j["reference_loss_db"].get<double>();
    if (j.contains("reference_distance_m")) c.reference_distance_m = j["reference_distance_m"].get<double>();
    if (j.contains("noise_powers_w")) {
      const json& n = j["noise_powers_w"];
      if (n.is_array()) {
        for (const auto& v : n) c.noise_powers_w.push_back(to_power(v, "noise_powers_w"));
      } else {
        c.noise_powers_w.push_back(to_power(n, "noise_powers_w"));
      }
    }
    if (j.contains("total_power_w")) c.total_power_w = to_power(j["total_power_w"], "total_power_w");
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("distance_overrides")) {
      const json& o = j["distance_overrides"];
      if (!o.is_object()) throw ConfigError("distance_overrides must be an object");
      for (const auto& [name, link] : o.items()) {
        LinkOverride lo;
        for (const auto& [key, val] : link.items()) {
          if (key == "distance_m") lo.distance_m = val.get<double>();
          else if (key == "azimuth_rad") lo.azimuth_rad = val.get<double>();
          else if (key == "elevation_rad") lo.elevation_rad = val.get<double>();
          else throw ConfigError("unknown override field " + key + " for link " + name);
        }
        c.distance_overrides[name] = lo;
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad scenario field type: ") + e.what());
  }
  if (!(c.total_power_w > 0.0)) throw ConfigError("total_power_w must be positive");
  if (j.contains("channels")) {
    sc.channels = parse_channels(j["channels"], c.noise_powers_w);
  } else {
    if (c.noise_powers_w.empty()) throw ConfigError("noise_powers_w is required");
    c.validate();
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string channels_to_json(const ChannelSet& ch) {
  json m = json::array();
  for (const auto& mk : ch.m) m.push_back(from_cvector(mk));
  json h = json::array();
  for (Complex hk : ch.h) h.push_back(from_complex(hk));
  json out;
  out["channels"] = {{"g", from_cvector(ch.g)}, {"m", m}, {"h", h}, {"sigma2", ch.sigma2}};
  return out.dump(2);
}

void write_region_csv(std::ostream& out, const std::vector<TaggedRegion>& regions, Scheme scheme,
                      std::uint64_t seed) {
  const bool tagged = !regions.empty() && regions.front().power_w.has_value();
  if (tagged) out << "power_w,";
  out << "r_m_target,r_c_achieved,alpha_w,beta_w,upper_bound,feasible,scheme,seed\n";
  for (const TaggedRegion& tr : regions) {
    std::vector<const BoundaryPoint*> rows;
    for (const auto& p : tr.region.points) rows.push_back(&p);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BoundaryPoint* a, const BoundaryPoint* b) { return a->r_m_target < b->r_m_target; });
    for (const BoundaryPoint* p : rows) {
      if (tagged) out << fmt(*tr.power_w) << ',';
      out << fmt(p->r_m_target) << ',' << fmt(p->r_c_achieved) << ',' << fmt(p->alpha) << ',' << fmt(p->beta)
          << ',' << fmt(p->upper_bound) << ',' << (p->feasible ? "true" : "false") << ',' << to_string(scheme)
          << ',' << seed << '\n';
    }
  }
}

void write_phases_json(std::ostream& out, const std::vector<TaggedRegion>& regions, Scheme scheme,
                       std::uint64_t seed) {
  json points = json::array();
  for (const TaggedRegion& tr : regions) {
    std::vector<const BoundaryPoint*> rows;
    for (const auto& p : tr.region.points) rows.push_back(&p);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BoundaryPoint* a, const BoundaryPoint* b) { return a->r_m_target < b->r_m_target; });
    for (const BoundaryPoint* p : rows) {
      json row;
      if (tr.power_w) row["power_w"] = *tr.power_w;
      row["r_m_target"] = p->r_m_target;
      row["alpha_w"] = p->alpha;
      row["beta_w"] = p->beta;
      row["feasible"] = p->feasible;
      row["phases_rad"] = p->phase_vector.size() ? json(p->phase_vector.phases()) : json(nullptr);
      points.push_back(row);
    }
  }
  json doc;
  doc["scheme"] = to_string(scheme);
  doc["seed"] = seed;
  doc["points"] = points;
  out << doc.dump(2) << '\n';
}

std::vector<double> load_phases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read phase file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("phase file is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ConfigError("phase file must hold a JSON array of radians");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError("phase entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace irs_si
