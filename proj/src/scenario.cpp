#include "vmi/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "vmi/errors.hpp"

namespace vmi {

double LearningConfig::learning_rate(long long t) const {
    return alpha0 / std::pow(alpha_decay, static_cast<double>(t));
}

void LearningConfig::validate() const {
    if (!(discount > 0.0 && discount <= 1.0))
        throw ConfigError("learning.discount must lie in (0, 1]");
    if (!(alpha0 > 0.0 && alpha0 < 1.0))
        throw ConfigError("learning.alpha0 must lie in (0, 1)");
    if (!(alpha_decay >= 1.0)) throw ConfigError("learning.alpha_decay must be >= 1");
    if (!(greedy_probability > 0.9 && greedy_probability <= 1.0))
        throw ConfigError("learning.greedy_probability must lie in (0.9, 1]");
    if (iterations < 1) throw ConfigError("learning.iterations must be >= 1");
}

void Scenario::validate() {
    if (cell_count < 1) throw ConfigError("network.cells must be >= 1");
    if (users_per_cell < 1) throw ConfigError("network.users_per_cell must be >= 1");
    if (!(area_width_m > 0.0 && area_height_m > 0.0))
        throw ConfigError("area dimensions must be positive");
    if (!(max_velocity_mps >= 0.0)) throw ConfigError("network.max_velocity_mps must be >= 0");
    if (!(noise_psd_w_per_hz > 0.0)) throw ConfigError("network.noise_psd_w_per_hz must be positive");
    if (!(rate_compensation >= 1.0)) throw ConfigError("network.rate_compensation must be >= 1");
    if (avi_update_period < 1) throw ConfigError("network.avi_update_period must be >= 1");
    if (!(sigma_sq_max > 0.0 && sigma_sq_max <= 1.0))
        throw ConfigError("network.sigma_sq_max must lie in (0, 1]");
    if (power_levels_w.empty()) throw ConfigError("power.levels_w must not be empty");
    for (std::size_t i = 0; i < power_levels_w.size(); ++i) {
        if (!(power_levels_w[i] > 0.0))
            throw ConfigError("power.levels_w must be positive");
        if (i > 0 && !(power_levels_w[i] > power_levels_w[i - 1]))
            throw ConfigError("power.levels_w must be strictly increasing");
    }
    if (!(skin_depth_m > 0.0)) throw ConfigError("medium.skin_depth_m must be positive");
    if (!(permeability > 0.0)) throw ConfigError("medium.permeability_h_per_m must be positive");
    learning.validate();

    // Reference load: the vehicle coil's own resistance.
    if (vu_coil.load_resistance_ohm < 0.0)
        vu_coil.load_resistance_ohm = coil_resistance(vu_coil);
    if (bs_coil.load_resistance_ohm < 0.0)
        bs_coil.load_resistance_ohm = vu_coil.load_resistance_ohm;
    try {
        bs_coil.validate();
        vu_coil.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("coils: ") + e.what());
    }
}

double Scenario::road_gradient_rad() const {
    return std::atan(std::abs(z_east_m - z_west_m) / area_width_m);
}

double Scenario::plane_z(double x) const {
    return z_west_m + (z_east_m - z_west_m) * (x / area_width_m);
}

int Scenario::layout_cols() const {
    if (grid_cols > 0) return grid_cols;
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(cell_count))));
}

Scenario::CellRect Scenario::cell_rect(int cell_index) const {
    const int cols = layout_cols();
    const int rows = (cell_count + cols - 1) / cols;
    const double sx = area_width_m / cols;
    const double sy = area_height_m / rows;
    const int col = cell_index % cols;
    const int row = cell_index / cols;
    CellRect r;
    r.x0 = col * sx;
    r.x1 = (col + 1) * sx;
    r.y0 = row * sy;
    r.y1 = (row + 1) * sy;
    const double cx = 0.5 * (r.x0 + r.x1);
    const double cy = 0.5 * (r.y0 + r.y1);
    r.center_on_plane = Vec3{cx, cy, plane_z(cx)};
    return r;
}

LinkGeometry Scenario::single_link_geometry() const {
    LinkGeometry g;
    g.rx_position = link_rx_position;
    g.road_gradient_rad = link_road_gradient_deg * M_PI / 180.0;
    g.skin_depth_m = skin_depth_m;
    return g;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& where) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (trim(v.substr(used)).empty()) return d;
    } catch (...) {
    }
    throw ConfigError("expected a number for " + where + ", got '" + v + "'");
}

long long parse_int(const std::string& v, const std::string& where) {
    const double d = parse_double(v, where);
    const long long i = static_cast<long long>(d);
    if (static_cast<double>(i) != d)
        throw ConfigError("expected an integer for " + where + ", got '" + v + "'");
    return i;
}

bool parse_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("expected true/false for " + where + ", got '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(item, where));
    }
    if (out.empty()) throw ConfigError("expected a comma-separated list for " + where);
    return out;
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    Scenario scn;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string where = section + "." + key;

        auto unknown = [&]() -> ConfigError {
            return ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key " + where);
        };

        if (section == "coils") {
            if (key == "bs_turns") scn.bs_coil.turns = static_cast<int>(parse_int(value, where));
            else if (key == "bs_radius_m") scn.bs_coil.radius_m = parse_double(value, where);
            else if (key == "vu_turns") scn.vu_coil.turns = static_cast<int>(parse_int(value, where));
            else if (key == "vu_radius_m") scn.vu_coil.radius_m = parse_double(value, where);
            else if (key == "wire_resistivity_ohm_per_m") {
                const double r = parse_double(value, where);
                scn.bs_coil.wire_resistivity_ohm_per_m = r;
                scn.vu_coil.wire_resistivity_ohm_per_m = r;
            } else if (key == "load_resistance_ohm") {
                const double r = parse_double(value, where);
                scn.bs_coil.load_resistance_ohm = r;
                scn.vu_coil.load_resistance_ohm = r;
            } else if (key == "resonance_frequency_hz") {
                const double f = parse_double(value, where);
                scn.bs_coil.resonance_frequency_hz = f;
                scn.vu_coil.resonance_frequency_hz = f;
            } else throw unknown();
        } else if (section == "medium") {
            if (key == "permeability_h_per_m") scn.permeability = parse_double(value, where);
            else if (key == "skin_depth_m") scn.skin_depth_m = parse_double(value, where);
            else throw unknown();
        } else if (section == "area") {
            if (key == "width_m") scn.area_width_m = parse_double(value, where);
            else if (key == "height_m") scn.area_height_m = parse_double(value, where);
            else if (key == "z_west_m") scn.z_west_m = parse_double(value, where);
            else if (key == "z_east_m") scn.z_east_m = parse_double(value, where);
            else throw unknown();
        } else if (section == "network") {
            if (key == "cells") scn.cell_count = static_cast<int>(parse_int(value, where));
            else if (key == "users_per_cell") scn.users_per_cell = static_cast<int>(parse_int(value, where));
            else if (key == "noise_psd_w_per_hz") scn.noise_psd_w_per_hz = parse_double(value, where);
            else if (key == "sinr_threshold") scn.sinr_threshold = parse_double(value, where);
            else if (key == "rate_compensation") scn.rate_compensation = parse_double(value, where);
            else if (key == "max_velocity_mps") scn.max_velocity_mps = parse_double(value, where);
            else if (key == "avi_update_period") scn.avi_update_period = static_cast<int>(parse_int(value, where));
            else if (key == "sigma_sq_max") scn.sigma_sq_max = parse_double(value, where);
            else if (key == "grid_cols") scn.grid_cols = static_cast<int>(parse_int(value, where));
            else throw unknown();
        } else if (section == "power") {
            if (key == "levels_w") scn.power_levels_w = parse_list(value, where);
            else throw unknown();
        } else if (section == "learning") {
            if (key == "discount") scn.learning.discount = parse_double(value, where);
            else if (key == "alpha0") scn.learning.alpha0 = parse_double(value, where);
            else if (key == "alpha_decay") scn.learning.alpha_decay = parse_double(value, where);
            else if (key == "greedy_probability") scn.learning.greedy_probability = parse_double(value, where);
            else if (key == "iterations") scn.learning.iterations = static_cast<int>(parse_int(value, where));
            else if (key == "frozen") scn.frozen_environment = parse_bool(value, where);
            else if (key == "sampled_reward") scn.sampled_reward = parse_bool(value, where);
            else throw unknown();
        } else if (section == "seeds") {
            if (key == "placement") scn.placement_seed = static_cast<std::uint64_t>(parse_int(value, where));
            else if (key == "mobility") scn.mobility_seed = static_cast<std::uint64_t>(parse_int(value, where));
            else if (key == "exploration") scn.exploration_seed = static_cast<std::uint64_t>(parse_int(value, where));
            else if (key == "avi") scn.avi_seed = static_cast<std::uint64_t>(parse_int(value, where));
            else throw unknown();
        } else if (section == "fading") {
            if (key == "phis_deg") scn.fading_phis_deg = parse_list(value, where);
            else if (key == "sigmas") scn.fading_sigmas = parse_list(value, where);
            else throw unknown();
        } else if (section == "link") {
            if (key == "x_m") scn.link_rx_position.x = parse_double(value, where);
            else if (key == "y_m") scn.link_rx_position.y = parse_double(value, where);
            else if (key == "z_m") scn.link_rx_position.z = parse_double(value, where);
            else if (key == "road_gradient_deg") scn.link_road_gradient_deg = parse_double(value, where);
            else throw unknown();
        } else if (section == "outage") {
            if (key == "threshold_sinr") scn.outage_threshold = parse_double(value, where);
            else if (key == "powers_w") scn.outage_powers_w = parse_list(value, where);
            else if (key == "sigma_sq_max") scn.outage_sigma_sq_max = parse_double(value, where);
            else if (key == "sigma_points") scn.outage_sigma_points = static_cast<int>(parse_int(value, where));
            else if (key == "power_min_w") scn.outage_power_min_w = parse_double(value, where);
            else if (key == "power_max_w") scn.outage_power_max_w = parse_double(value, where);
            else if (key == "power_points") scn.outage_power_points = static_cast<int>(parse_int(value, where));
            else if (key == "fixed_sigmas") scn.outage_fixed_sigmas = parse_list(value, where);
            else throw unknown();
        } else if (section == "map") {
            if (key == "sigma") scn.map_sigma = parse_double(value, where);
            else if (key == "extent_m") scn.map_extent_m = parse_double(value, where);
            else if (key == "depth_m") scn.map_depth_m = parse_double(value, where);
            else if (key == "points") scn.map_points = static_cast<int>(parse_int(value, where));
            else throw unknown();
        } else {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown section [" +
                              section + "]");
        }
    }
    scn.validate();
    return scn;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

} // namespace vmi
