#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vmi/coil.hpp"
#include "vmi/geometry.hpp"

namespace vmi {

struct LearningConfig {
    double discount = 0.9;            // γ in (0, 1]
    double alpha0 = 0.001;            // learning-rate schedule α(t) = alpha0 / decay^t
    double alpha_decay = 1.000001;    // >= 1
    double greedy_probability = 0.95; // must exceed 0.9
    int iterations = 300;

    double learning_rate(long long t) const;
    void validate() const;
};

// Full description of one simulated network, loadable from a sectioned
// key = value text file. Fields default to the reference evaluation setup;
// noise, threshold and compensation have no published values and their
// defaults here are artifact choices.
struct Scenario {
    // [coils]
    CoilSpec bs_coil{15, 0.6, 0.0166, -1.0, 10e3};
    CoilSpec vu_coil{30, 0.4, 0.0166, -1.0, 10e3};

    // [medium]
    double permeability = kMu0;
    double skin_depth_m = 1e6;

    // [area] west-east tilting plane: z(x) interpolates z_west at x=0 to
    // z_east at x=width.
    double area_width_m = 100.0;
    double area_height_m = 100.0;
    double z_west_m = -10.0;
    double z_east_m = -110.0;

    // [network]
    int cell_count = 13;
    int users_per_cell = 32; // doubles as the TDMA sub-channel count
    double noise_psd_w_per_hz = 1e-12;
    double sinr_threshold = 1.0;
    double rate_compensation = 1.0; // upper-layer loss factor, >= 1
    double max_velocity_mps = 2.0;
    int avi_update_period = 25;
    double sigma_sq_max = 0.9025;

    // [power]
    std::vector<double> power_levels_w = {6.2, 7.5, 8.7, 9.9, 11.1};

    // [learning]
    LearningConfig learning;
    bool frozen_environment = false; // disables mobility and intensity updates
    bool sampled_reward = false;     // reward from a sampled gain instead of its mean

    // [seeds]
    std::uint64_t placement_seed = 1;
    std::uint64_t mobility_seed = 2;
    std::uint64_t exploration_seed = 3;
    std::uint64_t avi_seed = 4;

    // [fading] parameter lists for the statistics commands
    std::vector<double> fading_phis_deg = {15.0, 30.0, 60.0, 75.0};
    std::vector<double> fading_sigmas = {0.3, 0.5, 0.7, 0.95};

    // [link] single-link geometry for the cdf/pdf/outage commands
    Vec3 link_rx_position{10.0, 0.0, -10.0};
    double link_road_gradient_deg = 0.0;

    // [outage]
    double outage_threshold = 1.0;
    std::vector<double> outage_powers_w = {6.2, 8.7, 11.1};
    double outage_sigma_sq_max = 0.9025;
    int outage_sigma_points = 50;
    double outage_power_min_w = 0.5;
    double outage_power_max_w = 20.0;
    int outage_power_points = 60;
    std::vector<double> outage_fixed_sigmas = {0.1, 0.3, 0.5};

    // [map]
    double map_sigma = 0.95;
    double map_extent_m = 50.0;
    double map_depth_m = -20.0;
    int map_points = 41;

    int grid_cols = 0; // 0 selects ceil(sqrt(cell_count)) columns

    void validate(); // fills derived defaults, throws ConfigError on violations

    double road_gradient_rad() const;
    double plane_z(double x) const;

    struct CellRect {
        double x0, y0, x1, y1;
        Vec3 center_on_plane;
    };
    int layout_cols() const;
    CellRect cell_rect(int cell_index) const;

    LinkGeometry single_link_geometry() const;
};

// Parses the sectioned key = value format. Unknown sections or keys are
// rejected so typos fail loudly. Throws ConfigError / IoError.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& text, const std::string& origin = "<memory>");

} // namespace vmi
