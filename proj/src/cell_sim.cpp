#include "vmi/cell_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace vmi {

namespace {

double reflect_into(double p, double lo, double hi) {
    const double w = hi - lo;
    double t = std::fmod(p - lo, 2.0 * w);
    if (t < 0.0) t += 2.0 * w;
    return lo + (t <= w ? t : 2.0 * w - t);
}

} // namespace

const VehicleUser& World::user(int cell, int index) const {
    return users.at(static_cast<std::size_t>(cell) * scenario.users_per_cell + index);
}

VehicleUser& World::user(int cell, int index) {
    return users.at(static_cast<std::size_t>(cell) * scenario.users_per_cell + index);
}

std::vector<VehicleUser> place_users(const Scenario& scenario, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<VehicleUser> users;
    users.reserve(static_cast<std::size_t>(scenario.cell_count) * scenario.users_per_cell);
    for (int k = 0; k < scenario.cell_count; ++k) {
        const Scenario::CellRect rect = scenario.cell_rect(k);
        for (int n = 0; n < scenario.users_per_cell; ++n) {
            VehicleUser u;
            u.cell = k;
            u.index = n;
            u.position.x = rng.uniform(rect.x0, rect.x1);
            u.position.y = rng.uniform(rect.y0, rect.y1);
            u.position.z = scenario.plane_z(u.position.x);
            u.avg_intensity = rng.uniform_pos() * scenario.sigma_sq_max;
            users.push_back(u);
        }
    }
    return users;
}

World make_world(const Scenario& scenario) {
    World w;
    w.scenario = scenario;
    w.cells.resize(scenario.cell_count);
    for (int k = 0; k < scenario.cell_count; ++k) {
        w.cells[k].bs_position = scenario.cell_rect(k).center_on_plane;
    }
    w.users = place_users(scenario, scenario.placement_seed);
    w.circuit_gain_f0 = circuit_gain(scenario.bs_coil, scenario.vu_coil,
                                     scenario.bs_coil.resonance_frequency_hz,
                                     scenario.permeability);
    return w;
}

void step_mobility(const Scenario& scenario, std::vector<VehicleUser>& users, double dt,
                   RandomStream& mobility_rng, RandomStream& avi_rng, long long step_index) {
    if (!(dt > 0.0)) throw std::invalid_argument("mobility step requires dt > 0");
    const bool refresh_intensity = (step_index + 1) % scenario.avi_update_period == 0;
    for (VehicleUser& u : users) {
        const double heading = mobility_rng.uniform(0.0, 2.0 * M_PI);
        const double speed = mobility_rng.uniform(0.0, scenario.max_velocity_mps);
        u.velocity_x = speed * std::cos(heading);
        u.velocity_y = speed * std::sin(heading);
        const Scenario::CellRect rect = scenario.cell_rect(u.cell);
        u.position.x = reflect_into(u.position.x + u.velocity_x * dt, rect.x0, rect.x1);
        u.position.y = reflect_into(u.position.y + u.velocity_y * dt, rect.y0, rect.y1);
        u.position.z = scenario.plane_z(u.position.x);
        if (refresh_intensity) {
            u.avg_intensity = avi_rng.uniform_pos() * scenario.sigma_sq_max;
        }
    }
}

LinkGeometry link_geometry(const World& world, int tx_cell, const VehicleUser& rx) {
    const Vec3& bs = world.cells.at(tx_cell).bs_position;
    LinkGeometry g;
    g.rx_position = Vec3{rx.position.x - bs.x, rx.position.y - bs.y, rx.position.z - bs.z};
    g.road_gradient_rad = world.scenario.road_gradient_rad();
    g.skin_depth_m = world.scenario.skin_depth_m;
    return g;
}

namespace {

struct LinkTerms {
    double signal = 0.0;       // P·Gco·M²·E(J) of the serving link
    double interference = 0.0; // same, summed over co-channel cells
    // Serving-link factors without the fading mean, for outage and sampling.
    double serving_power_gain = 0.0; // P·Gco·M²
    double serving_orientation = 0.0;
    double serving_intensity = 0.0;
};

LinkTerms link_terms(const World& world, int cell, int n, bool with_interference) {
    const Scenario& scn = world.scenario;
    const VehicleUser& rx = world.user(cell, n);
    LinkTerms t;
    t.serving_intensity = rx.avg_intensity;
    for (int i = 0; i < scn.cell_count; ++i) {
        const CellState& tx = world.cells[i];
        if (tx.channel != n) continue; // TDMA indicator
        const LinkGeometry g = link_geometry(world, i, rx);
        const double m = aligned_mutual_inductance(scn.bs_coil, scn.vu_coil, g, scn.permeability);
        const double phi = background_orientation(g);
        const double power = scn.power_levels_w.at(tx.power_index);
        const double power_gain = power * world.circuit_gain_f0 * m * m;
        if (i == cell) {
            t.serving_power_gain = power_gain;
            t.serving_orientation = phi;
            t.signal = power_gain * expectation_bcs(phi, rx.avg_intensity);
        } else if (with_interference) {
            t.interference += power_gain * expectation_bcs(phi, rx.avg_intensity);
        }
    }
    return t;
}

} // namespace

double sinr(const World& world, int cell, int n) {
    const LinkTerms t = link_terms(world, cell, n, true);
    return t.signal / (world.scenario.noise_psd_w_per_hz + t.interference);
}

double spectral_efficiency(const Scenario& scenario, double sinr_value, double outage) {
    return (1.0 - outage) / scenario.rate_compensation * std::log2(1.0 + sinr_value);
}

double link_outage(const World& world, int cell, int n) {
    const LinkTerms t = link_terms(world, cell, n, true);
    LinkBudget budget;
    budget.tx_psd_w_per_hz = 1.0; // power already folded into the gain product
    budget.aligned_gain = t.serving_power_gain;
    budget.noise_psd_w_per_hz = world.scenario.noise_psd_w_per_hz;
    budget.interferers = {Interferer{1.0, t.interference, 1.0}};
    return outage_probability_bcs(budget, t.serving_orientation, t.serving_intensity,
                                  world.scenario.sinr_threshold);
}

double per_user_rate(const World& world, int cell, int n) {
    if (world.cells.at(cell).channel != n) return 0.0;
    const double snr = sinr(world, cell, n);
    if (snr <= 0.0) return 0.0;
    return spectral_efficiency(world.scenario, snr, link_outage(world, cell, n));
}

double cell_utility(const World& world, int cell) {
    double sum = 0.0;
    for (int n = 0; n < world.scenario.users_per_cell; ++n) {
        sum += per_user_rate(world, cell, n);
    }
    return sum;
}

double no_interference_utility(const World& world, int cell) {
    const int n = world.cells.at(cell).channel;
    const LinkTerms t = link_terms(world, cell, n, false);
    if (t.serving_power_gain <= 0.0) return 0.0;
    const double snr = t.signal / world.scenario.noise_psd_w_per_hz;
    LinkBudget budget;
    budget.tx_psd_w_per_hz = 1.0;
    budget.aligned_gain = t.serving_power_gain;
    budget.noise_psd_w_per_hz = world.scenario.noise_psd_w_per_hz;
    const double outage = outage_probability_bcs(budget, t.serving_orientation,
                                                 t.serving_intensity,
                                                 world.scenario.sinr_threshold);
    return spectral_efficiency(world.scenario, snr, outage);
}

int connected_count(const World& world, int cell) {
    int count = 0;
    const double threshold = world.scenario.sinr_threshold;
    for (int n = 0; n < world.scenario.users_per_cell; ++n) {
        if (world.cells.at(cell).channel != n) continue; // indicator zeroes both sides
        if (sinr(world, cell, n) > threshold) ++count;
    }
    return count;
}

double sampled_cell_utility(const World& world, int cell, RandomStream& rng) {
    const int n = world.cells.at(cell).channel;
    const LinkTerms t = link_terms(world, cell, n, true);
    if (t.serving_power_gain <= 0.0) return 0.0;
    double y = std::sqrt(t.serving_intensity) * rng.gaussian();
    if (y > 1.0) y = 1.0;
    if (y < -1.0) y = -1.0;
    const double j = polarization_gain(y, t.serving_orientation);
    const double snr = t.serving_power_gain * j /
                       (world.scenario.noise_psd_w_per_hz + t.interference);
    return spectral_efficiency(world.scenario, snr, link_outage(world, cell, n));
}

} // namespace vmi
