#pragma once

#include <vector>

#include "vmi/fading.hpp"
#include "vmi/rng.hpp"
#include "vmi/scenario.hpp"

namespace vmi {

struct VehicleUser {
    int cell = 0;
    int index = 0;            // also its TDMA sub-channel (slot n serves user n)
    Vec3 position;            // on the sloped plane, inside its cell rectangle
    double velocity_x = 0.0;  // m/s, redrawn each mobility step
    double velocity_y = 0.0;
    double avg_intensity = 0.5; // σ² of the vibration offset, in (0, 1]
};

struct CellState {
    Vec3 bs_position;     // cell center on the plane
    int channel = 0;      // allocated sub-channel, 0-based
    int power_index = 0;  // index into scenario.power_levels_w
    int connected = 0;    // users currently above the SINR threshold
};

// Immutable-between-steps snapshot of the network. All per-link quantities are
// derived on demand from coil physics and the fading law; nothing is cached
// across mutations.
struct World {
    Scenario scenario;
    std::vector<CellState> cells;
    std::vector<VehicleUser> users;
    double circuit_gain_f0 = 0.0;

    const VehicleUser& user(int cell, int index) const;
    VehicleUser& user(int cell, int index);
};

// Uniform placement of users_per_cell users in every cell rectangle (the
// point-process count is conditioned per cell), with initial vibration
// intensities uniform on (0, sigma_sq_max].
std::vector<VehicleUser> place_users(const Scenario& scenario, std::uint64_t seed);

World make_world(const Scenario& scenario);

// One random-walk step: fresh uniform heading, speed uniform on
// [0, max_velocity], reflection off the cell boundary, z re-projected onto
// the plane. Every avi_update_period steps the intensities are redrawn.
void step_mobility(const Scenario& scenario, std::vector<VehicleUser>& users, double dt,
                   RandomStream& mobility_rng, RandomStream& avi_rng, long long step_index);

// Geometry of the link from cell tx_cell's base station to a user.
LinkGeometry link_geometry(const World& world, int tx_cell, const VehicleUser& rx);

// Expected SINR of user (cell, n) under the current allocations: expected
// fading on the serving and interfering links, TDMA indicators applied.
double sinr(const World& world, int cell, int n);

// ((1 - outage) / rate_compensation) · log2(1 + sinr)
double spectral_efficiency(const Scenario& scenario, double sinr_value, double outage);

// Outage of the serving link for user (cell, n) at the scenario threshold.
double link_outage(const World& world, int cell, int n);

// Rate of one user including its outage compensation; zero when the cell is
// not transmitting on the user's sub-channel.
double per_user_rate(const World& world, int cell, int n);

// Sum of per_user_rate over the cell's users.
double cell_utility(const World& world, int cell);

// Same with every other cell silenced; interference can only reduce utility,
// so this bounds cell_utility from above.
double no_interference_utility(const World& world, int cell);

// Number of sub-channels whose allocated user clears the SINR threshold.
int connected_count(const World& world, int cell);

// Utility with the serving links' fading sampled instead of averaged
// (interference keeps its expectation). Used by the sampled-reward mode.
double sampled_cell_utility(const World& world, int cell, RandomStream& rng);

} // namespace vmi
