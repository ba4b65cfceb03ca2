#pragma once

#include <string>
#include <vector>

#include "vmi/cell_sim.hpp"

namespace vmi {

// Joint channel/power action set of one agent. Actions are ordered
// lexicographically by (channel, power index); ties in value resolve to the
// lowest id, so learning runs are reproducible.
struct ActionSpace {
    int channels = 1;
    int power_levels = 1;

    int size() const { return channels * power_levels; }
    int id(int channel, int power_index) const { return channel * power_levels + power_index; }
    int channel_of(int action) const { return action / power_levels; }
    int power_of(int action) const { return action % power_levels; }
};

// Dense table over states (connected count, previous power index) × actions.
// Initialized to zero: convergence holds from any starting profile and zeros
// keep runs bit-reproducible.
class QTable {
public:
    QTable(int users_per_cell, const ActionSpace& space);

    int state_id(int connected, int power_index) const;
    int state_count() const { return state_count_; }
    int action_count() const { return space_.size(); }
    const ActionSpace& space() const { return space_; }

    double value(int state, int action) const;
    long long visits(int state, int action) const;
    int argmax(int state) const; // lowest action id on ties
    double max_value(int state) const;

    // One tabular update: Q(s,a) += α·(reward + γ·max_a' Q(s',a') - Q(s,a)).
    // Returns the absolute change. Rejects non-finite rewards and α outside
    // (0, 1). No other entry is touched.
    double update(int state, int action, double reward, int next_state,
                  const LearningConfig& config, long long t);

    std::vector<double>& raw_values() { return values_; }
    const std::vector<double>& raw_values() const { return values_; }
    const std::vector<long long>& raw_visits() const { return visits_; }
    std::vector<long long>& raw_visits() { return visits_; }

private:
    ActionSpace space_;
    int power_states_;
    int state_count_;
    std::vector<double> values_;
    std::vector<long long> visits_;
};

// ε-greedy selection: the argmax with probability greedy_probability,
// otherwise uniform over the whole action set.
int select_action(const QTable& table, int state, const LearningConfig& config,
                  RandomStream& rng);

struct TraceRow {
    long long iteration = 0;
    int cell = 0;
    int action_channel = 0;      // 1-based in reports
    double action_power_w = 0.0;
    int connected = 0;
    double reward = 0.0;
    double max_q_delta = 0.0;
    double greedy_utility = 0.0; // utility of the joint greedy profile
    double utility_bound = 0.0;  // no-interference ceiling for this cell
};

struct LearningResult {
    std::vector<TraceRow> trace; // cell-major within each iteration
    std::vector<QTable> qtables;
    std::vector<int> final_actions;          // greedy fixed point per agent
    std::vector<double> final_greedy_utility;
    std::vector<bool> stabilized;            // last-window CV below 5%
    World world;                             // state after the final iteration

    const TraceRow& row(long long iteration, int cell) const;
};

// Lock-step multiagent loop: per iteration the environment advances (unless
// frozen), every agent picks and applies an action against the same snapshot,
// SINRs and rewards are measured jointly, and each agent updates its own
// table. Throws if a reward ever exceeds the cell's no-interference bound.
LearningResult run_learning(const Scenario& scenario);

// Utility of every unilateral deviation of `cell`, holding the other cells'
// applied strategies fixed. Index i is the utility under action i.
std::vector<double> deviation_utilities(const World& world, int cell);

// True when no agent can raise its utility by more than rel_gain by
// deviating alone.
bool certify_nash_equilibrium(const World& world, const std::vector<int>& actions,
                              double rel_gain = 0.01);

// Flat text snapshots (cell, state, action, value, visits per row).
void save_qtables(const std::string& path, const std::vector<QTable>& tables);
std::vector<QTable> load_qtables(const std::string& path, int users_per_cell,
                                 const ActionSpace& space);

// Coefficient of variation of the greedy-utility trace over the trailing
// window; the stabilization measure for learning runs.
double trailing_cv(const std::vector<double>& series, std::size_t window);

} // namespace vmi
