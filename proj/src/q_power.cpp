#include "vmi/q_power.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "vmi/csv.hpp"
#include "vmi/errors.hpp"

namespace vmi {

QTable::QTable(int users_per_cell, const ActionSpace& space)
    : space_(space),
      power_states_(space.power_levels),
      state_count_((users_per_cell + 1) * space.power_levels),
      values_(static_cast<std::size_t>(state_count_) * space.size(), 0.0),
      visits_(static_cast<std::size_t>(state_count_) * space.size(), 0) {}

int QTable::state_id(int connected, int power_index) const {
    return connected * power_states_ + power_index;
}

double QTable::value(int state, int action) const {
    return values_.at(static_cast<std::size_t>(state) * space_.size() + action);
}

long long QTable::visits(int state, int action) const {
    return visits_.at(static_cast<std::size_t>(state) * space_.size() + action);
}

int QTable::argmax(int state) const {
    const std::size_t base = static_cast<std::size_t>(state) * space_.size();
    int best = 0;
    double best_value = values_[base];
    for (int a = 1; a < space_.size(); ++a) {
        if (values_[base + a] > best_value) {
            best_value = values_[base + a];
            best = a;
        }
    }
    return best;
}

double QTable::max_value(int state) const { return value(state, argmax(state)); }

double QTable::update(int state, int action, double reward, int next_state,
                      const LearningConfig& config, long long t) {
    if (!std::isfinite(reward)) throw std::invalid_argument("non-finite reward");
    const double alpha = config.learning_rate(t);
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("learning rate must lie in (0, 1)");
    const std::size_t slot = static_cast<std::size_t>(state) * space_.size() + action;
    const double target = reward + config.discount * max_value(next_state);
    const double delta = alpha * (target - values_.at(slot));
    values_[slot] += delta;
    ++visits_[slot];
    return std::abs(delta);
}

int select_action(const QTable& table, int state, const LearningConfig& config,
                  RandomStream& rng) {
    if (rng.uniform() < config.greedy_probability) return table.argmax(state);
    return static_cast<int>(rng.below(table.action_count()));
}

const TraceRow& LearningResult::row(long long iteration, int cell) const {
    return trace.at(static_cast<std::size_t>(iteration) * world.scenario.cell_count + cell);
}

namespace {

void apply_action(World& world, int cell, int action, const ActionSpace& space) {
    world.cells[cell].channel = space.channel_of(action);
    world.cells[cell].power_index = space.power_of(action);
}

std::vector<double> joint_utilities(World& world, const std::vector<int>& actions,
                                    const ActionSpace& space) {
    for (int k = 0; k < world.scenario.cell_count; ++k) apply_action(world, k, actions[k], space);
    std::vector<double> u(world.scenario.cell_count);
    for (int k = 0; k < world.scenario.cell_count; ++k) u[k] = cell_utility(world, k);
    return u;
}

} // namespace

double trailing_cv(const std::vector<double>& series, std::size_t window) {
    if (series.empty()) return std::numeric_limits<double>::infinity();
    const std::size_t n = std::min(window, series.size());
    const std::size_t start = series.size() - n;
    double mean = 0.0;
    for (std::size_t i = start; i < series.size(); ++i) mean += series[i];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = start; i < series.size(); ++i) {
        var += (series[i] - mean) * (series[i] - mean);
    }
    var /= static_cast<double>(n);
    if (mean == 0.0) return var == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(var) / std::abs(mean);
}

LearningResult run_learning(const Scenario& scenario) {
    const int K = scenario.cell_count;
    const ActionSpace space{scenario.users_per_cell,
                            static_cast<int>(scenario.power_levels_w.size())};

    LearningResult result;
    result.world = make_world(scenario);
    World& world = result.world;

    result.qtables.assign(K, QTable(scenario.users_per_cell, space));
    std::vector<RandomStream> exploration;
    std::vector<RandomStream> reward_sampling;
    exploration.reserve(K);
    for (int k = 0; k < K; ++k) {
        exploration.push_back(RandomStream::child(scenario.exploration_seed, k));
        reward_sampling.push_back(RandomStream::child(scenario.avi_seed, 1000 + k));
    }
    RandomStream mobility_rng(scenario.mobility_seed);
    RandomStream avi_rng(scenario.avi_seed);

    std::vector<int> states(K, result.qtables[0].state_id(0, 0));
    std::vector<int> actions(K, 0);
    std::vector<std::vector<double>> greedy_series(K);
    result.trace.reserve(static_cast<std::size_t>(scenario.learning.iterations) * K);

    for (long long t = 0; t < scenario.learning.iterations; ++t) {
        if (!scenario.frozen_environment && t > 0) {
            step_mobility(scenario, world.users, 1.0, mobility_rng, avi_rng, t - 1);
        }
        for (int k = 0; k < K; ++k) {
            actions[k] = select_action(result.qtables[k], states[k], scenario.learning,
                                       exploration[k]);
            apply_action(world, k, actions[k], space);
        }
        for (int k = 0; k < K; ++k) {
            world.cells[k].connected = connected_count(world, k);
        }
        std::vector<TraceRow> rows(K);
        for (int k = 0; k < K; ++k) {
            const double bound = no_interference_utility(world, k);
            const double reward = scenario.sampled_reward
                                      ? sampled_cell_utility(world, k, reward_sampling[k])
                                      : cell_utility(world, k);
            if (reward > bound * (1.0 + 1e-9) + 1e-12) {
                throw std::logic_error("cell reward exceeded its no-interference bound");
            }
            const int next_state = result.qtables[k].state_id(world.cells[k].connected,
                                                              space.power_of(actions[k]));
            const double delta = result.qtables[k].update(states[k], actions[k], reward,
                                                          next_state, scenario.learning, t);
            states[k] = next_state;
            rows[k].iteration = t;
            rows[k].cell = k;
            rows[k].action_channel = space.channel_of(actions[k]) + 1;
            rows[k].action_power_w = scenario.power_levels_w[space.power_of(actions[k])];
            rows[k].connected = world.cells[k].connected;
            rows[k].reward = reward;
            rows[k].max_q_delta = delta;
            rows[k].utility_bound = bound;
        }
        // Utility the current greedy joint profile would earn on this snapshot.
        std::vector<int> greedy(K);
        for (int k = 0; k < K; ++k) greedy[k] = result.qtables[k].argmax(states[k]);
        World scratch = world;
        const std::vector<double> greedy_utits = joint_utilities(scratch, greedy, space);
        for (int k = 0; k < K; ++k) {
            rows[k].greedy_utility = greedy_utits[k];
            greedy_series[k].push_back(greedy_utits[k]);
            result.trace.push_back(rows[k]);
        }
    }

    // Extract the greedy fixed point: follow greedy actions until the
    // (state, action) profile repeats.
    std::vector<int> greedy_states = states;
    std::vector<int> greedy_actions(K, 0);
    for (int round = 0; round < 64; ++round) {
        std::vector<int> chosen(K);
        for (int k = 0; k < K; ++k) chosen[k] = result.qtables[k].argmax(greedy_states[k]);
        for (int k = 0; k < K; ++k) apply_action(world, k, chosen[k], space);
        bool fixed = true;
        for (int k = 0; k < K; ++k) {
            const int connected = connected_count(world, k);
            const int next = result.qtables[k].state_id(connected, space.power_of(chosen[k]));
            if (next != greedy_states[k] || chosen[k] != greedy_actions[k]) fixed = false;
            greedy_states[k] = next;
            greedy_actions[k] = chosen[k];
        }
        if (fixed) break;
    }
    result.final_actions = greedy_actions;
    {
        World scratch = world;
        result.final_greedy_utility = joint_utilities(scratch, greedy_actions, space);
    }
    result.stabilized.resize(K);
    for (int k = 0; k < K; ++k) {
        result.stabilized[k] = trailing_cv(greedy_series[k], 50) < 0.05;
    }
    return result;
}

std::vector<double> deviation_utilities(const World& world, int cell) {
    const ActionSpace space{world.scenario.users_per_cell,
                            static_cast<int>(world.scenario.power_levels_w.size())};
    std::vector<double> utilities(space.size());
    World scratch = world;
    for (int a = 0; a < space.size(); ++a) {
        apply_action(scratch, cell, a, space);
        utilities[a] = cell_utility(scratch, cell);
    }
    return utilities;
}

bool certify_nash_equilibrium(const World& world, const std::vector<int>& actions,
                              double rel_gain) {
    const ActionSpace space{world.scenario.users_per_cell,
                            static_cast<int>(world.scenario.power_levels_w.size())};
    World scratch = world;
    for (int k = 0; k < world.scenario.cell_count; ++k) {
        apply_action(scratch, k, actions.at(k), space);
    }
    for (int k = 0; k < world.scenario.cell_count; ++k) {
        const std::vector<double> utilities = deviation_utilities(scratch, k);
        const double own = utilities.at(actions[k]);
        for (double u : utilities) {
            if (u > own * (1.0 + rel_gain) + 1e-15) return false;
        }
    }
    return true;
}

void save_qtables(const std::string& path, const std::vector<QTable>& tables) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open q-table file: " + path);
    out << "# vmi-qtable v1\n";
    out << "cell state action value visits\n";
    for (std::size_t k = 0; k < tables.size(); ++k) {
        const QTable& q = tables[k];
        for (int s = 0; s < q.state_count(); ++s) {
            for (int a = 0; a < q.action_count(); ++a) {
                if (q.visits(s, a) == 0 && q.value(s, a) == 0.0) continue;
                out << k << ' ' << s << ' ' << a << ' ' << format_number(q.value(s, a)) << ' '
                    << q.visits(s, a) << '\n';
            }
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<QTable> load_qtables(const std::string& path, int users_per_cell,
                                 const ActionSpace& space) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open q-table file: " + path);
    std::vector<QTable> tables;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("cell ", 0) == 0) continue;
        std::istringstream row(line);
        std::size_t cell;
        int state, action;
        double value;
        long long visits;
        if (!(row >> cell >> state >> action >> value >> visits))
            throw IoError("malformed q-table row in " + path + ": " + line);
        while (tables.size() <= cell) tables.emplace_back(users_per_cell, space);
        QTable& q = tables[cell];
        if (state < 0 || state >= q.state_count() || action < 0 || action >= q.action_count())
            throw IoError("q-table row out of range in " + path + ": " + line);
        q.raw_values()[static_cast<std::size_t>(state) * q.action_count() + action] = value;
        q.raw_visits()[static_cast<std::size_t>(state) * q.action_count() + action] = visits;
    }
    return tables;
}

} // namespace vmi
