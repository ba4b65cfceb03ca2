#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vmi/cell_sim.hpp"
#include "vmi/csv.hpp"
#include "vmi/errors.hpp"
#include "vmi/fading.hpp"
#include "vmi/mc_oracle.hpp"
#include "vmi/q_power.hpp"
#include "vmi/scenario.hpp"

namespace {

using namespace vmi;

constexpr double kDegToRad = M_PI / 180.0;

struct CommonOptions {
    std::string scenario_path;
    std::string out_path;
    std::uint64_t seed = 7;
    bool seed_given = false;
    std::size_t samples = 5000;
    int grid = 201;
};

Scenario load_or_default(const CommonOptions& opt) {
    Scenario scn = opt.scenario_path.empty() ? Scenario{} : load_scenario(opt.scenario_path);
    if (opt.scenario_path.empty()) scn.validate();
    if (opt.seed_given) {
        scn.placement_seed = opt.seed;
        scn.mobility_seed = opt.seed + 1;
        scn.exploration_seed = opt.seed + 2;
        scn.avi_seed = opt.seed + 3;
    }
    return scn;
}

std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) {
        xs[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
    }
    return xs;
}

double atom_location(double phi_rad) {
    const double s = std::sin(fold_orientation(phi_rad));
    return s * s;
}

int cmd_cdf(const CommonOptions& opt) {
    const Scenario scn = load_or_default(opt);
    CsvWriter csv(opt.out_path, "cdf.v1", {"phi_deg", "sigma", "z", "kind", "value", "atom_mass"});
    for (double phi_deg : scn.fading_phis_deg) {
        const double phi = phi_deg * kDegToRad;
        for (double sigma : scn.fading_sigmas) {
            const double s2 = sigma * sigma;
            for (double z : linspace(0.0, 1.0, opt.grid)) {
                csv.begin_row();
                csv.add(phi_deg);
                csv.add(sigma);
                csv.add(z);
                csv.add(std::string("curve"));
                csv.add(cdf_bcs(z, phi, s2));
                csv.add(0.0);
                csv.end_row();
            }
            const double mass = bcs_atom_mass(s2);
            if (mass > 0.0) {
                csv.begin_row();
                csv.add(phi_deg);
                csv.add(sigma);
                csv.add(atom_location(phi));
                csv.add(std::string("atom"));
                csv.add(cdf_bcs(atom_location(phi), phi, s2));
                csv.add(mass);
                csv.end_row();
            }
        }
    }
    csv.flush();
    return 0;
}

int cmd_pdf(const CommonOptions& opt) {
    const Scenario scn = load_or_default(opt);
    CsvWriter csv(opt.out_path, "pdf.v1",
                  {"phi_deg", "sigma", "z", "kind", "density", "atom_mass"});
    for (double phi_deg : scn.fading_phis_deg) {
        const double phi = phi_deg * kDegToRad;
        for (double sigma : scn.fading_sigmas) {
            const double s2 = sigma * sigma;
            if (s2 == 0.0) {
                // Vibration-free law: a single point mass at the rest gain.
                const double c = std::cos(fold_orientation(phi));
                csv.begin_row();
                csv.add(phi_deg);
                csv.add(sigma);
                csv.add(c * c);
                csv.add(std::string("atom"));
                csv.add(0.0);
                csv.add(1.0);
                csv.end_row();
                continue;
            }
            const std::vector<double> zs = linspace(0.0, 1.0, opt.grid);
            for (std::size_t i = 1; i + 1 < zs.size(); ++i) {
                const DensityValue d = pdf_bcs(zs[i], phi, s2);
                csv.begin_row();
                csv.add(phi_deg);
                csv.add(sigma);
                csv.add(zs[i]);
                csv.add(std::string("curve"));
                csv.add(d.density);
                csv.add(0.0);
                csv.end_row();
            }
            csv.begin_row();
            csv.add(phi_deg);
            csv.add(sigma);
            csv.add(atom_location(phi));
            csv.add(std::string("atom"));
            csv.add(0.0);
            csv.add(bcs_atom_mass(s2));
            csv.end_row();
        }
    }
    csv.flush();
    return 0;
}

int cmd_expectation(const CommonOptions& opt) {
    const Scenario scn = load_or_default(opt);
    std::vector<std::string> columns = {"sigma_sq"};
    for (double phi_deg : scn.fading_phis_deg) {
        columns.push_back("E_phi_" + format_number(phi_deg));
    }
    CsvWriter csv(opt.out_path, "expectation.v1", columns);
    for (double s2 : linspace(0.0, scn.sigma_sq_max, opt.grid)) {
        csv.begin_row();
        csv.add(s2);
        for (double phi_deg : scn.fading_phis_deg) {
            const double phi = phi_deg * kDegToRad;
            if (s2 == 0.0) {
                const double c = std::cos(fold_orientation(phi));
                csv.add(c * c); // deterministic limit law
            } else {
                csv.add(expectation_bcs(phi, s2));
            }
        }
        csv.end_row();
    }
    csv.flush();
    return 0;
}

int cmd_spatial_map(const CommonOptions& opt) {
    const Scenario scn = load_or_default(opt);
    const double s2 = scn.map_sigma * scn.map_sigma;
    const double road = scn.link_road_gradient_deg * kDegToRad;
    CsvWriter csv(opt.out_path, "spatial-map.v1",
                  {"kind", "a", "b", "phi_rad", "expectation", "expectation_novib"});
    auto emit = [&](const std::string& kind, double a, double b, const Vec3& rx) {
        csv.begin_row();
        csv.add(kind);
        csv.add(a);
        csv.add(b);
        if (rx.x == 0.0 && rx.y == 0.0 && rx.z == 0.0) {
            // singular point at the base station
            csv.add(std::numeric_limits<double>::quiet_NaN());
            csv.add(std::numeric_limits<double>::quiet_NaN());
            csv.add(std::numeric_limits<double>::quiet_NaN());
            csv.end_row();
            return;
        }
        LinkGeometry g{rx, road, scn.skin_depth_m};
        const double phi = background_orientation(g);
        const double c = std::cos(fold_orientation(phi));
        csv.add(phi);
        csv.add(s2 > 0.0 ? expectation_bcs(phi, s2) : c * c);
        csv.add(c * c);
        csv.end_row();
    };
    const std::vector<double> axis = linspace(-scn.map_extent_m, scn.map_extent_m, scn.map_points);
    for (double x : axis) {
        for (double y : axis) {
            emit("horizontal", x, y, Vec3{x, y, scn.map_depth_m});
        }
    }
    for (double x : axis) {
        for (double z : axis) {
            emit("vertical", x, z, Vec3{x, 0.0, z});
        }
    }
    csv.flush();
    return 0;
}

LinkBudget single_link_budget(const Scenario& scn, const AlignedChannel& ch, double power_w) {
    LinkBudget budget;
    budget.tx_psd_w_per_hz = power_w;
    budget.aligned_gain = ch.aligned_gain;
    budget.noise_psd_w_per_hz = scn.noise_psd_w_per_hz;
    return budget;
}

int cmd_outage_sweep(const CommonOptions& opt) {
    const Scenario scn = load_or_default(opt);
    const AlignedChannel ch =
        aligned_channel(scn.bs_coil, scn.vu_coil, scn.single_link_geometry(),
                        scn.bs_coil.resonance_frequency_hz, scn.permeability);
    CsvWriter csv(opt.out_path, "outage-sweep.v1",
                  {"kind", "power_w", "sigma_sq", "outage"});
    for (double power : scn.outage_powers_w) {
        const LinkBudget budget = single_link_budget(scn, ch, power);
        for (double s2 : linspace(0.0, scn.outage_sigma_sq_max, scn.outage_sigma_points)) {
            csv.begin_row();
            csv.add(std::string("sigma_sweep"));
            csv.add(power);
            csv.add(s2);
            csv.add(outage_probability_bcs(budget, ch.background_orientation, s2,
                                           scn.outage_threshold));
            csv.end_row();
        }
    }
    for (double sigma : scn.outage_fixed_sigmas) {
        const double s2 = sigma * sigma;
        for (double power :
             linspace(scn.outage_power_min_w, scn.outage_power_max_w, scn.outage_power_points)) {
            const LinkBudget budget = single_link_budget(scn, ch, power);
            csv.begin_row();
            csv.add(std::string("power_sweep"));
            csv.add(power);
            csv.add(s2);
            csv.add(outage_probability_bcs(budget, ch.background_orientation, s2,
                                           scn.outage_threshold));
            csv.end_row();
        }
    }
    csv.flush();
    return 0;
}

int cmd_oracle_compare(const CommonOptions& opt) {
    const Scenario scn = load_or_default(opt);
    const std::size_t n = opt.samples;
    const double nd = static_cast<double>(n);
    CsvWriter csv(opt.out_path, "oracle-compare.v1",
                  {"check", "phi_deg", "sigma", "z", "closed_form", "empirical", "diff", "gate",
                   "pass"});
    bool all_pass = true;
    auto emit = [&](const std::string& check, double phi_deg, double sigma, double z,
                    double closed, double empirical, double gate) {
        const double diff = std::abs(closed - empirical);
        const bool pass = diff <= gate;
        all_pass = all_pass && pass;
        csv.begin_row();
        csv.add(check);
        csv.add(phi_deg);
        csv.add(sigma);
        csv.add(z);
        csv.add(closed);
        csv.add(empirical);
        csv.add(diff);
        csv.add(gate);
        csv.add(std::string(pass ? "1" : "0"));
        csv.end_row();
    };
    auto binomial_gate = [&](double p) {
        return 3.0 * std::sqrt(std::max(p * (1.0 - p), 0.0) / nd) + 1e-9;
    };
    const double ks_gate = 2.12 / std::sqrt(nd); // 0.03 at the reference 5000 samples
    std::uint64_t stream = opt.seed;
    const std::vector<double> zs = linspace(0.0, 1.0, opt.grid);
    for (double phi_deg : scn.fading_phis_deg) {
        const double phi = phi_deg * kDegToRad;
        for (double sigma : scn.fading_sigmas) {
            const double s2 = sigma * sigma;
            const mc::SampleBatch batch = mc::sample_gains(sigma, phi, n, stream++);
            const std::vector<double> emp = mc::empirical_cdf(batch, zs);
            double sup = 0.0;
            double sup_z = 0.0;
            for (std::size_t i = 0; i < zs.size(); ++i) {
                const double closed = cdf_bcs(zs[i], phi, s2);
                const double d = std::abs(closed - emp[i]);
                emit("cdf_point", phi_deg, sigma, zs[i], closed, emp[i], 1.0);
                if (d > sup) {
                    sup = d;
                    sup_z = zs[i];
                }
            }
            emit("cdf_sup_distance", phi_deg, sigma, sup_z, 0.0, sup, ks_gate);
            const double atom = s2 > 0.0 ? bcs_atom_mass(s2) : 0.0;
            emit("atom_mass", phi_deg, sigma, atom_location(phi), atom,
                 mc::empirical_atom_fraction(batch), binomial_gate(atom));
            const mc::MeanEstimate mean = mc::empirical_expectation(batch);
            const double closed_mean =
                s2 > 0.0 ? expectation_bcs(phi, s2)
                         : std::pow(std::cos(fold_orientation(phi)), 2);
            emit("expectation", phi_deg, sigma, 0.0, closed_mean, mean.mean,
                 3.0 * mean.standard_error + 1e-9);
        }
    }
    // Outage on the configured single link, first configured power.
    const AlignedChannel ch =
        aligned_channel(scn.bs_coil, scn.vu_coil, scn.single_link_geometry(),
                        scn.bs_coil.resonance_frequency_hz, scn.permeability);
    const LinkBudget budget = single_link_budget(scn, ch, scn.outage_powers_w.front());
    for (double sigma : scn.fading_sigmas) {
        if (sigma <= 0.0) continue;
        const double s2 = sigma * sigma;
        const double closed = outage_probability_bcs(budget, ch.background_orientation, s2,
                                                     scn.outage_threshold);
        const double empirical =
            mc::empirical_outage(budget, ch.background_orientation, sigma, scn.outage_threshold,
                                 n, stream++);
        emit("outage", ch.background_orientation / kDegToRad, sigma, 0.0, closed, empirical,
             binomial_gate(closed));
    }
    csv.flush();
    if (!all_pass) {
        std::cerr << "oracle-compare: at least one comparison exceeded its gate\n";
        return 3;
    }
    return 0;
}

int cmd_learn(const CommonOptions& opt, int iterations_override,
              const std::string& qtable_out) {
    Scenario scn = load_or_default(opt);
    if (iterations_override > 0) scn.learning.iterations = iterations_override;
    const LearningResult result = run_learning(scn);
    CsvWriter csv(opt.out_path, "learn-trace.v1",
                  {"iteration", "cell", "action_channel", "action_power_w", "n_co", "reward",
                   "max_q_delta", "greedy_utility", "utility_bound"});
    for (const TraceRow& row : result.trace) {
        csv.begin_row();
        csv.add(row.iteration);
        csv.add(row.cell);
        csv.add(row.action_channel);
        csv.add(row.action_power_w);
        csv.add(row.connected);
        csv.add(row.reward);
        csv.add(row.max_q_delta);
        csv.add(row.greedy_utility);
        csv.add(row.utility_bound);
        csv.end_row();
    }
    csv.flush();
    if (!qtable_out.empty()) save_qtables(qtable_out, result.qtables);
    const ActionSpace space{scn.users_per_cell, static_cast<int>(scn.power_levels_w.size())};
    bool all_stable = true;
    for (int k = 0; k < scn.cell_count; ++k) {
        const int a = result.final_actions[k];
        std::cout << "cell " << k << ": channel " << space.channel_of(a) + 1 << ", power "
                  << format_number(scn.power_levels_w[space.power_of(a)]) << " W, utility "
                  << format_number(result.final_greedy_utility[k])
                  << (result.stabilized[k] ? " [stable]" : " [not stable]") << "\n";
        all_stable = all_stable && result.stabilized[k];
    }
    std::cout << (all_stable ? "converged: yes" : "converged: no") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"magnetic-induction vehicle channel and power-control simulator"};
    app.require_subcommand(1);

    CommonOptions opt;
    int iterations_override = 0;
    std::string qtable_out;

    auto add_common = [&](CLI::App* cmd, bool needs_out = true) {
        cmd->add_option("--scenario", opt.scenario_path, "scenario file (built-in defaults if omitted)");
        auto* out = cmd->add_option("--out", opt.out_path, "output CSV path");
        if (needs_out) out->required();
        cmd->add_option("--seed", opt.seed, "master seed override")
            ->each([&](const std::string&) { opt.seed_given = true; });
        cmd->add_option("--samples", opt.samples, "Monte Carlo sample count");
        cmd->add_option("--grid", opt.grid, "number of grid points per curve")
            ->check(CLI::Range(3, 1000000));
    };

    auto* cdf = app.add_subcommand("cdf", "closed-form fading CDF curves");
    add_common(cdf);
    auto* pdf = app.add_subcommand("pdf", "closed-form fading PDF curves with explicit atoms");
    add_common(pdf);
    auto* expectation = app.add_subcommand("expectation", "expected fading gain over intensity sweeps");
    add_common(expectation);
    auto* map = app.add_subcommand("spatial-map", "expected gain around a base station");
    add_common(map);
    auto* outage = app.add_subcommand("outage-sweep", "outage probability sweeps");
    add_common(outage);
    auto* oracle = app.add_subcommand("oracle-compare", "closed forms against Monte Carlo estimates");
    add_common(oracle);
    auto* learn = app.add_subcommand("learn", "multiagent power-control learning run");
    add_common(learn);
    learn->add_option("--iterations", iterations_override, "override scenario iteration count");
    learn->add_option("--save-qtables", qtable_out, "write final Q tables to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cdf->parsed()) return cmd_cdf(opt);
        if (pdf->parsed()) return cmd_pdf(opt);
        if (expectation->parsed()) return cmd_expectation(opt);
        if (map->parsed()) return cmd_spatial_map(opt);
        if (outage->parsed()) return cmd_outage_sweep(opt);
        if (oracle->parsed()) return cmd_oracle_compare(opt);
        if (learn->parsed()) return cmd_learn(opt, iterations_override, qtable_out);
    } catch (const vmi::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const vmi::NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const vmi::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
