#include "vmi/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vmi/rng.hpp"

namespace vmi {
namespace mc {

std::vector<double> sample_nvvo(double sigma, std::size_t count, std::uint64_t seed) {
    if (sigma < 0.0) throw std::invalid_argument("sigma must be nonnegative");
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    RandomStream rng(seed);
    std::vector<double> offsets(count);
    for (double& y : offsets) {
        y = sigma * rng.gaussian();
        if (y > 1.0) y = 1.0;
        if (y < -1.0) y = -1.0;
    }
    return offsets;
}

namespace {

SampleBatch gains_from_offsets(std::vector<double> offsets, double orientation_rad,
                               std::uint64_t seed) {
    SampleBatch batch;
    batch.seed = seed;
    batch.orientation_rad = orientation_rad;
    batch.offsets = std::move(offsets);
    batch.gains.resize(batch.offsets.size());
    for (std::size_t i = 0; i < batch.offsets.size(); ++i) {
        batch.gains[i] = polarization_gain(batch.offsets[i], orientation_rad);
    }
    return batch;
}

} // namespace

SampleBatch sample_gains(double sigma, double orientation_rad, std::size_t count,
                         std::uint64_t seed) {
    return gains_from_offsets(sample_nvvo(sigma, count, seed), orientation_rad, seed);
}

SampleBatch sample_gains_inverse_cdf(const std::function<double(double)>& inverse_cdf,
                                     double orientation_rad, std::size_t count,
                                     std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    RandomStream rng(seed);
    std::vector<double> offsets(count);
    for (double& y : offsets) {
        const double magnitude = inverse_cdf(rng.uniform());
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        y = std::clamp(sign * magnitude, -1.0, 1.0);
    }
    return gains_from_offsets(std::move(offsets), orientation_rad, seed);
}

std::vector<double> empirical_cdf(const SampleBatch& batch, const std::vector<double>& z_grid) {
    if (batch.count() == 0) throw std::invalid_argument("empty sample batch");
    std::vector<double> sorted = batch.gains;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out(z_grid.size());
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < z_grid.size(); ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), z_grid[i]);
        out[i] = static_cast<double>(it - sorted.begin()) / n;
    }
    return out;
}

double empirical_atom_fraction(const SampleBatch& batch) {
    if (batch.count() == 0) throw std::invalid_argument("empty sample batch");
    std::size_t hits = 0;
    for (double y : batch.offsets) {
        // Clamped offsets are exactly ±1 and map to the atom gain sin²φ.
        if (std::abs(y) == 1.0) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(batch.count());
}

MeanEstimate empirical_expectation(const SampleBatch& batch) {
    if (batch.count() == 0) throw std::invalid_argument("empty sample batch");
    const double n = static_cast<double>(batch.count());
    double sum = 0.0;
    for (double g : batch.gains) sum += g;
    const double mean = sum / n;
    double ss = 0.0;
    for (double g : batch.gains) ss += (g - mean) * (g - mean);
    const double sd = n > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    return MeanEstimate{mean, sd / std::sqrt(n)};
}

double empirical_outage(const LinkBudget& budget, double orientation_rad, double sigma,
                        double threshold, std::size_t count, std::uint64_t seed) {
    const SampleBatch batch = sample_gains(sigma, orientation_rad, count, seed);
    const double denom = budget.noise_psd_w_per_hz + budget.interference_psd();
    const double signal = budget.tx_psd_w_per_hz * budget.aligned_gain;
    std::size_t outages = 0;
    for (double j : batch.gains) {
        const double sinr = signal * j / denom;
        if (sinr < threshold) ++outages;
    }
    return static_cast<double>(outages) / static_cast<double>(count);
}

} // namespace mc
} // namespace vmi
