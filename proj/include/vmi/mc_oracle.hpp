#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vmi/fading.hpp"

namespace vmi {
namespace mc {

// One reproducible batch of vibration offsets and the gains they map to.
struct SampleBatch {
    std::vector<double> offsets; // Y values in [-1, 1]
    std::vector<double> gains;   // polarization_gain(offset, orientation)
    std::uint64_t seed = 0;
    double orientation_rad = 0.0;

    std::size_t count() const { return gains.size(); }
};

// Draw Y ~ N(0, sigma²) and clamp overshoots to ±1. Clamping, not rejection:
// the probability pushed past the limit must stay there as the boundary atom,
// which truncation would silently delete.
std::vector<double> sample_nvvo(double sigma, std::size_t count, std::uint64_t seed);

// Offsets pushed through the exact gain formula at one orientation.
SampleBatch sample_gains(double sigma, double orientation_rad, std::size_t count,
                         std::uint64_t seed);

// Offsets drawn through a caller-supplied inverse CDF of |Y| mapped to signed
// offsets, for validating non-Gaussian interior laws.
SampleBatch sample_gains_inverse_cdf(const std::function<double(double)>& inverse_cdf,
                                     double orientation_rad, std::size_t count,
                                     std::uint64_t seed);

// Fraction of gains strictly below each grid value.
std::vector<double> empirical_cdf(const SampleBatch& batch, const std::vector<double>& z_grid);

// Fraction of gains exactly at the atom location sin²(orientation).
double empirical_atom_fraction(const SampleBatch& batch);

struct MeanEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
};

MeanEstimate empirical_expectation(const SampleBatch& batch);

// Fraction of sampled instantaneous SINRs below the threshold; the serving
// link's fading is sampled, the interference stays at its expectation.
double empirical_outage(const LinkBudget& budget, double orientation_rad, double sigma,
                        double threshold, std::size_t count, std::uint64_t seed);

} // namespace mc
} // namespace vmi
