#pragma once

#include <utility>
#include <vector>

#include "vmi/boundary.hpp"

namespace vmi {

// Fast-fading polarization gain of one coil link. The instantaneous gain is
// J = cos²(θ+φ) where φ is the background orientation and θ the vibration
// angle; with the normalized offset Y = sinθ it becomes an explicit function
// of Y, and over the intensity X = Y² it splits into two conjugate branches
// indexed by the sign of Y.

// J(Y, φ) = cos²φ(1-Y²) + sin²φ·Y² - 2cosφ·sinφ·Y·sqrt(1-Y²). |Y| <= 1.
double polarization_gain(double offset, double orientation_rad);

struct BranchPair {
    double plus = 0.0;  // gain for the Y >= 0 branch
    double minus = 0.0; // gain for the Y < 0 branch
};

// Both branch values at intensity X in [0, 1]. plus/minus coincide with
// polarization_gain(±sqrt(X), φ); they close the curve at X = 0 (cos²φ) and
// X = 1 (sin²φ) exactly.
BranchPair conjugate_branches(double intensity, double orientation_rad);

// The two stationary offsets of J over Y in [-1, 1]: the first attains gain 1,
// the second gain 0 (orientations reduced mod π into [-π/2, π/2]; exact
// multiples of π/2 return the limiting boundary pair).
std::pair<double, double> stationary_points(double orientation_rad);

// Solutions X_L <= X_H of J(X) = z over the branch representation, clamped to
// [0, 1] against floating-point spill at the band edges.
std::pair<double, double> roots(double gain, double orientation_rad);

// dX_L/dz and dX_H/dz; diverge at z in {0, 1}, which is rejected.
std::pair<double, double> root_derivatives(double gain, double orientation_rad);

// Density value and point mass of a fading-gain PDF evaluation. The mass is
// nonzero only at the atom location sin²φ.
struct DensityValue {
    double density = 0.0;
    double atom_mass = 0.0;
};

// Closed-form law of J for a general boundary-distributed intensity
// (quadrature-backed) and for the chi-square specialization (erf-backed).
double cdf_general(double gain, double orientation_rad, const BoundaryDistribution& vib);
DensityValue pdf_general(double gain, double orientation_rad, const BoundaryDistribution& vib);
double expectation_general(double orientation_rad, const BoundaryDistribution& vib);

// sigma_sq = 0 is the deterministic law J = cos²φ (unit CDF step); negative
// sigma_sq is a domain error.
double cdf_bcs(double gain, double orientation_rad, double sigma_sq);
DensityValue pdf_bcs(double gain, double orientation_rad, double sigma_sq);
double expectation_bcs(double orientation_rad, double sigma_sq);

// Size of the CDF jump at sin²φ under the chi-square law.
double bcs_atom_mass(double sigma_sq);

// Bundled law of one link's fast fading.
struct FadingLaw {
    double background_orientation = 0.0;
    BoundaryDistribution vibration = BoundaryDistribution::pure_atom();

    double atom_location() const; // sin² of the orientation
    double cdf(double gain) const { return cdf_general(gain, background_orientation, vibration); }
    DensityValue pdf(double gain) const { return pdf_general(gain, background_orientation, vibration); }
    double expectation() const { return expectation_general(background_orientation, vibration); }
};

// Deterministic ingredients of one link's SINR.
struct Interferer {
    double psd_w_per_hz = 0.0;
    double aligned_gain = 0.0;
    double expected_fading = 0.0;
};

struct LinkBudget {
    double tx_psd_w_per_hz = 0.0;
    double aligned_gain = 0.0;
    double noise_psd_w_per_hz = 1e-12;
    std::vector<Interferer> interferers;

    double interference_psd() const;
};

// P[SINR < threshold] with the interference taken at its expectation: the CDF
// of J evaluated at threshold·(noise + interference)/(tx·aligned_gain). A dead
// transmit side (zero power or gain) gives outage 1, not an error.
double outage_probability(const LinkBudget& budget, double orientation_rad,
                          const BoundaryDistribution& vib, double threshold);
double outage_probability_bcs(const LinkBudget& budget, double orientation_rad,
                              double sigma_sq, double threshold);

// Orientation folded into [0, π/2]; the law of J depends on φ only through
// sin²φ, cos²φ and |sin 2φ|, all invariant under the fold.
double fold_orientation(double orientation_rad);

} // namespace vmi
