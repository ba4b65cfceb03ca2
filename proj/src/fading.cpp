#include "vmi/fading.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vmi {

namespace {

// sin²φ, cos²φ and the band edges for a folded orientation.
struct Bands {
    double sin_sq;
    double cos_sq;
    double lo;
    double hi;
};

Bands bands_for(double folded) {
    Bands b{};
    const double s = std::sin(folded);
    const double c = std::cos(folded);
    b.sin_sq = s * s;
    b.cos_sq = c * c;
    b.lo = std::fmin(b.sin_sq, b.cos_sq);
    b.hi = std::fmax(b.sin_sq, b.cos_sq);
    return b;
}

void check_gain_domain(double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw std::domain_error("fading gain argument must lie in [0, 1]");
}

void check_interior(double z) {
    if (!(z > 0.0 && z < 1.0))
        throw std::domain_error("fading density is defined on the open interval (0, 1)");
}

double erf_mass_below(double x, double sigma_sq) {
    return std::erf(std::sqrt(x / (2.0 * sigma_sq)));
}

// Piecewise CDF assembled from the interior masses below the two roots.
double cdf_from_masses(double z, const Bands& b, double mass_lo_root, double mass_hi_root) {
    if (z >= b.hi) return 1.0 - 0.5 * (mass_hi_root - mass_lo_root);
    if (z < b.lo) return 0.5 * (mass_hi_root - mass_lo_root);
    // middle band: [cos², sin²) takes the half-sum, the mirrored band its complement
    if (b.sin_sq > b.cos_sq) return 0.5 * (mass_lo_root + mass_hi_root);
    return 1.0 - 0.5 * (mass_lo_root + mass_hi_root);
}

bool at_atom(double z, double atom_location) {
    return std::abs(z - atom_location) <= 1e-12;
}

} // namespace

double fold_orientation(double orientation_rad) {
    double r = std::fmod(orientation_rad, M_PI);
    if (r < 0.0) r += M_PI;
    if (r > 0.5 * M_PI) r = M_PI - r;
    return r;
}

double polarization_gain(double offset, double orientation_rad) {
    if (!(offset >= -1.0 && offset <= 1.0))
        throw std::domain_error("normalized vibration offset must lie in [-1, 1]");
    const double c = std::cos(orientation_rad);
    const double s = std::sin(orientation_rad);
    const double y2 = offset * offset;
    const double cross = std::sqrt(1.0 - y2);
    return c * c * (1.0 - y2) + s * s * y2 - 2.0 * c * s * offset * cross;
}

BranchPair conjugate_branches(double intensity, double orientation_rad) {
    if (!(intensity >= 0.0 && intensity <= 1.0))
        throw std::domain_error("vibration intensity must lie in [0, 1]");
    const double y = std::sqrt(intensity);
    return BranchPair{polarization_gain(y, orientation_rad),
                      polarization_gain(-y, orientation_rad)};
}

std::pair<double, double> stationary_points(double orientation_rad) {
    double r = std::remainder(orientation_rad, M_PI); // (-π/2, π/2] up to ties
    if (r > 0.0) return {-std::sin(r), std::cos(r)};
    if (r < 0.0) return {-std::cos(r), -std::sin(r)};
    return {0.0, 1.0}; // aligned: maximum at rest, minimum at the vibration limit
}

std::pair<double, double> roots(double gain, double orientation_rad) {
    check_gain_domain(gain);
    const double folded = fold_orientation(orientation_rad);
    const double c = std::cos(folded); // both nonnegative after the fold
    const double s = std::sin(folded);
    const double a = std::sqrt(1.0 - gain) * c;
    const double b = std::sqrt(gain) * s;
    // Squared form of cos²φ - z·cos2φ ∓ |sin2φ|·sqrt(z(1-z)); it cannot spill
    // below 0 and keeps the small root accurate near the band edges.
    const double lo = (a - b) * (a - b);
    const double hi = (a + b) * (a + b);
    return {std::fmin(lo, 1.0), std::fmin(hi, 1.0)};
}

std::pair<double, double> root_derivatives(double gain, double orientation_rad) {
    check_interior(gain);
    const double folded = fold_orientation(orientation_rad);
    const double cos2 = std::cos(2.0 * folded);
    const double sin2 = std::abs(std::sin(2.0 * folded));
    const double swing = sin2 * (1.0 - 2.0 * gain) / (2.0 * std::sqrt(gain * (1.0 - gain)));
    return {-cos2 - swing, -cos2 + swing};
}

double cdf_general(double gain, double orientation_rad, const BoundaryDistribution& vib) {
    if (gain >= 1.0) return 1.0;
    if (gain < 0.0) return 0.0;
    const double folded = fold_orientation(orientation_rad);
    const Bands b = bands_for(folded);
    const auto [xl, xh] = roots(gain, folded);
    return cdf_from_masses(gain, b, vib.mass_below(xl), vib.mass_below(xh));
}

DensityValue pdf_general(double gain, double orientation_rad, const BoundaryDistribution& vib) {
    check_interior(gain);
    const double folded = fold_orientation(orientation_rad);
    const auto [xl, xh] = roots(gain, folded);
    const auto [dl, dh] = root_derivatives(gain, folded);
    DensityValue out;
    out.density = 0.5 * (std::abs(dl) * vib.density(xl) + std::abs(dh) * vib.density(xh));
    const double atom_location = std::sin(folded) * std::sin(folded);
    if (at_atom(gain, atom_location)) out.atom_mass = vib.atom_mass();
    return out;
}

double expectation_general(double orientation_rad, const BoundaryDistribution& vib) {
    const double folded = fold_orientation(orientation_rad);
    const double s = std::sin(folded);
    const double cos2 = std::cos(2.0 * folded);
    return cos2 * vib.mass_below(1.0) - cos2 * vib.interior_mean() + s * s;
}

double bcs_atom_mass(double sigma_sq) {
    if (sigma_sq < 0.0) throw std::domain_error("average intensity must be nonnegative");
    if (sigma_sq == 0.0) return 0.0;
    return 1.0 - std::erf(std::sqrt(1.0 / (2.0 * sigma_sq)));
}

double cdf_bcs(double gain, double orientation_rad, double sigma_sq) {
    if (sigma_sq < 0.0) throw std::domain_error("average intensity must be nonnegative");
    const double folded = fold_orientation(orientation_rad);
    const Bands b = bands_for(folded);
    if (gain >= 1.0) return 1.0;
    if (gain < 0.0) return 0.0;
    if (sigma_sq == 0.0) {
        // No vibration: the gain is deterministically cos²φ.
        return gain >= b.cos_sq ? 1.0 : 0.0;
    }
    const auto [xl, xh] = roots(gain, folded);
    return cdf_from_masses(gain, b, erf_mass_below(xl, sigma_sq), erf_mass_below(xh, sigma_sq));
}

namespace {

// |X'|·p(X) for the chi-square interior density; finite limit where the small
// root collapses to 0 at z = cos²φ (|X'|/sqrt(X) -> 1/sqrt(sin²φ·cos²φ)).
double bcs_density_term(double x, double dx, double sigma_sq, const Bands& b) {
    const double norm = 1.0 / std::sqrt(2.0 * M_PI * sigma_sq);
    if (x < 1e-280) {
        return norm / std::sqrt(b.sin_sq * b.cos_sq);
    }
    return std::abs(dx) * norm * std::exp(-x / (2.0 * sigma_sq)) / std::sqrt(x);
}

} // namespace

DensityValue pdf_bcs(double gain, double orientation_rad, double sigma_sq) {
    if (!(sigma_sq > 0.0)) throw std::domain_error("average intensity must be positive");
    check_interior(gain);
    const double folded = fold_orientation(orientation_rad);
    const Bands b = bands_for(folded);
    const auto [xl, xh] = roots(gain, folded);
    const auto [dl, dh] = root_derivatives(gain, folded);
    DensityValue out;
    out.density =
        0.5 * (bcs_density_term(xl, dl, sigma_sq, b) + bcs_density_term(xh, dh, sigma_sq, b));
    if (at_atom(gain, b.sin_sq)) out.atom_mass = bcs_atom_mass(sigma_sq);
    return out;
}

double expectation_bcs(double orientation_rad, double sigma_sq) {
    if (!(sigma_sq > 0.0)) throw std::domain_error("average intensity must be positive");
    const double folded = fold_orientation(orientation_rad);
    const double s = std::sin(folded);
    const double cos2 = std::cos(2.0 * folded);
    const double in_range = std::erf(std::sqrt(1.0 / (2.0 * sigma_sq)));
    return (cos2 - sigma_sq * cos2) * in_range +
           std::sqrt(2.0 * sigma_sq / M_PI) * cos2 * std::exp(-1.0 / (2.0 * sigma_sq)) +
           s * s;
}

double FadingLaw::atom_location() const {
    const double s = std::sin(fold_orientation(background_orientation));
    return s * s;
}

double LinkBudget::interference_psd() const {
    double sum = 0.0;
    for (const Interferer& it : interferers) {
        sum += it.psd_w_per_hz * it.aligned_gain * it.expected_fading;
    }
    return sum;
}

namespace {

// CDF argument of the outage expression; +inf for a dead transmit side.
double outage_argument(const LinkBudget& budget, double threshold) {
    const double signal = budget.tx_psd_w_per_hz * budget.aligned_gain;
    if (!(signal > 0.0)) return std::numeric_limits<double>::infinity();
    return threshold * (budget.noise_psd_w_per_hz + budget.interference_psd()) / signal;
}

} // namespace

double outage_probability(const LinkBudget& budget, double orientation_rad,
                          const BoundaryDistribution& vib, double threshold) {
    if (threshold <= 0.0) return 0.0;
    const double arg = outage_argument(budget, threshold);
    if (arg >= 1.0) return 1.0;
    return cdf_general(arg, orientation_rad, vib);
}

double outage_probability_bcs(const LinkBudget& budget, double orientation_rad,
                              double sigma_sq, double threshold) {
    if (threshold <= 0.0) return 0.0;
    const double arg = outage_argument(budget, threshold);
    if (arg >= 1.0) return 1.0;
    return cdf_bcs(arg, orientation_rad, sigma_sq);
}

} // namespace vmi
