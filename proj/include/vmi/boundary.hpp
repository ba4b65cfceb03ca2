#pragma once

#include <functional>

namespace vmi {

// Law of the vibration intensity X on [0, 1]: a density p(x) on the open
// interval plus a point mass at the boundary x = 1 holding whatever
// probability the underlying disturbance pushes past the mechanical limit.
// The atom is always carried explicitly; no Dirac spike is ever evaluated
// as a float.
//
// All integrals here go through adaptive quadrature, including for the
// chi-square factory. The erf closed forms are implemented independently in
// fading.hpp so the two routes stay comparable.
class BoundaryDistribution {
public:
    using Density = std::function<double(double)>;

    // atom_mass = 1 - ∫₀¹ p, computed by quadrature. Throws NumericError when
    // the density cannot be integrated and std::invalid_argument when the
    // interior mass exceeds 1 beyond tolerance.
    static BoundaryDistribution from_density(Density p, double tol = 1e-9);

    // Degenerate law with all probability in the boundary atom.
    static BoundaryDistribution pure_atom();

    // Interior part of the chi-square intensity law with mean sigma_sq:
    // p(x) = exp(-x/(2·sigma_sq)) / sqrt(2π·sigma_sq·x). Requires sigma_sq > 0.
    static BoundaryDistribution boundary_chi_square(double sigma_sq);

    double density(double x) const { return has_density_ ? p_(x) : 0.0; }
    double atom_mass() const { return atom_mass_; }
    bool has_density() const { return has_density_; }

    // ∫₀ˣ p(t) dt for x in [0, 1], by adaptive quadrature with the t = u²
    // substitution that tames 1/sqrt(t) singularities at 0.
    double mass_below(double x) const;

    // ∫₀¹ t·p(t) dt.
    double interior_mean() const;

    static constexpr double lower_bound() { return 0.0; }
    static constexpr double upper_bound() { return 1.0; }

private:
    BoundaryDistribution() = default;

    Density p_;
    bool has_density_ = false;
    double atom_mass_ = 1.0;
    double quad_tol_ = 1e-9;
};

} // namespace vmi
