#include "vmi/boundary.hpp"

#include <cmath>
#include <stdexcept>

#include "vmi/quadrature.hpp"

namespace vmi {

BoundaryDistribution BoundaryDistribution::from_density(Density p, double tol) {
    BoundaryDistribution d;
    d.p_ = std::move(p);
    d.has_density_ = true;
    d.quad_tol_ = tol;
    const double interior = integrate_density_below(d.p_, 1.0, tol);
    if (interior < -tol || interior > 1.0 + 1e-6)
        throw std::invalid_argument("boundary distribution: interior mass outside [0, 1]");
    d.atom_mass_ = std::fmin(std::fmax(1.0 - interior, 0.0), 1.0);
    return d;
}

BoundaryDistribution BoundaryDistribution::pure_atom() {
    BoundaryDistribution d;
    d.has_density_ = false;
    d.atom_mass_ = 1.0;
    return d;
}

BoundaryDistribution BoundaryDistribution::boundary_chi_square(double sigma_sq) {
    if (!(sigma_sq > 0.0))
        throw std::domain_error("boundary chi-square requires sigma_sq > 0");
    const double norm = 1.0 / std::sqrt(2.0 * M_PI * sigma_sq);
    const double inv2s = 1.0 / (2.0 * sigma_sq);
    return from_density([norm, inv2s](double x) {
        return norm * std::exp(-x * inv2s) / std::sqrt(x);
    });
}

double BoundaryDistribution::mass_below(double x) const {
    if (!has_density_ || x <= 0.0) return 0.0;
    return integrate_density_below(p_, std::fmin(x, 1.0), quad_tol_);
}

double BoundaryDistribution::interior_mean() const {
    if (!has_density_) return 0.0;
    return integrate_density_mean(p_, quad_tol_);
}

} // namespace vmi
