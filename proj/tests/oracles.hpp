#pragma once

// Test-only helpers kept independent of the library's integration and
// differentiation paths, so the checks below are genuine cross-routes.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// Centered finite difference.
inline double derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double second_difference(const std::function<double(double)>& f, double x, double h) {
    return f(x + h) - 2.0 * f(x) + f(x - h);
}

// Composite Simpson on a fixed grid; deliberately not the library's adaptive
// routine.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / (2 * panels);
    double sum = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i) {
        sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

// ∫_a^b f with the substitution z = a + (b-a)(1-cos(πt))/2, which flattens
// inverse-square-root singularities at both endpoints.
inline double singular_integral(const std::function<double(double)>& f, double a, double b,
                                int panels = 2000) {
    const double w = b - a;
    auto g = [&](double t) {
        const double z = a + w * 0.5 * (1.0 - std::cos(M_PI * t));
        return f(z) * w * 0.5 * M_PI * std::sin(M_PI * t);
    };
    return simpson(g, 0.0, 1.0, panels);
}

inline double binomial_se(double p, double n) {
    return std::sqrt(std::fmax(p * (1.0 - p), 0.0) / n);
}

// Largest |f - g| over a grid.
inline double sup_distance(const std::vector<double>& f, const std::vector<double>& g) {
    double sup = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        sup = std::fmax(sup, std::abs(f[i] - g[i]));
    }
    return sup;
}

inline std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) {
        xs[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
    }
    return xs;
}

} // namespace oracle
