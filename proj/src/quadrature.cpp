#include "vmi/quadrature.hpp"

#include <cmath>

#include "vmi/errors.hpp"

namespace vmi {
namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    int max_depth;
};

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const SimpsonState& st, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm);
    const double frm = (*st.f)(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) {
        return left + right + err / 15.0;
    }
    if (depth >= st.max_depth) {
        throw NumericError("adaptive quadrature failed to converge to tolerance");
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    SimpsonState st{&f, 48};
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, a, b);
    if (!std::isfinite(whole)) {
        throw NumericError("quadrature integrand is not finite");
    }
    return adapt(st, a, b, fa, fm, fb, whole, tol, 0);
}

double integrate_density_below(const std::function<double(double)>& p, double x, double tol) {
    if (x <= 0.0) return 0.0;
    if (x > 1.0) x = 1.0;
    const double hi = std::sqrt(x);
    // Inset 1e-12 keeps u² in the normal floating-point range; the skipped
    // mass is O(1e-12 · sup 2u·p(u²)) and irrelevant against tol.
    const double lo = 1e-12;
    if (hi <= lo) return 0.0;
    return integrate([&p](double u) { return 2.0 * u * p(u * u); }, lo, hi, tol);
}

double integrate_density_mean(const std::function<double(double)>& p, double tol) {
    return integrate([&p](double u) { return 2.0 * u * u * u * p(u * u); }, 1e-12, 1.0, tol);
}

} // namespace vmi
