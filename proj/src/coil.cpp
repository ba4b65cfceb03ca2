#include "vmi/coil.hpp"

#include <cmath>
#include <stdexcept>

namespace vmi {

void CoilSpec::validate() const {
    if (turns < 1) throw std::invalid_argument("coil turns must be >= 1");
    if (!(radius_m > 0.0)) throw std::invalid_argument("coil radius must be positive");
    if (!(wire_resistivity_ohm_per_m > 0.0))
        throw std::invalid_argument("wire resistivity must be positive");
    if (!(load_resistance_ohm >= 0.0))
        throw std::invalid_argument("load resistance must be nonnegative");
    if (!(resonance_frequency_hz > 0.0))
        throw std::invalid_argument("resonance frequency must be positive");
}

double coil_resistance(const CoilSpec& spec) {
    return 2.0 * spec.turns * M_PI * spec.radius_m * spec.wire_resistivity_ohm_per_m;
}

double coil_inductance(const CoilSpec& spec, double permeability) {
    return 0.5 * M_PI * static_cast<double>(spec.turns) * spec.turns * spec.radius_m *
           permeability;
}

double tuning_capacitance(const CoilSpec& spec, double permeability) {
    const double w0 = 2.0 * M_PI * spec.resonance_frequency_hz;
    return 1.0 / (w0 * w0 * coil_inductance(spec, permeability));
}

std::complex<double> coil_impedance(const CoilSpec& spec, double frequency_hz,
                                    double permeability) {
    if (!(frequency_hz > 0.0)) throw std::invalid_argument("frequency must be positive");
    const double w = 2.0 * M_PI * frequency_hz;
    const double L = coil_inductance(spec, permeability);
    const double C = tuning_capacitance(spec, permeability);
    const std::complex<double> jwL(0.0, w * L);
    const std::complex<double> cap(0.0, -1.0 / (w * C));
    return jwL + cap + coil_resistance(spec) + spec.load_resistance_ohm;
}

double circuit_gain(const CoilSpec& tx, const CoilSpec& rx, double frequency_hz,
                    double permeability) {
    const std::complex<double> ztx = coil_impedance(tx, frequency_hz, permeability);
    const std::complex<double> zrx = coil_impedance(rx, frequency_hz, permeability);
    const double w = 2.0 * M_PI * frequency_hz;
    return std::abs(w * w * rx.load_resistance_ohm / (zrx * zrx * ztx));
}

} // namespace vmi
