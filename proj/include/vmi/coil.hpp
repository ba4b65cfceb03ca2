#pragma once

#include <complex>

namespace vmi {

inline constexpr double kMu0 = 4.0e-7 * 3.14159265358979323846; // H/m, free space

// Electrical and geometric description of one resonant coil antenna.
// The load resistance enters both the own-side impedance and the power
// delivered at the receiver, mirroring how the series circuit is driven.
struct CoilSpec {
    int turns = 1;                          // N, full winding count
    double radius_m = 0.1;                  // a
    double wire_resistivity_ohm_per_m = 0.0166;
    double load_resistance_ohm = 1.0;       // R_L
    double resonance_frequency_hz = 10e3;   // f0, capacitor tuning target

    void validate() const; // throws std::invalid_argument on bad fields
};

// R = 2·N·π·a·ρ_w
double coil_resistance(const CoilSpec& spec);

// L = ½·π·N²·a·μ
double coil_inductance(const CoilSpec& spec, double permeability = kMu0);

// C = 1 / ((2π f0)² L); tunes the series resonance at f0.
double tuning_capacitance(const CoilSpec& spec, double permeability = kMu0);

// Series impedance j2πfL + 1/(j2πfC) + R_coil + R_L at frequency f.
// The reactive parts cancel exactly at f = f0.
std::complex<double> coil_impedance(const CoilSpec& spec, double frequency_hz,
                                    double permeability = kMu0);

// Circuit factor of the link power gain: |(2πf)² R_L / (Z_rx² Z_tx)| with
// R_L the receiver load. Maximal at the shared resonance frequency.
double circuit_gain(const CoilSpec& tx, const CoilSpec& rx, double frequency_hz,
                    double permeability = kMu0);

} // namespace vmi
