#include <doctest.h>

#include <cmath>

#include "vmi/coil.hpp"
#include "oracles.hpp"

using namespace vmi;

namespace {

// Reference evaluation coils: 30-turn 0.4 m vehicle coil, 15-turn 0.6 m
// base-station coil, 17-AWG wire, shared resonance at 10 kHz.
CoilSpec vu_coil() { return CoilSpec{30, 0.4, 0.0166, 1.0, 10e3}; }
CoilSpec bs_coil() { return CoilSpec{15, 0.6, 0.0166, 1.0, 10e3}; }

} // namespace

TEST_CASE("coil resistance") {
    CHECK(coil_resistance(vu_coil()) == doctest::Approx(1.251610513).epsilon(1e-9));
    CHECK(coil_resistance(bs_coil()) == doctest::Approx(0.9387078849).epsilon(1e-9));
    // unit cancellation: one turn of radius 1/(2π) and 1 Ω/m
    CoilSpec unit{1, 1.0 / (2.0 * M_PI), 1.0, 1.0, 1.0};
    CHECK(coil_resistance(unit) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coil inductance") {
    CHECK(coil_inductance(vu_coil()) == doctest::Approx(7.106115169e-4).epsilon(1e-9));
    CHECK(coil_inductance(bs_coil()) == doctest::Approx(2.664793188e-4).epsilon(1e-9));
    CoilSpec unit{1, 2.0 / M_PI, 1.0, 1.0, 1.0};
    CHECK(coil_inductance(unit, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tuning capacitance") {
    CHECK(tuning_capacitance(vu_coil()) == doctest::Approx(3.564577172e-7).epsilon(1e-9));
    // (2πf0)²L = 1 makes C = 1
    CoilSpec unit{1, 2.0 / M_PI, 1.0, 1.0, 1.0 / (2.0 * M_PI)};
    CHECK(tuning_capacitance(unit, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    // doubling f0 quarters the capacitance
    CoilSpec twice = vu_coil();
    twice.resonance_frequency_hz *= 2.0;
    CHECK(tuning_capacitance(twice) * 4.0 ==
          doctest::Approx(tuning_capacitance(vu_coil())).epsilon(1e-12));
}

TEST_CASE("impedance cancels at resonance") {
    for (CoilSpec spec : {vu_coil(), bs_coil()}) {
        spec.load_resistance_ohm = 1.25;
        const auto z = coil_impedance(spec, spec.resonance_frequency_hz);
        CHECK(std::abs(z.imag()) / std::abs(z) < 1e-12);
        CHECK(z.real() == doctest::Approx(coil_resistance(spec) + 1.25).epsilon(1e-12));
    }
}

TEST_CASE("circuit gain closed form at resonance") {
    CoilSpec tx = bs_coil();
    CoilSpec rx = vu_coil();
    const double rl = coil_resistance(rx); // load matched to the vehicle coil
    tx.load_resistance_ohm = rl;
    rx.load_resistance_ohm = rl;
    const double got = circuit_gain(tx, rx, 10e3);
    // hand-evaluated (2πf)²·R_L / ((R_rx+R_L)²(R_tx+R_L)) with resistances above
    CHECK(got == doctest::Approx(3.600172347e8).epsilon(1e-8));
    const double rci = coil_resistance(rx);
    const double rcb = coil_resistance(tx);
    const double w = 2.0 * M_PI * 10e3;
    const double hand = w * w * rl / ((rci + rl) * (rci + rl) * (rcb + rl));
    CHECK(got == doctest::Approx(hand).epsilon(1e-12));
}

TEST_CASE("resonance maximizes the circuit gain") {
    CoilSpec tx = bs_coil();
    CoilSpec rx = vu_coil();
    tx.load_resistance_ohm = rx.load_resistance_ohm = coil_resistance(rx);
    const double peak = circuit_gain(tx, rx, 10e3);
    for (double f : oracle::linspace(2e3, 50e3, 481)) {
        if (f == 10e3) continue;
        CHECK(circuit_gain(tx, rx, f) < peak);
    }
}

TEST_CASE("coil validation") {
    CoilSpec bad = vu_coil();
    bad.turns = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = vu_coil();
    bad.radius_m = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = vu_coil();
    bad.resonance_frequency_hz = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
