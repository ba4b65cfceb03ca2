#include <doctest.h>

#include <cmath>

#include "vmi/geometry.hpp"
#include "vmi/rng.hpp"
#include "oracles.hpp"

using namespace vmi;

namespace {

CoilSpec vu_coil() { return CoilSpec{30, 0.4, 0.0166, 1.0, 10e3}; }
CoilSpec bs_coil() { return CoilSpec{15, 0.6, 0.0166, 1.0, 10e3}; }

// Independent route: the magnetic dipole field in spherical components
// (2cosθ along r̂, sinθ along θ̂) converted to the axial/radial basis.
FieldComponents dipole_field_oracle(const CoilSpec& tx, const LinkGeometry& g, double current) {
    const Vec3& r = g.rx_position;
    const double zeta = std::hypot(r.x, r.y);
    const double d = std::sqrt(zeta * zeta + r.z * r.z);
    const double cos_t = r.z / d;
    const double sin_t = zeta / d;
    const double moment = tx.turns * current * tx.radius_m * tx.radius_m / 4.0;
    const double scale = moment * std::exp(-d / g.skin_depth_m) / (d * d * d);
    FieldComponents h;
    h.axial = scale * (2.0 * cos_t * cos_t - sin_t * sin_t);
    h.radial = scale * 3.0 * sin_t * cos_t;
    return h;
}

} // namespace

TEST_CASE("magnetic field on axis and in plane") {
    const double d = 7.0;
    const LinkGeometry on_axis{{0.0, 0.0, d}, 0.0, 1e6};
    const FieldComponents axial = magnetic_field(bs_coil(), on_axis, 2.0);
    const double scale = bs_coil().turns * 2.0 * 0.36 / (4.0 * d * d * d * std::exp(d / 1e6));
    CHECK(axial.axial == doctest::Approx(2.0 * scale).epsilon(1e-12));
    CHECK(axial.radial == 0.0);

    const LinkGeometry in_plane{{d, 0.0, 0.0}, 0.0, 1e6};
    const FieldComponents planar = magnetic_field(bs_coil(), in_plane, 2.0);
    CHECK(planar.axial == doctest::Approx(-scale).epsilon(1e-12));
    CHECK(planar.radial == 0.0);
    // opposite sign and half magnitude versus the on-axis point
    CHECK(planar.axial * 2.0 == doctest::Approx(-axial.axial).epsilon(1e-12));
}

TEST_CASE("magnetic field matches the dipole-basis oracle") {
    RandomStream rng(41);
    for (int i = 0; i < 50; ++i) {
        LinkGeometry g;
        g.rx_position = {rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};
        if (g.distance() < 0.5) continue;
        g.skin_depth_m = rng.uniform(5.0, 1e3);
        const double current = rng.uniform(0.1, 10.0);
        const FieldComponents got = magnetic_field(bs_coil(), g, current);
        const FieldComponents want = dipole_field_oracle(bs_coil(), g, current);
        CHECK(got.axial == doctest::Approx(want.axial).epsilon(1e-10));
        CHECK(std::abs(got.radial) ==
              doctest::Approx(std::abs(want.radial)).epsilon(1e-10));
    }
}

TEST_CASE("magnetic field rejects the singular point") {
    const LinkGeometry zero{{0.0, 0.0, 0.0}, 0.0, 1e6};
    CHECK_THROWS_AS(magnetic_field(bs_coil(), zero, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(background_orientation(zero), std::invalid_argument);
}

TEST_CASE("aligned mutual inductance on axis") {
    const double z = 12.0;
    const LinkGeometry g{{0.0, 0.0, z}, 0.0, 1e6};
    const double m = aligned_mutual_inductance(bs_coil(), vu_coil(), g);
    const double front = M_PI * kMu0 * 30 * 15 * 0.16 * 0.36 / 4.0;
    CHECK(m == doctest::Approx(front * std::exp(-z / 1e6) * 2.0 / (z * z * z)).epsilon(1e-12));
}

TEST_CASE("aligned mutual inductance is axisymmetric") {
    RandomStream rng(7);
    for (int i = 0; i < 30; ++i) {
        const double zeta = rng.uniform(0.5, 15.0);
        const double z = rng.uniform(-15.0, 15.0);
        const double alpha = rng.uniform(0.0, 2.0 * M_PI);
        const LinkGeometry a{{zeta, 0.0, z}, 0.0, 1e6};
        const LinkGeometry b{{zeta * std::cos(alpha), zeta * std::sin(alpha), z}, 0.0, 1e6};
        CHECK(aligned_mutual_inductance(bs_coil(), vu_coil(), a) ==
              doctest::Approx(aligned_mutual_inductance(bs_coil(), vu_coil(), b)).epsilon(1e-13));
        CHECK(background_orientation(a) ==
              doctest::Approx(background_orientation(b)).epsilon(1e-13));
    }
}

TEST_CASE("mutual inductance agrees with the flux route") {
    // M = μπa²·N_rx·|H|/I with the receiver coil normal on the field, for any
    // drive current. 100 random geometries.
    RandomStream rng(123);
    int checked = 0;
    while (checked < 100) {
        LinkGeometry g;
        g.rx_position = {rng.uniform(-25, 25), rng.uniform(-25, 25), rng.uniform(-25, 25)};
        if (g.distance() < 0.25) continue;
        g.skin_depth_m = rng.uniform(10.0, 1e6);
        const double current = rng.uniform(0.2, 8.0);
        const FieldComponents h = magnetic_field(bs_coil(), g, current);
        const double flux_route = kMu0 * M_PI * vu_coil().radius_m * vu_coil().radius_m *
                                  vu_coil().turns * h.magnitude() / current;
        const double direct = aligned_mutual_inductance(bs_coil(), vu_coil(), g);
        CHECK(direct == doctest::Approx(flux_route).epsilon(1e-10));
        ++checked;
    }
}

TEST_CASE("background orientation") {
    CHECK(background_orientation({{0.0, 0.0, 5.0}, 0.0, 1e6}) == doctest::Approx(0.0));
    CHECK(background_orientation({{5.0, 0.0, 0.0}, 0.0, 1e6}) == doctest::Approx(M_PI));
    // hand evaluation at (3, 4, 5): arccos(25 / sqrt(625 + 5625))
    CHECK(background_orientation({{3.0, 4.0, 5.0}, 0.0, 1e6}) ==
          doctest::Approx(1.249045772).epsilon(1e-9));
    // gradient shifts the angle and bounds it inside [road, π + road]
    RandomStream rng(5);
    for (int i = 0; i < 40; ++i) {
        LinkGeometry g;
        g.rx_position = {rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
        if (g.distance() < 0.1) continue;
        g.road_gradient_rad = rng.uniform(-0.8, 0.8);
        const double phi = background_orientation(g);
        CHECK(phi >= g.road_gradient_rad - 1e-15);
        CHECK(phi <= M_PI + g.road_gradient_rad + 1e-15);
    }
}

TEST_CASE("aligned gain decays monotonically along a ray") {
    const Vec3 dir{1.0, 0.5, -2.0};
    double previous = std::numeric_limits<double>::infinity();
    for (double t : oracle::linspace(2.0, 60.0, 40)) {
        const LinkGeometry g{{dir.x * t, dir.y * t, dir.z * t}, 0.0, 200.0};
        const AlignedChannel ch = aligned_channel(bs_coil(), vu_coil(), g, 10e3);
        CHECK(ch.aligned_gain < previous);
        CHECK(ch.aligned_gain >= 0.0);
        CHECK(ch.circuit_gain > 0.0);
        previous = ch.aligned_gain;
    }
}
