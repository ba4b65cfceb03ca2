#pragma once

#include "vmi/coil.hpp"

namespace vmi {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Receiver placement relative to a transmitter coil at the origin whose axis
// is the z direction. Distances in meters, angles in radians.
struct LinkGeometry {
    Vec3 rx_position;              // must not be the zero vector
    double road_gradient_rad = 0;  // slope term added to the field angle
    double skin_depth_m = 1e6;     // default is an effectively lossless medium

    double distance() const;
    void validate() const; // throws std::invalid_argument when d == 0 or skin depth <= 0
};

// Near-field components at the receiver location, in the plane spanned by the
// coil axis and the in-plane radial direction ζ = sqrt(x²+y²).
struct FieldComponents {
    double axial = 0.0;   // along the transmitter coil axis (z)
    double radial = 0.0;  // along ζ, within the horizontal plane
    double magnitude() const;
};

// Magnetic field of the transmitter coil carrying `current_a`, decaying as
// exp(-d/δ)/d³ times the dipole angular pattern.
FieldComponents magnetic_field(const CoilSpec& tx, const LinkGeometry& geometry,
                               double current_a);

// Mutual inductance between the transmitter coil and a receiver coil whose
// normal is aligned with the field (the orientation-independent factor).
double aligned_mutual_inductance(const CoilSpec& tx, const CoilSpec& rx,
                                 const LinkGeometry& geometry,
                                 double permeability = kMu0);

// Angle between the field direction and the coil normal before any vibration:
// arccos of the normalized axial component, plus the road gradient.
double background_orientation(const LinkGeometry& geometry);

// Deterministic large-scale part of one link.
struct AlignedChannel {
    double circuit_gain = 0.0;               // electrical factor
    double aligned_mutual_inductance = 0.0;  // H
    double aligned_gain = 0.0;               // circuit_gain · M²
    double background_orientation = 0.0;     // rad
};

AlignedChannel aligned_channel(const CoilSpec& tx, const CoilSpec& rx,
                               const LinkGeometry& geometry, double frequency_hz,
                               double permeability = kMu0);

} // namespace vmi
