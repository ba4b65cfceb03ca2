#include "vmi/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace vmi {

double LinkGeometry::distance() const {
    return std::sqrt(rx_position.x * rx_position.x + rx_position.y * rx_position.y +
                     rx_position.z * rx_position.z);
}

void LinkGeometry::validate() const {
    if (!(distance() > 0.0))
        throw std::invalid_argument("link geometry: receiver coincides with transmitter");
    if (!(skin_depth_m > 0.0))
        throw std::invalid_argument("link geometry: skin depth must be positive");
}

double FieldComponents::magnitude() const {
    return std::hypot(axial, radial);
}

FieldComponents magnetic_field(const CoilSpec& tx, const LinkGeometry& geometry,
                               double current_a) {
    geometry.validate();
    const Vec3& r = geometry.rx_position;
    const double zeta2 = r.x * r.x + r.y * r.y;
    const double z2 = r.z * r.z;
    const double d2 = zeta2 + z2;
    const double d = std::sqrt(d2);
    const double scale = tx.turns * current_a * tx.radius_m * tx.radius_m /
                         (4.0 * d * d2 * std::exp(d / geometry.skin_depth_m));
    FieldComponents h;
    h.axial = scale * (2.0 * z2 - zeta2) / d2;
    h.radial = scale * 3.0 * std::sqrt(zeta2) * r.z / d2;
    return h;
}

double aligned_mutual_inductance(const CoilSpec& tx, const CoilSpec& rx,
                                 const LinkGeometry& geometry, double permeability) {
    geometry.validate();
    const Vec3& r = geometry.rx_position;
    const double zeta2 = r.x * r.x + r.y * r.y;
    const double z2 = r.z * r.z;
    const double d2 = zeta2 + z2;
    const double d = std::sqrt(d2);
    const double axial = 2.0 * z2 - zeta2;
    const double angular = std::sqrt(axial * axial + 9.0 * zeta2 * z2);
    const double front = M_PI * permeability * rx.turns * tx.turns * rx.radius_m *
                         rx.radius_m * tx.radius_m * tx.radius_m / 4.0;
    return front * std::exp(-d / geometry.skin_depth_m) * angular / (d2 * d2 * d);
}

double background_orientation(const LinkGeometry& geometry) {
    geometry.validate();
    const Vec3& r = geometry.rx_position;
    const double zeta2 = r.x * r.x + r.y * r.y;
    const double z2 = r.z * r.z;
    const double axial = 2.0 * z2 - zeta2;
    const double norm = std::sqrt(axial * axial + 9.0 * zeta2 * z2);
    return std::acos(axial / norm) + geometry.road_gradient_rad;
}

AlignedChannel aligned_channel(const CoilSpec& tx, const CoilSpec& rx,
                               const LinkGeometry& geometry, double frequency_hz,
                               double permeability) {
    AlignedChannel ch;
    ch.circuit_gain = circuit_gain(tx, rx, frequency_hz, permeability);
    ch.aligned_mutual_inductance = aligned_mutual_inductance(tx, rx, geometry, permeability);
    ch.aligned_gain = ch.circuit_gain * ch.aligned_mutual_inductance * ch.aligned_mutual_inductance;
    ch.background_orientation = background_orientation(geometry);
    return ch;
}

} // namespace vmi
