#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vmi/cell_sim.hpp"
#include "vmi/mc_oracle.hpp"
#include "vmi/q_power.hpp"
#include "vmi/scenario.hpp"

namespace py = pybind11;
using namespace vmi;

PYBIND11_MODULE(vmisim, m) {
    m.doc() = "magnetic-induction vehicle channel model and power-control simulator";

    py::class_<CoilSpec>(m, "CoilSpec")
        .def(py::init([](int turns, double radius_m, double wire_resistivity, double load,
                         double f0) {
                 CoilSpec spec{turns, radius_m, wire_resistivity, load, f0};
                 spec.validate();
                 return spec;
             }),
             py::arg("turns"), py::arg("radius_m"),
             py::arg("wire_resistivity_ohm_per_m") = 0.0166,
             py::arg("load_resistance_ohm") = 1.0, py::arg("resonance_frequency_hz") = 10e3)
        .def_readonly("turns", &CoilSpec::turns)
        .def_readonly("radius_m", &CoilSpec::radius_m);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z);

    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def(py::init([](const Vec3& rx, double road, double skin) {
                 LinkGeometry g{rx, road, skin};
                 g.validate();
                 return g;
             }),
             py::arg("rx_position"), py::arg("road_gradient_rad") = 0.0,
             py::arg("skin_depth_m") = 1e6)
        .def("distance", &LinkGeometry::distance);

    py::class_<AlignedChannel>(m, "AlignedChannel")
        .def_readonly("circuit_gain", &AlignedChannel::circuit_gain)
        .def_readonly("aligned_mutual_inductance", &AlignedChannel::aligned_mutual_inductance)
        .def_readonly("aligned_gain", &AlignedChannel::aligned_gain)
        .def_readonly("background_orientation", &AlignedChannel::background_orientation);

    m.def("coil_resistance", &coil_resistance, py::arg("spec"));
    m.def("coil_inductance", &coil_inductance, py::arg("spec"), py::arg("permeability") = kMu0);
    m.def("tuning_capacitance", &tuning_capacitance, py::arg("spec"),
          py::arg("permeability") = kMu0);
    m.def("circuit_gain", &circuit_gain, py::arg("tx"), py::arg("rx"), py::arg("frequency_hz"),
          py::arg("permeability") = kMu0);
    m.def("aligned_mutual_inductance", &aligned_mutual_inductance, py::arg("tx"), py::arg("rx"),
          py::arg("geometry"), py::arg("permeability") = kMu0);
    m.def("background_orientation", &background_orientation, py::arg("geometry"));
    m.def("aligned_channel", &aligned_channel, py::arg("tx"), py::arg("rx"), py::arg("geometry"),
          py::arg("frequency_hz"), py::arg("permeability") = kMu0);

    m.def("polarization_gain", &polarization_gain, py::arg("offset"), py::arg("orientation_rad"));
    m.def(
        "conjugate_branches",
        [](double x, double phi) {
            const BranchPair b = conjugate_branches(x, phi);
            return std::make_pair(b.plus, b.minus);
        },
        py::arg("intensity"), py::arg("orientation_rad"));
    m.def("stationary_points", &stationary_points, py::arg("orientation_rad"));
    m.def("roots", &roots, py::arg("gain"), py::arg("orientation_rad"));
    m.def("root_derivatives", &root_derivatives, py::arg("gain"), py::arg("orientation_rad"));
    m.def("fold_orientation", &fold_orientation, py::arg("orientation_rad"));

    m.def("cdf_bcs", &cdf_bcs, py::arg("gain"), py::arg("orientation_rad"), py::arg("sigma_sq"));
    m.def(
        "pdf_bcs",
        [](double z, double phi, double s2) {
            const DensityValue d = pdf_bcs(z, phi, s2);
            return std::make_pair(d.density, d.atom_mass);
        },
        py::arg("gain"), py::arg("orientation_rad"), py::arg("sigma_sq"));
    m.def("expectation_bcs", &expectation_bcs, py::arg("orientation_rad"), py::arg("sigma_sq"));
    m.def("bcs_atom_mass", &bcs_atom_mass, py::arg("sigma_sq"));

    py::class_<BoundaryDistribution>(m, "BoundaryDistribution")
        .def_static("from_density", &BoundaryDistribution::from_density, py::arg("density"),
                    py::arg("tol") = 1e-9)
        .def_static("pure_atom", &BoundaryDistribution::pure_atom)
        .def_static("boundary_chi_square", &BoundaryDistribution::boundary_chi_square,
                    py::arg("sigma_sq"))
        .def("atom_mass", &BoundaryDistribution::atom_mass)
        .def("mass_below", &BoundaryDistribution::mass_below, py::arg("x"))
        .def("interior_mean", &BoundaryDistribution::interior_mean);

    m.def("cdf_general", &cdf_general, py::arg("gain"), py::arg("orientation_rad"),
          py::arg("vibration"));
    m.def(
        "pdf_general",
        [](double z, double phi, const BoundaryDistribution& vib) {
            const DensityValue d = pdf_general(z, phi, vib);
            return std::make_pair(d.density, d.atom_mass);
        },
        py::arg("gain"), py::arg("orientation_rad"), py::arg("vibration"));
    m.def("expectation_general", &expectation_general, py::arg("orientation_rad"),
          py::arg("vibration"));

    py::class_<Interferer>(m, "Interferer")
        .def(py::init([](double psd, double gain, double ej) {
                 return Interferer{psd, gain, ej};
             }),
             py::arg("psd_w_per_hz"), py::arg("aligned_gain"), py::arg("expected_fading"));

    py::class_<LinkBudget>(m, "LinkBudget")
        .def(py::init([](double tx, double gain, double noise, std::vector<Interferer> ifs) {
                 LinkBudget b;
                 b.tx_psd_w_per_hz = tx;
                 b.aligned_gain = gain;
                 b.noise_psd_w_per_hz = noise;
                 b.interferers = std::move(ifs);
                 return b;
             }),
             py::arg("tx_psd_w_per_hz"), py::arg("aligned_gain"),
             py::arg("noise_psd_w_per_hz") = 1e-12,
             py::arg("interferers") = std::vector<Interferer>{})
        .def("interference_psd", &LinkBudget::interference_psd);

    m.def("outage_probability", &outage_probability, py::arg("budget"),
          py::arg("orientation_rad"), py::arg("vibration"), py::arg("threshold"));
    m.def("outage_probability_bcs", &outage_probability_bcs, py::arg("budget"),
          py::arg("orientation_rad"), py::arg("sigma_sq"), py::arg("threshold"));

    m.def("sample_nvvo", &mc::sample_nvvo, py::arg("sigma"), py::arg("count"), py::arg("seed"));
    m.def(
        "empirical_cdf",
        [](double sigma, double phi, std::size_t count, std::uint64_t seed,
           const std::vector<double>& grid) {
            return mc::empirical_cdf(mc::sample_gains(sigma, phi, count, seed), grid);
        },
        py::arg("sigma"), py::arg("orientation_rad"), py::arg("count"), py::arg("seed"),
        py::arg("z_grid"));
    m.def(
        "empirical_expectation",
        [](double sigma, double phi, std::size_t count, std::uint64_t seed) {
            const mc::MeanEstimate e =
                mc::empirical_expectation(mc::sample_gains(sigma, phi, count, seed));
            return std::make_pair(e.mean, e.standard_error);
        },
        py::arg("sigma"), py::arg("orientation_rad"), py::arg("count"), py::arg("seed"));
    m.def("empirical_outage", &mc::empirical_outage, py::arg("budget"),
          py::arg("orientation_rad"), py::arg("sigma"), py::arg("threshold"), py::arg("count"),
          py::arg("seed"));

    py::class_<Scenario>(m, "Scenario")
        .def(py::init([]() {
            Scenario s;
            s.validate();
            return s;
        }))
        .def_readwrite("cell_count", &Scenario::cell_count)
        .def_readwrite("users_per_cell", &Scenario::users_per_cell)
        .def_readwrite("frozen_environment", &Scenario::frozen_environment)
        .def("road_gradient_rad", &Scenario::road_gradient_rad);
    m.def("load_scenario", &load_scenario, py::arg("path"));

    py::class_<TraceRow>(m, "TraceRow")
        .def_readonly("iteration", &TraceRow::iteration)
        .def_readonly("cell", &TraceRow::cell)
        .def_readonly("reward", &TraceRow::reward)
        .def_readonly("greedy_utility", &TraceRow::greedy_utility)
        .def_readonly("utility_bound", &TraceRow::utility_bound);

    py::class_<LearningResult>(m, "LearningResult")
        .def_readonly("trace", &LearningResult::trace)
        .def_readonly("final_actions", &LearningResult::final_actions)
        .def_readonly("final_greedy_utility", &LearningResult::final_greedy_utility)
        .def_readonly("stabilized", &LearningResult::stabilized);
    m.def("run_learning", &run_learning, py::arg("scenario"));
}
