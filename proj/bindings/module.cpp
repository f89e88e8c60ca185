// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Python bindings for the planner core: configuration, tiling geometry,
// scenario synthesis, closed-form and Monte Carlo outage, and the altitude
// optimizer. Thin wrappers only; all numerics live in the C++ library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bscat/config.hpp"
#include "bscat/geometry.hpp"
#include "bscat/io.hpp"
#include "bscat/link.hpp"
#include "bscat/mc.hpp"
#include "bscat/optimizer.hpp"
#include "bscat/outage.hpp"
#include "bscat/scenario.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "UAV data-collection planner for backscatter networks";

    py::register_exception<bscat::config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<bscat::infeasible_error>(m, "InfeasibleError", PyExc_RuntimeError);

    py::enum_<bscat::Scheme>(m, "Scheme")
        .value("EQUAL_INTERVAL", bscat::Scheme::EqualInterval)
        .value("UNIFORM", bscat::Scheme::Uniform);
    py::enum_<bscat::Mode>(m, "Mode")
        .value("ANALYTIC", bscat::Mode::Analytic)
        .value("MC", bscat::Mode::Mc);
    py::enum_<bscat::Layout>(m, "Layout")
        .value("BALANCED", bscat::Layout::Balanced)
        .value("PLACED", bscat::Layout::Placed);

    py::class_<bscat::NetworkConfig>(m, "NetworkConfig")
        .def(py::init<>())
        .def_readwrite("n_nodes", &bscat::NetworkConfig::n_nodes)
        .def_readwrite("theta_deg", &bscat::NetworkConfig::theta_deg)
        .def_readwrite("p_u_dbm", &bscat::NetworkConfig::p_u_dbm)
        .def_readwrite("noise_dbm", &bscat::NetworkConfig::noise_dbm)
        .def_readwrite("rate_bps", &bscat::NetworkConfig::rate_bps)
        .def_readwrite("cov_radius_m", &bscat::NetworkConfig::cov_radius_m)
        .def_readwrite("gamma_db", &bscat::NetworkConfig::gamma_db)
        .def_readwrite("alpha", &bscat::NetworkConfig::alpha)
        .def_readwrite("zeta_min", &bscat::NetworkConfig::zeta_min)
        .def_readwrite("zeta_max", &bscat::NetworkConfig::zeta_max)
        .def_readwrite("w_max", &bscat::NetworkConfig::w_max)
        .def_readwrite("shadow_var_db", &bscat::NetworkConfig::shadow_var_db)
        .def_readwrite("subslot_s", &bscat::NetworkConfig::subslot_s)
        .def_readwrite("seed", &bscat::NetworkConfig::seed)
        .def_readwrite("trials", &bscat::NetworkConfig::trials)
        .def_readwrite("scheme", &bscat::NetworkConfig::scheme)
        .def_readwrite("altitude_set", &bscat::NetworkConfig::altitude_set)
        .def("validate", &bscat::NetworkConfig::validate)
        .def("__repr__", [](const bscat::NetworkConfig& c) {
            return "NetworkConfig(n_nodes=" + std::to_string(c.n_nodes) +
                   ", theta_deg=" + bscat::fmt_double(c.theta_deg) +
                   ", gamma_db=" + bscat::fmt_double(c.gamma_db) +
                   ", scheme=" + bscat::to_string(c.scheme) + ")";
        });

    m.def("default_config", &bscat::default_config);
    m.def("load_config", &bscat::load_config, py::arg("path"),
          py::arg("overrides") = std::vector<std::string>{});
    m.def("apply_override", &bscat::apply_override_expr, py::arg("config"), py::arg("expr"),
          "Apply one 'key=value' override to a config in place");

    py::class_<bscat::RingLayout>(m, "RingLayout")
        .def_readonly("radius", &bscat::RingLayout::radius)
        .def_readonly("beta_rad", &bscat::RingLayout::beta_rad)
        .def_readonly("count", &bscat::RingLayout::count);

    py::class_<bscat::TilingPlan>(m, "TilingPlan")
        .def_readonly("altitude", &bscat::TilingPlan::altitude)
        .def_readonly("subregion_radius", &bscat::TilingPlan::subregion_radius)
        .def_readonly("disc_count", &bscat::TilingPlan::disc_count)
        .def_readonly("rings", &bscat::TilingPlan::rings)
        .def_readonly("has_center_subregion", &bscat::TilingPlan::has_center_subregion)
        .def_readonly("centers", &bscat::TilingPlan::centers)
        .def_property_readonly("w", &bscat::TilingPlan::total_subregions);

    m.def("sub_region_radius", &bscat::sub_region_radius, py::arg("h"), py::arg("theta_rad"),
          "Footprint radius h * tan(theta/2)");
    m.def("build_tiling", &bscat::build_tiling, py::arg("h"), py::arg("config"));

    py::class_<bscat::FlightSchedule>(m, "FlightSchedule")
        .def_readonly("waypoints", &bscat::FlightSchedule::waypoints)
        .def_readonly("subslot_s", &bscat::FlightSchedule::subslot_s)
        .def_readonly("total_flight_time", &bscat::FlightSchedule::total_flight_time);

    m.def("flight_schedule", &bscat::flight_schedule, py::arg("plan"), py::arg("subslot_s"));

    py::class_<bscat::LinkRecord>(m, "LinkRecord")
        .def_readonly("node_id", &bscat::LinkRecord::node_id)
        .def_readonly("distance", &bscat::LinkRecord::distance)
        .def_readonly("zeta", &bscat::LinkRecord::zeta);

    py::class_<bscat::SubregionInstance>(m, "SubregionInstance")
        .def_readonly("index", &bscat::SubregionInstance::index)
        .def_readonly("center_x", &bscat::SubregionInstance::center_x)
        .def_readonly("center_y", &bscat::SubregionInstance::center_y)
        .def_readonly("altitude", &bscat::SubregionInstance::altitude)
        .def_readonly("records", &bscat::SubregionInstance::records)
        .def_property_readonly("n_l", &bscat::SubregionInstance::n_l);

    m.def("make_instances", &bscat::make_instances, py::arg("plan"), py::arg("config"),
          py::arg("layout") = bscat::Layout::Balanced);
    m.def("make_single_subregion", &bscat::make_single_subregion, py::arg("n_l"),
          py::arg("altitude"), py::arg("config"), py::arg("variant") = 0);

    py::class_<bscat::LinkParams>(m, "LinkParams")
        .def_static("from_config", &bscat::LinkParams::from, py::arg("config"))
        .def_readonly("p_u_w", &bscat::LinkParams::p_u_w)
        .def_readonly("noise_w", &bscat::LinkParams::noise_w)
        .def_readonly("alpha", &bscat::LinkParams::alpha)
        .def_readonly("sigma_db", &bscat::LinkParams::sigma_db)
        .def_readonly("gamma_linear", &bscat::LinkParams::gamma_linear);

    py::class_<bscat::SubregionOutage>(m, "SubregionOutage")
        .def_readonly("decode_probs", &bscat::SubregionOutage::decode_probs)
        .def_readonly("outage", &bscat::SubregionOutage::outage);

    m.def("subregion_outage", &bscat::subregion_outage, py::arg("instance"), py::arg("params"),
          "Closed-form outage of one sub-region instance");

    py::class_<bscat::McEstimate>(m, "McEstimate")
        .def_readonly("outage_hat", &bscat::McEstimate::outage_hat)
        .def_readonly("trials", &bscat::McEstimate::trials)
        .def_readonly("std_err", &bscat::McEstimate::std_err)
        .def_readonly("ci99", &bscat::McEstimate::ci99);

    m.def("mc_subregion_outage", &bscat::mc_subregion_outage, py::arg("instance"),
          py::arg("params"), py::arg("trials"), py::arg("seed"),
          "Monte Carlo outage of one sub-region instance");

    py::class_<bscat::SweepRow>(m, "SweepRow")
        .def_readonly("altitude", &bscat::SweepRow::altitude)
        .def_readonly("w", &bscat::SweepRow::w)
        .def_readonly("n_l", &bscat::SweepRow::n_l)
        .def_readonly("outage", &bscat::SweepRow::outage)
        .def_readonly("bits", &bscat::SweepRow::bits)
        .def_readonly("throughput_bps", &bscat::SweepRow::throughput_bps)
        .def_readonly("throughput_std_err", &bscat::SweepRow::throughput_std_err);

    py::class_<bscat::AltitudeSweep>(m, "AltitudeSweep")
        .def_readonly("rows", &bscat::AltitudeSweep::rows)
        .def_readonly("skipped", &bscat::AltitudeSweep::skipped);

    py::class_<bscat::Optimum>(m, "Optimum")
        .def_readonly("h_star", &bscat::Optimum::h_star)
        .def_readonly("c_star_bps", &bscat::Optimum::c_star_bps)
        .def_readonly("sweep", &bscat::Optimum::sweep);

    m.def("evaluate_altitude", &bscat::evaluate_altitude, py::arg("h"), py::arg("config"),
          py::arg("mode"), py::arg("layout") = bscat::Layout::Balanced);
    m.def("network_throughput", &bscat::network_throughput, py::arg("h"), py::arg("config"),
          py::arg("mode"), "Frame-normalized throughput at one altitude in bit/s");
    m.def(
        "sweep_altitudes",
        [](const std::vector<double>& altitudes, const bscat::NetworkConfig& cfg,
           bscat::Mode mode) { return bscat::sweep_altitudes(altitudes, cfg, mode); },
        py::arg("altitudes"), py::arg("config"), py::arg("mode"));
    m.def("optimize_altitude", &bscat::optimize_altitude, py::arg("config"), py::arg("mode"),
          "Exhaustive search over config.altitude_set");
    m.def("altitude_set_for_theta", &bscat::altitude_set_for_theta, py::arg("theta_deg"),
          py::arg("config"));
}
