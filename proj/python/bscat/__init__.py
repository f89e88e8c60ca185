"""UAV data-collection planner for backscatter networks.

Thin Python facade over the C++ core: tiling geometry, per-sub-region
outage (closed-form log-normal chain or Monte Carlo) and exhaustive
altitude optimization.
"""

from bscat._core import (
    AltitudeSweep,
    ConfigError,
    FlightSchedule,
    InfeasibleError,
    Layout,
    LinkParams,
    LinkRecord,
    McEstimate,
    Mode,
    NetworkConfig,
    Optimum,
    RingLayout,
    Scheme,
    SubregionInstance,
    SubregionOutage,
    SweepRow,
    TilingPlan,
    altitude_set_for_theta,
    apply_override,
    build_tiling,
    default_config,
    evaluate_altitude,
    flight_schedule,
    load_config,
    make_instances,
    make_single_subregion,
    mc_subregion_outage,
    network_throughput,
    optimize_altitude,
    sub_region_radius,
    subregion_outage,
    sweep_altitudes,
)

__all__ = [
    "AltitudeSweep",
    "ConfigError",
    "FlightSchedule",
    "InfeasibleError",
    "Layout",
    "LinkParams",
    "LinkRecord",
    "McEstimate",
    "Mode",
    "NetworkConfig",
    "Optimum",
    "RingLayout",
    "Scheme",
    "SubregionInstance",
    "SubregionOutage",
    "SweepRow",
    "TilingPlan",
    "altitude_set_for_theta",
    "apply_override",
    "build_tiling",
    "default_config",
    "evaluate_altitude",
    "flight_schedule",
    "load_config",
    "make_instances",
    "make_single_subregion",
    "mc_subregion_outage",
    "network_throughput",
    "optimize_altitude",
    "sub_region_radius",
    "subregion_outage",
    "sweep_altitudes",
]

__version__ = "0.1.0"
