"""Multicast/secrecy rate regions for IRS-assisted service integration."""

from ._core import (
    ChannelSet,
    ConfigError,
    DomainError,
    PreconditionError,
    ResourceError,
    SolverError,
    boundary_point,
    complexity_estimate,
    feasibility,
    gap_bound_tight,
    load_scenario,
    multi_user_channels,
    multicast_rate,
    multicast_upper_bound,
    oracle,
    parse_scenario,
    run_cli,
    secrecy_rate,
    sweep_region,
    table_i_channels,
)

__all__ = [
    "ChannelSet",
    "ConfigError",
    "DomainError",
    "PreconditionError",
    "ResourceError",
    "SolverError",
    "boundary_point",
    "complexity_estimate",
    "feasibility",
    "gap_bound_tight",
    "load_scenario",
    "multi_user_channels",
    "multicast_rate",
    "multicast_upper_bound",
    "oracle",
    "parse_scenario",
    "run_cli",
    "secrecy_rate",
    "sweep_region",
    "table_i_channels",
]
