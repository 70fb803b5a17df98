"""HAPS-mounted RIS backhaul simulator."""

from ._core import (
    ConfigError,
    Direction,
    DomainError,
    GeometryError,
    IoError,
    default_config_text,
    elementwise_oracle_snr,
    end_to_end_snr,
    energy_efficiency,
    feasibility_report,
    fspl_db,
    link_geometry,
    los_probability,
    ris_power_consumption,
    run_campaign,
    select_grouping,
    shannon_rate,
    sweep_tx_power,
)

__all__ = [
    "ConfigError",
    "Direction",
    "DomainError",
    "GeometryError",
    "IoError",
    "default_config_text",
    "elementwise_oracle_snr",
    "end_to_end_snr",
    "energy_efficiency",
    "feasibility_report",
    "fspl_db",
    "link_geometry",
    "los_probability",
    "ris_power_consumption",
    "run_campaign",
    "select_grouping",
    "shannon_rate",
    "sweep_tx_power",
]
