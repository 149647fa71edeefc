"""Monte Carlo simulator and analysis toolkit for hierarchical CFO
synchronization in distributed massive MIMO-OFDMA uplinks."""

from ._core import (
    CdfTable,
    CfoEstimate,
    DeviceId,
    SpeedPoint,
    SubcarrierMap,
    SystemConfig,
    Topology,
    TrialResult,
    Vec2,
    __version__,
    complexity_hfs,
    complexity_music_baseline,
    complexity_pbee,
    count_estimations,
    doppler_mse_integral,
    estimate_cfo,
    generate_topology,
    make_cdf,
    make_map,
    mse_simplified,
    pathloss_db,
    run_experiment,
    theory_vs_sim,
    true_cfo,
)

__all__ = [
    "CdfTable",
    "CfoEstimate",
    "DeviceId",
    "SpeedPoint",
    "SubcarrierMap",
    "SystemConfig",
    "Topology",
    "TrialResult",
    "Vec2",
    "__version__",
    "complexity_hfs",
    "complexity_music_baseline",
    "complexity_pbee",
    "count_estimations",
    "doppler_mse_integral",
    "estimate_cfo",
    "generate_topology",
    "make_cdf",
    "make_map",
    "mse_simplified",
    "pathloss_db",
    "run_experiment",
    "theory_vs_sim",
    "true_cfo",
]
