//! Shared fixtures for the criterion benches.

use sagin_core::{coverage, DomeGeometry, ScenarioId, ScenarioSpec};

/// Reference dome of each scenario, in `ScenarioId::ALL` order.
pub fn reference_domes() -> Vec<(ScenarioId, DomeGeometry)> {
    ScenarioId::ALL
        .into_iter()
        .map(|id| {
            (
                id,
                coverage(&ScenarioSpec::reference(id)).expect("reference scenarios resolve"),
            )
        })
        .collect()
}
