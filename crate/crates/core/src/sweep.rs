//! Parameter sweeps over a scenario and the node-count arithmetic built on
//! coverage areas.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::DomeGeometry;
use crate::scenario::{coverage, Direction, Layer, Receiver, ScenarioSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweptParameter {
    /// Hz; beam-limited scenarios only.
    CarrierFrequency,
    /// Radians; elevation-limited scenarios only.
    MinElevation,
    /// km; scenarios with an aerial layer.
    AirAltitude,
    /// km; scenarios with a space layer.
    SpaceAltitude,
}

impl SweptParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweptParameter::CarrierFrequency => "carrier_frequency",
            SweptParameter::MinElevation => "min_elevation",
            SweptParameter::AirAltitude => "air_altitude",
            SweptParameter::SpaceAltitude => "space_altitude",
        }
    }

    pub fn applies_to(self, spec: &ScenarioSpec) -> bool {
        match self {
            SweptParameter::CarrierFrequency => spec.direction() == Direction::Uplink,
            SweptParameter::MinElevation => spec.direction() == Direction::Downlink,
            SweptParameter::AirAltitude => spec.id.involves(Layer::Air),
            SweptParameter::SpaceAltitude => spec.id.involves(Layer::Space),
        }
    }

    /// Copy of `spec` with this parameter set to `value`.
    pub fn apply(self, spec: &ScenarioSpec, value: f64) -> ScenarioSpec {
        let mut out = *spec;
        match (self, &mut out.receiver) {
            (SweptParameter::CarrierFrequency, Receiver::Beam(antenna)) => {
                antenna.carrier_frequency_hz = value;
            }
            (SweptParameter::MinElevation, Receiver::Elevation { min_elevation_rad }) => {
                *min_elevation_rad = value;
            }
            (SweptParameter::AirAltitude, _) => out.air_altitude_km = Some(value),
            (SweptParameter::SpaceAltitude, _) => out.space_altitude_km = Some(value),
            _ => {}
        }
        out
    }
}

impl fmt::Display for SweptParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweptParameter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            SweptParameter::CarrierFrequency,
            SweptParameter::MinElevation,
            SweptParameter::AirAltitude,
            SweptParameter::SpaceAltitude,
        ]
        .into_iter()
        .find(|p| p.name() == s)
        .ok_or_else(|| format!("unknown sweep parameter `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Scale {
    #[default]
    Linear,
    Logarithmic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: ScenarioSpec,
    pub parameter: SweptParameter,
    pub range: (f64, f64),
    pub steps: usize,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let (low, high) = self.range;
        if !self.parameter.applies_to(&self.base) {
            return Err(Error::Inapplicable {
                parameter: self.parameter.name(),
                scenario: self.base.id,
            });
        }
        if !(low.is_finite() && high.is_finite() && low < high) {
            return Err(Error::InvalidParameter {
                name: "range",
                value: high - low,
                reason: "sweep range must satisfy low < high",
            });
        }
        if self.steps < 2 {
            return Err(Error::InvalidParameter {
                name: "steps",
                value: self.steps as f64,
                reason: "a sweep needs at least two steps",
            });
        }
        if self.scale == Scale::Logarithmic && low <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "range",
                value: low,
                reason: "logarithmic sweeps need a positive lower bound",
            });
        }
        Ok(())
    }

    /// Grid values in increasing order; both endpoints are hit exactly.
    pub fn grid(&self) -> Vec<f64> {
        let (low, high) = self.range;
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == 0 {
                    return low;
                }
                if i == last {
                    return high;
                }
                let t = i as f64 / last as f64;
                match self.scale {
                    Scale::Linear => low + t * (high - low),
                    Scale::Logarithmic => (low.ln() + t * (high.ln() - low.ln())).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub parameter_value: f64,
    /// Failure at one grid point does not abort the sweep.
    pub outcome: Result<DomeGeometry>,
}

impl SweepRow {
    pub fn vertex_angle_rad(&self) -> Option<f64> {
        self.outcome.as_ref().ok().map(|d| d.vertex_angle_rad)
    }

    pub fn area_km2(&self) -> Option<f64> {
        self.outcome.as_ref().ok().map(|d| d.area_km2)
    }

    pub fn tangent_limited(&self) -> bool {
        self.outcome
            .as_ref()
            .map(|d| d.tangent_limited)
            .unwrap_or(false)
    }
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    Ok(spec
        .grid()
        .into_iter()
        .map(|value| SweepRow {
            parameter_value: value,
            outcome: coverage(&spec.parameter.apply(&spec.base, value)),
        })
        .collect())
}

/// `(λ·A, ⌊λ·A⌋)`: the expected transmitter count in a dome and the Poisson
/// mean the sampler actually uses.
pub fn expected_count(dome: &DomeGeometry, density_per_km2: f64) -> (f64, u64) {
    let product = density_per_km2 * dome.area_km2;
    (product, product.max(0.0).floor() as u64)
}

/// Nodes on a whole sphere of radius `radius_km` at the given density.
pub fn full_sphere_count(radius_km: f64, density_per_km2: f64) -> f64 {
    4.0 * std::f64::consts::PI * radius_km * radius_km * density_per_km2
}

/// Rough capacity of a two-hop relay: the product of the per-hop counts.
/// Nothing about routing is modelled.
pub fn relay_path_count(count_hop1: f64, count_hop2: f64) -> f64 {
    count_hop1 * count_hop2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::ScenarioId;

    fn sweep(
        id: ScenarioId,
        parameter: SweptParameter,
        range: (f64, f64),
        steps: usize,
        scale: Scale,
    ) -> SweepSpec {
        SweepSpec {
            base: ScenarioSpec::reference(id),
            parameter,
            range,
            steps,
            scale,
        }
    }

    fn areas(rows: &[SweepRow]) -> Vec<f64> {
        rows.iter().map(|r| r.area_km2().unwrap()).collect()
    }

    #[test]
    fn frequency_sweep_decreases() {
        let spec = sweep(
            ScenarioId::G2S,
            SweptParameter::CarrierFrequency,
            (2e9, 40e9),
            50,
            Scale::Logarithmic,
        );
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 50);
        assert_eq!(rows[0].parameter_value, 2e9);
        assert_eq!(rows[49].parameter_value, 40e9);
        assert!(areas(&rows).windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn elevation_sweep_decreases() {
        let spec = sweep(
            ScenarioId::S2G,
            SweptParameter::MinElevation,
            (5f64.to_radians(), 30f64.to_radians()),
            26,
            Scale::Linear,
        );
        let rows = run_sweep(&spec).unwrap();
        assert!(areas(&rows).windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn two_steps_hit_endpoints() {
        let spec = sweep(
            ScenarioId::A2G,
            SweptParameter::AirAltitude,
            (1.0, 50.0),
            2,
            Scale::Linear,
        );
        let values: Vec<f64> = run_sweep(&spec)
            .unwrap()
            .iter()
            .map(|r| r.parameter_value)
            .collect();
        assert_eq!(values, [1.0, 50.0]);
    }

    #[test]
    fn invalid_sweeps() {
        let bad = sweep(
            ScenarioId::G2S,
            SweptParameter::MinElevation,
            (0.1, 0.2),
            5,
            Scale::Linear,
        );
        assert!(matches!(run_sweep(&bad), Err(Error::Inapplicable { .. })));
        let bad = sweep(
            ScenarioId::G2S,
            SweptParameter::AirAltitude,
            (1.0, 2.0),
            5,
            Scale::Linear,
        );
        assert!(matches!(run_sweep(&bad), Err(Error::Inapplicable { .. })));
        let bad = sweep(
            ScenarioId::S2G,
            SweptParameter::MinElevation,
            (0.2, 0.1),
            5,
            Scale::Linear,
        );
        assert!(run_sweep(&bad).is_err());
        let bad = sweep(
            ScenarioId::S2G,
            SweptParameter::MinElevation,
            (0.1, 0.2),
            1,
            Scale::Linear,
        );
        assert!(run_sweep(&bad).is_err());
        let bad = sweep(
            ScenarioId::S2G,
            SweptParameter::SpaceAltitude,
            (0.0, 900.0),
            5,
            Scale::Logarithmic,
        );
        assert!(run_sweep(&bad).is_err());
    }

    #[test]
    fn failing_points_stay_in_row() {
        // Below ~580 MHz the 0.2 m reflector's beam exceeds a half turn.
        let spec = sweep(
            ScenarioId::G2A,
            SweptParameter::CarrierFrequency,
            (300e6, 2.4e9),
            10,
            Scale::Linear,
        );
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 10);
        assert!(rows[0].outcome.is_err());
        assert!(rows[9].outcome.is_ok());
        assert_eq!(rows[0].area_km2(), None);
        assert!(!rows[0].tangent_limited());
    }

    #[test]
    fn sweeps_are_deterministic() {
        let spec = sweep(
            ScenarioId::S2A,
            SweptParameter::SpaceAltitude,
            (500.0, 35786.0),
            40,
            Scale::Logarithmic,
        );
        assert_eq!(run_sweep(&spec).unwrap(), run_sweep(&spec).unwrap());
    }

    #[test]
    fn count_arithmetic() {
        let s2g = coverage(&ScenarioSpec::reference(ScenarioId::S2G)).unwrap();
        let (exact, mean) = expected_count(&s2g, 5e-6);
        assert!((exact - 57.94).abs() < 0.01);
        assert_eq!(mean, 57);
        assert_eq!(exact.round(), 58.0);

        let s2a = coverage(&ScenarioSpec::reference(ScenarioId::S2A)).unwrap();
        let (exact, mean) = expected_count(&s2a, 5e-6);
        assert!((exact - 13.47).abs() < 0.01);
        assert_eq!(mean, 13);
        assert_eq!(expected_count(&s2a, 0.0), (0.0, 0));

        assert!((full_sphere_count(6971.0, 5e-6) - 3053.3).abs() < 0.1);
        assert_eq!(full_sphere_count(6971.0, 0.0), 0.0);
        assert!((full_sphere_count(1.0, 1.0 / (4.0 * std::f64::consts::PI)) - 1.0).abs() < 1e-15);

        assert!((relay_path_count(54.0, 32.954) - 1779.516).abs() < 1e-9);
        assert_eq!(relay_path_count(7.0, 0.0), 0.0);
        assert_eq!(relay_path_count(1.0, 32.954), 32.954);
    }

    #[test]
    fn parameter_names_round_trip() {
        for p in [
            SweptParameter::CarrierFrequency,
            SweptParameter::MinElevation,
            SweptParameter::AirAltitude,
            SweptParameter::SpaceAltitude,
        ] {
            assert_eq!(p.name().parse::<SweptParameter>().unwrap(), p);
        }
    }
}
