//! Scenario descriptor: the JSON document that pins one receiver, its
//! scenario parameters and the sampling settings.
//!
//! ```json
//! {
//!   "scenario": "s2g",
//!   "min_elevation_deg": 10,
//!   "space_altitude_km": 600,
//!   "density_per_km2": 5e-6,
//!   "rx_azimuth_deg": 30,
//!   "rx_polar_deg": 45,
//!   "seed": 7,
//!   "mode": "area_uniform"
//! }
//! ```
//!
//! Physical keys left out fall back to the scenario's reference
//! configuration ([`ScenarioSpec::reference`]). Keys that do not apply to the
//! scenario are rejected.

use std::path::Path;

use sagin_core::scenario::Layer;
use sagin_core::{
    AntennaConfig, Direction, PhysicalConstants, Receiver, SampleConfig, SamplingMode, ScenarioId,
    ScenarioSpec,
};
use serde::Deserialize;

use crate::error::CliError;

/// Overrides the default Earth radius when neither a flag nor the descriptor
/// sets one.
pub const EARTH_RADIUS_ENV: &str = "SAGIN_EARTH_RADIUS_KM";

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDescriptor {
    pub scenario: Option<String>,
    pub carrier_frequency_hz: Option<f64>,
    pub illumination_coefficient: Option<f64>,
    pub reflector_diameter_m: Option<f64>,
    pub min_elevation_deg: Option<f64>,
    pub air_altitude_km: Option<f64>,
    pub space_altitude_km: Option<f64>,
    pub earth_radius_km: Option<f64>,
    pub density_per_km2: Option<f64>,
    pub rx_azimuth_deg: Option<f64>,
    pub rx_polar_deg: Option<f64>,
    pub seed: Option<u64>,
    pub mode: Option<String>,
}

macro_rules! overlay {
    ($dst:ident, $src:ident, $($field:ident),+ $(,)?) => {
        $( if $src.$field.is_some() { $dst.$field = $src.$field.clone(); } )+
    };
}

impl ScenarioDescriptor {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed descriptor: {e}")))
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Input(format!("cannot read descriptor {}: {e}", path.display()))
        })?;
        Self::from_json(&text)
    }

    /// Keys set in `other` replace the ones in `self`.
    pub fn overlay(mut self, other: &ScenarioDescriptor) -> Self {
        overlay!(
            self,
            other,
            scenario,
            carrier_frequency_hz,
            illumination_coefficient,
            reflector_diameter_m,
            min_elevation_deg,
            air_altitude_km,
            space_altitude_km,
            earth_radius_km,
            density_per_km2,
            rx_azimuth_deg,
            rx_polar_deg,
            seed,
            mode,
        );
        self
    }

    pub fn scenario_id(&self) -> Result<ScenarioId, CliError> {
        let tag = self
            .scenario
            .as_deref()
            .ok_or_else(|| CliError::Input("descriptor is missing `scenario`".into()))?;
        tag.parse()
            .map_err(|e: sagin_core::scenario::UnknownScenario| CliError::Input(e.to_string()))
    }

    fn reject_inapplicable(&self, id: ScenarioId) -> Result<(), CliError> {
        let mut present = Vec::new();
        let mut check = |name: &'static str, set: bool, applies: bool| {
            if set && !applies {
                present.push(name);
            }
        };
        let uplink = id.direction() == Direction::Uplink;
        check(
            "carrier_frequency_hz",
            self.carrier_frequency_hz.is_some(),
            uplink,
        );
        check(
            "illumination_coefficient",
            self.illumination_coefficient.is_some(),
            uplink,
        );
        check(
            "reflector_diameter_m",
            self.reflector_diameter_m.is_some(),
            uplink,
        );
        check(
            "min_elevation_deg",
            self.min_elevation_deg.is_some(),
            !uplink,
        );
        check(
            "air_altitude_km",
            self.air_altitude_km.is_some(),
            id.involves(Layer::Air),
        );
        check(
            "space_altitude_km",
            self.space_altitude_km.is_some(),
            id.involves(Layer::Space),
        );
        if present.is_empty() {
            Ok(())
        } else {
            Err(CliError::Input(format!(
                "key(s) {} do not apply to scenario {id}",
                present.join(", ")
            )))
        }
    }

    /// Earth radius precedence: descriptor (or flag overlaid onto it), then
    /// the environment value, then the built-in default.
    pub fn constants(&self, env_earth_radius: Option<&str>) -> Result<PhysicalConstants, CliError> {
        let mut constants = PhysicalConstants::default();
        if let Some(r) = self.earth_radius_km {
            constants.earth_radius_km = r;
        } else if let Some(raw) = env_earth_radius {
            constants.earth_radius_km = raw.trim().parse().map_err(|_| {
                CliError::Input(format!("{EARTH_RADIUS_ENV}=`{raw}` is not a number"))
            })?;
        }
        constants.validate().map_err(CliError::from)?;
        Ok(constants)
    }

    pub fn scenario_spec(&self, constants: PhysicalConstants) -> Result<ScenarioSpec, CliError> {
        let id = self.scenario_id()?;
        self.reject_inapplicable(id)?;
        let reference = ScenarioSpec::reference(id);
        let receiver = match reference.receiver {
            Receiver::Beam(a) => Receiver::Beam(AntennaConfig::new(
                self.illumination_coefficient
                    .unwrap_or(a.illumination_coefficient),
                self.reflector_diameter_m.unwrap_or(a.reflector_diameter_m),
                self.carrier_frequency_hz.unwrap_or(a.carrier_frequency_hz),
            )),
            Receiver::Elevation { min_elevation_rad } => Receiver::Elevation {
                min_elevation_rad: self
                    .min_elevation_deg
                    .map(f64::to_radians)
                    .unwrap_or(min_elevation_rad),
            },
        };
        let mut spec = ScenarioSpec::new(id, receiver)?.with_constants(constants);
        spec.air_altitude_km = self.air_altitude_km.or(reference.air_altitude_km);
        spec.space_altitude_km = self.space_altitude_km.or(reference.space_altitude_km);
        Ok(spec)
    }

    pub fn density(&self) -> Result<f64, CliError> {
        self.density_per_km2
            .ok_or_else(|| CliError::Input("descriptor is missing `density_per_km2`".into()))
    }

    pub fn sample_config(&self) -> Result<SampleConfig, CliError> {
        let seed = self
            .seed
            .ok_or_else(|| CliError::Input("descriptor is missing `seed`".into()))?;
        let mode = match self.mode.as_deref() {
            Some(m) => m.parse::<SamplingMode>().map_err(CliError::Input)?,
            None => SamplingMode::default(),
        };
        let config = SampleConfig::new(self.density()?, seed)
            .with_receiver(
                self.rx_azimuth_deg.unwrap_or(0.0).to_radians(),
                self.rx_polar_deg.unwrap_or(0.0).to_radians(),
            )
            .with_mode(mode);
        config.validate()?;
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<ScenarioDescriptor, CliError> {
        ScenarioDescriptor::from_json(text)
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = parse(r#"{"scenario": "s2g", "altitude": 600}"#).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("altitude"));
    }

    #[test]
    fn malformed_json_is_an_input_error() {
        assert_eq!(parse("{\"scenario\": ").unwrap_err().exit_code(), 2);
        assert_eq!(parse(r#"{"seed": -4}"#).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn direction_inapplicable_keys_are_rejected() {
        let d = parse(r#"{"scenario": "g2s", "min_elevation_deg": 10}"#).unwrap();
        let err = d.scenario_spec(PhysicalConstants::default()).unwrap_err();
        assert!(err.to_string().contains("min_elevation_deg"), "{err}");

        let d =
            parse(r#"{"scenario": "s2g", "carrier_frequency_hz": 2e9, "reflector_diameter_m": 1}"#)
                .unwrap();
        let err = d.scenario_spec(PhysicalConstants::default()).unwrap_err();
        assert!(
            err.to_string()
                .contains("carrier_frequency_hz, reflector_diameter_m"),
            "{err}"
        );

        let d = parse(r#"{"scenario": "g2a", "space_altitude_km": 600}"#).unwrap();
        assert!(d.scenario_spec(PhysicalConstants::default()).is_err());
    }

    #[test]
    fn missing_physical_keys_use_reference_values() {
        let d = parse(r#"{"scenario": "s2a", "min_elevation_deg": 20}"#).unwrap();
        let spec = d.scenario_spec(PhysicalConstants::default()).unwrap();
        assert_eq!(spec.air_altitude_km, Some(5.0));
        assert_eq!(spec.space_altitude_km, Some(600.0));
        assert_eq!(
            spec.receiver,
            Receiver::Elevation {
                min_elevation_rad: 20f64.to_radians()
            }
        );
    }

    #[test]
    fn earth_radius_precedence() {
        let bare = parse(r#"{"scenario": "s2g"}"#).unwrap();
        assert_eq!(bare.constants(None).unwrap().earth_radius_km, 6371.0);
        assert_eq!(
            bare.constants(Some("6378.137")).unwrap().earth_radius_km,
            6378.137
        );
        assert!(bare.constants(Some("earth")).is_err());

        let set = parse(r#"{"scenario": "s2g", "earth_radius_km": 6000}"#).unwrap();
        assert_eq!(
            set.constants(Some("6378.137")).unwrap().earth_radius_km,
            6000.0
        );

        let flag = ScenarioDescriptor {
            earth_radius_km: Some(7000.0),
            ..Default::default()
        };
        assert_eq!(
            set.overlay(&flag).constants(None).unwrap().earth_radius_km,
            7000.0
        );
        assert!(parse(r#"{"earth_radius_km": -1}"#)
            .unwrap()
            .constants(None)
            .is_err());
    }

    #[test]
    fn sample_settings() {
        let d = parse(
            r#"{"scenario": "s2g", "density_per_km2": 5e-6, "seed": 18446744073709551615,
                "rx_azimuth_deg": 90, "rx_polar_deg": 45, "mode": "paper_faithful"}"#,
        )
        .unwrap();
        let cfg = d.sample_config().unwrap();
        assert_eq!(cfg.seed, u64::MAX);
        assert_eq!(cfg.mode, SamplingMode::PaperFaithful);
        assert!((cfg.rx_azimuth_rad - std::f64::consts::FRAC_PI_2).abs() < 1e-15);

        assert!(parse(r#"{"density_per_km2": 1}"#)
            .unwrap()
            .sample_config()
            .is_err());
        assert!(parse(r#"{"seed": 1}"#).unwrap().sample_config().is_err());
        assert!(
            parse(r#"{"seed": 1, "density_per_km2": 1, "mode": "uniform"}"#)
                .unwrap()
                .sample_config()
                .is_err()
        );
        assert!(parse(r#"{"seed": 1, "density_per_km2": -1}"#)
            .unwrap()
            .sample_config()
            .is_err());
    }
}
