//! The six cross-layer link scenarios and their end-to-end coverage.

use std::fmt;
use std::str::FromStr;

use crate::error::{require_positive, Error, Result};
use crate::geometry::{
    half_power_beamwidth, vertex_angle_downlink, vertex_angle_uplink, AntennaConfig, DomeGeometry,
    PhysicalConstants,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layer {
    Ground,
    Air,
    Space,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Uplink,
    Downlink,
}

/// Transmitter-layer to receiver-layer pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioId {
    /// Ground transmitters, aerial receiver.
    G2A,
    /// Aerial transmitters, satellite receiver.
    A2S,
    /// Ground transmitters, satellite receiver.
    G2S,
    /// Aerial transmitters, ground receiver.
    A2G,
    /// Satellite transmitters, aerial receiver.
    S2A,
    /// Satellite transmitters, ground receiver.
    S2G,
}

impl ScenarioId {
    pub const ALL: [ScenarioId; 6] = [
        ScenarioId::G2A,
        ScenarioId::A2S,
        ScenarioId::G2S,
        ScenarioId::A2G,
        ScenarioId::S2A,
        ScenarioId::S2G,
    ];

    pub fn direction(self) -> Direction {
        match self {
            ScenarioId::G2A | ScenarioId::A2S | ScenarioId::G2S => Direction::Uplink,
            ScenarioId::A2G | ScenarioId::S2A | ScenarioId::S2G => Direction::Downlink,
        }
    }

    pub fn transmitter_layer(self) -> Layer {
        match self {
            ScenarioId::G2A | ScenarioId::G2S => Layer::Ground,
            ScenarioId::A2S | ScenarioId::A2G => Layer::Air,
            ScenarioId::S2A | ScenarioId::S2G => Layer::Space,
        }
    }

    pub fn receiver_layer(self) -> Layer {
        match self {
            ScenarioId::A2G | ScenarioId::S2G => Layer::Ground,
            ScenarioId::G2A | ScenarioId::S2A => Layer::Air,
            ScenarioId::A2S | ScenarioId::G2S => Layer::Space,
        }
    }

    pub fn involves(self, layer: Layer) -> bool {
        self.transmitter_layer() == layer || self.receiver_layer() == layer
    }

    /// Lower-case tag used in descriptor files and on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioId::G2A => "g2a",
            ScenarioId::A2S => "a2s",
            ScenarioId::G2S => "g2s",
            ScenarioId::A2G => "a2g",
            ScenarioId::S2A => "s2a",
            ScenarioId::S2G => "s2g",
        }
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownScenario(pub String);

impl fmt::Display for UnknownScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown scenario `{}` (expected one of g2a, a2s, g2s, a2g, s2a, s2g)",
            self.0
        )
    }
}

impl std::error::Error for UnknownScenario {}

impl FromStr for ScenarioId {
    type Err = UnknownScenario;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScenarioId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownScenario(s.to_owned()))
    }
}

/// What bounds the receiver's view: its antenna beam or its minimum elevation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Receiver {
    Beam(AntennaConfig),
    Elevation { min_elevation_rad: f64 },
}

impl Receiver {
    pub fn direction(&self) -> Direction {
        match self {
            Receiver::Beam(_) => Direction::Uplink,
            Receiver::Elevation { .. } => Direction::Downlink,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioSpec {
    pub id: ScenarioId,
    pub receiver: Receiver,
    pub air_altitude_km: Option<f64>,
    pub space_altitude_km: Option<f64>,
    pub constants: PhysicalConstants,
}

impl ScenarioSpec {
    /// Pairs a scenario with its receiver model; uplinks need a beam and
    /// downlinks an elevation mask.
    pub fn new(id: ScenarioId, receiver: Receiver) -> Result<Self> {
        if id.direction() != receiver.direction() {
            let parameter = match receiver {
                Receiver::Beam(_) => "antenna",
                Receiver::Elevation { .. } => "min_elevation",
            };
            return Err(Error::Inapplicable {
                parameter,
                scenario: id,
            });
        }
        Ok(Self {
            id,
            receiver,
            air_altitude_km: None,
            space_altitude_km: None,
            constants: PhysicalConstants::default(),
        })
    }

    pub fn uplink(id: ScenarioId, antenna: AntennaConfig) -> Result<Self> {
        Self::new(id, Receiver::Beam(antenna))
    }

    pub fn downlink(id: ScenarioId, min_elevation_rad: f64) -> Result<Self> {
        Self::new(id, Receiver::Elevation { min_elevation_rad })
    }

    /// The configuration used for the reference constellations: a 20 000 km
    /// satellite above beam-limited links, a 600 km one above elevation-limited
    /// links, aerial vehicles at 5 km, `κ = 70` reflectors of 0.2 m (aerial)
    /// or 4 m (satellite) at 2 GHz or 40 GHz, and elevation masks of 10° from
    /// the ground and 30° from the air.
    pub fn reference(id: ScenarioId) -> Self {
        let receiver = match id {
            ScenarioId::G2A => Receiver::Beam(AntennaConfig::new(70.0, 0.2, 2e9)),
            ScenarioId::A2S | ScenarioId::G2S => {
                Receiver::Beam(AntennaConfig::new(70.0, 4.0, 40e9))
            }
            ScenarioId::A2G | ScenarioId::S2G => Receiver::Elevation {
                min_elevation_rad: 10f64.to_radians(),
            },
            ScenarioId::S2A => Receiver::Elevation {
                min_elevation_rad: 30f64.to_radians(),
            },
        };
        let space = match id.direction() {
            Direction::Uplink => 20000.0,
            Direction::Downlink => 600.0,
        };
        let mut spec = Self::new(id, receiver).expect("reference receivers match their direction");
        if id.involves(Layer::Air) {
            spec.air_altitude_km = Some(5.0);
        }
        if id.involves(Layer::Space) {
            spec.space_altitude_km = Some(space);
        }
        spec
    }

    pub fn with_air_altitude_km(mut self, km: f64) -> Self {
        self.air_altitude_km = Some(km);
        self
    }

    pub fn with_space_altitude_km(mut self, km: f64) -> Self {
        self.space_altitude_km = Some(km);
        self
    }

    pub fn with_constants(mut self, constants: PhysicalConstants) -> Self {
        self.constants = constants;
        self
    }

    pub fn direction(&self) -> Direction {
        self.id.direction()
    }

    fn layer_radius(&self, layer: Layer) -> Result<f64> {
        let re = self.constants.earth_radius_km;
        let altitude = |value: Option<f64>, name: &'static str| -> Result<f64> {
            let h = value.ok_or(Error::MissingParameter {
                name,
                scenario: self.id,
            })?;
            require_positive(name, h)
        };
        Ok(match layer {
            Layer::Ground => re,
            Layer::Air => re + altitude(self.air_altitude_km, "air_altitude_km")?,
            Layer::Space => re + altitude(self.space_altitude_km, "space_altitude_km")?,
        })
    }
}

/// Transmitter and receiver sphere radii `(R_t, R_r)` in km.
///
/// The transmitter radius is that of the transmitting layer and the receiver
/// radius that of the receiving layer.
pub fn resolve_radii(spec: &ScenarioSpec) -> Result<(f64, f64)> {
    spec.constants.validate()?;
    if let (Some(air), Some(space)) = (spec.air_altitude_km, spec.space_altitude_km) {
        if air >= space {
            return Err(Error::InvalidGeometry(format!(
                "air altitude {air} km must be below space altitude {space} km"
            )));
        }
    }
    let r_t = spec.layer_radius(spec.id.transmitter_layer())?;
    let r_r = spec.layer_radius(spec.id.receiver_layer())?;
    Ok((r_t, r_r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Warning,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub parameter: &'static str,
    pub value: f64,
    pub permitted: (f64, f64),
    pub severity: Severity,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {} is outside the typical range [{}, {}]",
            self.parameter, self.value, self.permitted.0, self.permitted.1
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, parameter: &'static str, value: f64, permitted: (f64, f64)) {
        if !(permitted.0..=permitted.1).contains(&value) {
            self.violations.push(Violation {
                parameter,
                value,
                permitted,
                severity: Severity::Warning,
            });
        }
    }
}

pub const AERIAL_FREQUENCY_RANGE_HZ: (f64, f64) = (300e6, 2.4e9);
pub const SATELLITE_FREQUENCY_RANGE_HZ: (f64, f64) = (2e9, 40e9);
pub const AIR_ALTITUDE_RANGE_KM: (f64, f64) = (1.0, 50.0);
pub const SPACE_ALTITUDE_RANGE_KM: (f64, f64) = (500.0, 35786.0);
pub const ELEVATION_RANGE_DEG: (f64, f64) = (5.0, 30.0);

/// Flags parameters outside the typical operating ranges. Never fails.
pub fn validate(spec: &ScenarioSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    match spec.receiver {
        Receiver::Beam(antenna) => {
            let range = if spec.id.involves(Layer::Space) {
                SATELLITE_FREQUENCY_RANGE_HZ
            } else {
                AERIAL_FREQUENCY_RANGE_HZ
            };
            report.check("carrier_frequency_hz", antenna.carrier_frequency_hz, range);
        }
        Receiver::Elevation { min_elevation_rad } => {
            report.check(
                "min_elevation_deg",
                min_elevation_rad.to_degrees(),
                ELEVATION_RANGE_DEG,
            );
        }
    }
    if spec.id.involves(Layer::Air) {
        if let Some(h) = spec.air_altitude_km {
            report.check("air_altitude_km", h, AIR_ALTITUDE_RANGE_KM);
        }
    }
    if spec.id.involves(Layer::Space) {
        if let Some(h) = spec.space_altitude_km {
            report.check("space_altitude_km", h, SPACE_ALTITUDE_RANGE_KM);
        }
    }
    report
}

/// Resolves the full coverage dome of a scenario.
pub fn coverage(spec: &ScenarioSpec) -> Result<DomeGeometry> {
    let (r_t, r_r) = resolve_radii(spec)?;
    match spec.receiver {
        Receiver::Beam(antenna) => {
            let beamwidth = half_power_beamwidth(&antenna, &spec.constants)?;
            let (phi, tangent) = vertex_angle_uplink(beamwidth, r_t, r_r)?;
            DomeGeometry::new(r_t, r_r, phi, tangent, Some(beamwidth))
        }
        Receiver::Elevation { min_elevation_rad } => {
            let phi = vertex_angle_downlink(min_elevation_rad, r_t, r_r)?;
            DomeGeometry::new(r_t, r_r, phi, false, None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn direction_follows_layer_pair() {
        let up: Vec<_> = ScenarioId::ALL
            .into_iter()
            .filter(|id| id.direction() == Direction::Uplink)
            .collect();
        assert_eq!(up, [ScenarioId::G2A, ScenarioId::A2S, ScenarioId::G2S]);
        for id in ScenarioId::ALL {
            assert_eq!(id.as_str().parse::<ScenarioId>().unwrap(), id);
            assert_eq!(
                id.as_str().to_uppercase().parse::<ScenarioId>().unwrap(),
                id
            );
        }
        assert!("x2y".parse::<ScenarioId>().is_err());
    }

    #[test]
    fn receiver_must_match_direction() {
        assert!(matches!(
            ScenarioSpec::downlink(ScenarioId::G2S, 0.2),
            Err(Error::Inapplicable { .. })
        ));
        assert!(ScenarioSpec::uplink(ScenarioId::S2G, AntennaConfig::new(70.0, 4.0, 2e9)).is_err());
    }

    #[test]
    fn radii_examples() {
        let g2s = ScenarioSpec::reference(ScenarioId::G2S).with_space_altitude_km(20000.0);
        assert_eq!(resolve_radii(&g2s).unwrap(), (6371.0, 26371.0));
        let s2g = ScenarioSpec::reference(ScenarioId::S2G).with_space_altitude_km(600.0);
        assert_eq!(resolve_radii(&s2g).unwrap(), (6971.0, 6371.0));
        let a2g = ScenarioSpec::reference(ScenarioId::A2G).with_air_altitude_km(5.0);
        assert_eq!(resolve_radii(&a2g).unwrap(), (6376.0, 6371.0));
        let s2a = ScenarioSpec::reference(ScenarioId::S2A);
        assert_eq!(resolve_radii(&s2a).unwrap(), (6971.0, 6376.0));
        let a2s = ScenarioSpec::reference(ScenarioId::A2S);
        assert_eq!(resolve_radii(&a2s).unwrap(), (6376.0, 26371.0));
    }

    #[test]
    fn radii_errors() {
        let crossed = ScenarioSpec::reference(ScenarioId::A2S)
            .with_air_altitude_km(700.0)
            .with_space_altitude_km(600.0);
        assert!(matches!(
            resolve_radii(&crossed),
            Err(Error::InvalidGeometry(_))
        ));

        let mut missing = ScenarioSpec::reference(ScenarioId::S2G);
        missing.space_altitude_km = None;
        assert!(matches!(
            resolve_radii(&missing),
            Err(Error::MissingParameter {
                name: "space_altitude_km",
                ..
            })
        ));

        let negative = ScenarioSpec::reference(ScenarioId::G2A).with_air_altitude_km(-1.0);
        assert!(resolve_radii(&negative).is_err());
    }

    #[test]
    fn radii_are_direction_consistent() {
        for id in ScenarioId::ALL {
            let (rt, rr) = resolve_radii(&ScenarioSpec::reference(id)).unwrap();
            match id.direction() {
                Direction::Uplink => assert!(rt < rr, "{id}"),
                Direction::Downlink => assert!(rt > rr, "{id}"),
            }
        }
    }

    #[test]
    fn validation_examples() {
        let g2a = ScenarioSpec::reference(ScenarioId::G2A);
        assert!(validate(&g2a).is_clean());

        let g2s = ScenarioSpec::uplink(ScenarioId::G2S, AntennaConfig::new(70.0, 4.0, 100e9))
            .unwrap()
            .with_space_altitude_km(20000.0);
        let report = validate(&g2s);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].parameter, "carrier_frequency_hz");

        let s2a = ScenarioSpec::downlink(ScenarioId::S2A, 45f64.to_radians())
            .unwrap()
            .with_air_altitude_km(5.0)
            .with_space_altitude_km(600.0);
        let report = validate(&s2a);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].parameter, "min_elevation_deg");
        assert_eq!(report.violations[0].severity, Severity::Warning);
    }

    #[test]
    fn validation_flags_altitudes() {
        let spec = ScenarioSpec::reference(ScenarioId::A2S)
            .with_air_altitude_km(60.0)
            .with_space_altitude_km(40000.0);
        let names: Vec<_> = validate(&spec)
            .violations
            .iter()
            .map(|v| v.parameter)
            .collect();
        assert_eq!(names, ["air_altitude_km", "space_altitude_km"]);
    }

    #[test]
    fn reference_downlink_areas() {
        let s2g = coverage(&ScenarioSpec::reference(ScenarioId::S2G)).unwrap();
        assert!(rel(s2g.area_km2, 11_588_409.2) < 5e-3);
        let s2a = coverage(&ScenarioSpec::reference(ScenarioId::S2A)).unwrap();
        assert!(rel(s2a.area_km2, 2_694_261.1) < 5e-3);
        let a2g = coverage(&ScenarioSpec::reference(ScenarioId::A2G)).unwrap();
        assert!(rel(a2g.area_km2, 2_464.3) < 5e-3);
        assert!(s2g.beamwidth_rad.is_none());
    }

    #[test]
    fn reference_uplink_areas() {
        let paper_light = PhysicalConstants::default().with_light_speed_m_per_s(3e8);
        let g2s = coverage(&ScenarioSpec::reference(ScenarioId::G2S).with_constants(paper_light))
            .unwrap();
        assert!(rel(g2s.area_km2, 1648.6) < 1e-4, "{}", g2s.area_km2);
        let a2s = coverage(&ScenarioSpec::reference(ScenarioId::A2S).with_constants(paper_light))
            .unwrap();
        assert!(rel(a2s.area_km2, 1647.7) < 1e-4, "{}", a2s.area_km2);
        let g2a = coverage(&ScenarioSpec::reference(ScenarioId::G2A).with_constants(paper_light))
            .unwrap();
        assert!((g2a.area_km2 - 19.1).abs() < 0.05, "{}", g2a.area_km2);
        assert!(!g2a.tangent_limited);
    }

    #[test]
    fn ground_satellite_exceeds_air_satellite() {
        for f in [2e9, 10e9, 40e9] {
            let antenna = AntennaConfig::new(70.0, 4.0, f);
            let g2s = ScenarioSpec::uplink(ScenarioId::G2S, antenna)
                .unwrap()
                .with_space_altitude_km(20000.0);
            let a2s = ScenarioSpec::uplink(ScenarioId::A2S, antenna)
                .unwrap()
                .with_air_altitude_km(50.0)
                .with_space_altitude_km(20000.0);
            assert!(coverage(&g2s).unwrap().area_km2 > coverage(&a2s).unwrap().area_km2);
        }
    }

    proptest! {
        #[test]
        fn area_is_bounded(
            idx in 0usize..6,
            f in 3e8f64..4e10,
            el in 0.01f64..1.5,
            ha in 1.0f64..50.0,
            hs in 500.0f64..35786.0,
        ) {
            let id = ScenarioId::ALL[idx];
            let receiver = match id.direction() {
                Direction::Uplink => Receiver::Beam(AntennaConfig::new(70.0, 4.0, f)),
                Direction::Downlink => Receiver::Elevation { min_elevation_rad: el },
            };
            let spec = ScenarioSpec::new(id, receiver)
                .unwrap()
                .with_air_altitude_km(ha)
                .with_space_altitude_km(hs);
            let dome = coverage(&spec).unwrap();
            let rt = dome.transmitter_radius_km;
            prop_assert!(dome.area_km2 > 0.0);
            prop_assert!(dome.area_km2 <= 4.0 * PI * rt * rt);
        }

        #[test]
        fn ground_receiver_sees_more_satellites(
            el in 0.0f64..1.5,
            ha in 0.5f64..100.0,
            hs in 500.0f64..35786.0,
        ) {
            let s2g = ScenarioSpec::downlink(ScenarioId::S2G, el).unwrap().with_space_altitude_km(hs);
            let s2a = ScenarioSpec::downlink(ScenarioId::S2A, el)
                .unwrap()
                .with_air_altitude_km(ha)
                .with_space_altitude_km(hs);
            prop_assert!(coverage(&s2g).unwrap().area_km2 > coverage(&s2a).unwrap().area_km2);
        }
    }
}
