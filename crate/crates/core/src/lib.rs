//! Spherical-dome coverage model for the six cross-layer links of a
//! space-air-ground network, with seeded generation of transmitter
//! positions inside a receiver's dome.
//!
//! ```
//! use sagin_core::{coverage, ScenarioId, ScenarioSpec};
//!
//! let leo = ScenarioSpec::downlink(ScenarioId::S2G, 10f64.to_radians())
//!     .unwrap()
//!     .with_space_altitude_km(600.0);
//! let dome = coverage(&leo).unwrap();
//! assert!((dome.area_km2 / 11_588_409.2 - 1.0).abs() < 1e-6);
//! ```

pub mod error;
pub mod geometry;
pub mod poisson;
pub mod sampling;
pub mod scenario;
pub mod sweep;

pub use error::{Error, Result};
pub use geometry::{
    cap_area, cap_area_small_angle, half_power_beamwidth, vertex_angle_downlink,
    vertex_angle_uplink, AntennaConfig, DomeGeometry, PhysicalConstants,
};
pub use sampling::{
    angular_distance, generate, poisson_count, sample_cap_angles, yaw_pitch_matrix, CartesianPoint,
    PolarPoint, SampleConfig, SamplingMode, Topology, RNG_ALGORITHM,
};
pub use scenario::{
    coverage, resolve_radii, validate, Direction, Layer, Receiver, ScenarioId, ScenarioSpec,
    ValidationReport,
};
pub use sweep::{
    expected_count, full_sphere_count, relay_path_count, run_sweep, Scale, SweepRow, SweepSpec,
    SweptParameter,
};
