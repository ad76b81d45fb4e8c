//! Seeded transmitter placement on a coverage dome.
//!
//! Points are drawn about the +z pole of a generation frame, placed on the
//! transmitter sphere, then turned by the yaw-pitch matrix so the cap centre
//! lands on the receiver's direction `(ϑ_r, φ_r)`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{require_nonnegative, Error, Result};
use crate::geometry::DomeGeometry;
use crate::poisson::{self, unit_f64};

/// Name of the only supported generator: ChaCha20 seeded through
/// `SeedableRng::seed_from_u64`.
pub const RNG_ALGORITHM: &str = "chacha20";

pub type Matrix3 = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub radius_km: f64,
    pub azimuth_rad: f64,
    pub polar_rad: f64,
}

impl PolarPoint {
    pub fn new(radius_km: f64, azimuth_rad: f64, polar_rad: f64) -> Self {
        Self {
            radius_km,
            azimuth_rad,
            polar_rad,
        }
    }

    /// Maps a signed polar angle onto `[0, π]` by flipping the azimuth, and
    /// wraps the azimuth into `[0, 2π)`. The Cartesian image is unchanged.
    pub fn normalized(self) -> Self {
        let mut polar = self.polar_rad.rem_euclid(TAU);
        let mut azimuth = self.azimuth_rad;
        if polar > PI {
            polar = TAU - polar;
            azimuth += PI;
        }
        Self {
            radius_km: self.radius_km,
            azimuth_rad: azimuth.rem_euclid(TAU),
            polar_rad: polar,
        }
    }

    pub fn to_cartesian(self) -> CartesianPoint {
        let (sp, cp) = self.polar_rad.sin_cos();
        let (sa, ca) = self.azimuth_rad.sin_cos();
        CartesianPoint {
            x_km: self.radius_km * sp * ca,
            y_km: self.radius_km * sp * sa,
            z_km: self.radius_km * cp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPoint {
    pub x_km: f64,
    pub y_km: f64,
    pub z_km: f64,
}

impl CartesianPoint {
    pub fn new(x_km: f64, y_km: f64, z_km: f64) -> Self {
        Self { x_km, y_km, z_km }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x_km, self.y_km, self.z_km]
    }

    pub fn norm(self) -> f64 {
        norm(self.to_array())
    }
}

impl From<[f64; 3]> for CartesianPoint {
    fn from([x_km, y_km, z_km]: [f64; 3]) -> Self {
        Self { x_km, y_km, z_km }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SamplingMode {
    /// Polar angle uniform on `[−φ, φ]`. Reproduces the published
    /// generator, which crowds points towards the cap centre.
    PaperFaithful,
    /// Uniform surface density on the cap: a homogeneous PPP.
    #[default]
    AreaUniform,
}

impl SamplingMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SamplingMode::PaperFaithful => "paper_faithful",
            SamplingMode::AreaUniform => "area_uniform",
        }
    }
}

impl fmt::Display for SamplingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SamplingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper_faithful" => Ok(SamplingMode::PaperFaithful),
            "area_uniform" => Ok(SamplingMode::AreaUniform),
            other => Err(format!(
                "unknown sampling mode `{other}` (expected area_uniform or paper_faithful)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleConfig {
    pub density_per_km2: f64,
    pub rx_azimuth_rad: f64,
    pub rx_polar_rad: f64,
    pub mode: SamplingMode,
    pub seed: u64,
    pub rng_algorithm: String,
}

impl SampleConfig {
    pub fn new(density_per_km2: f64, seed: u64) -> Self {
        Self {
            density_per_km2,
            rx_azimuth_rad: 0.0,
            rx_polar_rad: 0.0,
            mode: SamplingMode::default(),
            seed,
            rng_algorithm: RNG_ALGORITHM.to_owned(),
        }
    }

    pub fn with_receiver(mut self, azimuth_rad: f64, polar_rad: f64) -> Self {
        self.rx_azimuth_rad = azimuth_rad;
        self.rx_polar_rad = polar_rad;
        self
    }

    pub fn with_mode(mut self, mode: SamplingMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Unit vector from the Earth centre through the receiver.
    pub fn center_direction(&self) -> [f64; 3] {
        receiver_direction(self.rx_azimuth_rad, self.rx_polar_rad)
    }

    pub fn rng(&self) -> Result<ChaCha20Rng> {
        if self.rng_algorithm != RNG_ALGORITHM {
            return Err(Error::UnknownRng(self.rng_algorithm.clone()));
        }
        Ok(ChaCha20Rng::seed_from_u64(self.seed))
    }

    pub fn validate(&self) -> Result<()> {
        require_nonnegative("density_per_km2", self.density_per_km2)?;
        for (name, v) in [
            ("rx_azimuth_rad", self.rx_azimuth_rad),
            ("rx_polar_rad", self.rx_polar_rad),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value: v,
                    reason: "must be finite",
                });
            }
        }
        if self.rng_algorithm != RNG_ALGORITHM {
            return Err(Error::UnknownRng(self.rng_algorithm.clone()));
        }
        Ok(())
    }
}

/// One realisation of transmitters inside a dome.
#[derive(Debug, Clone, PartialEq)]
pub struct Topology {
    pub points: Vec<CartesianPoint>,
    pub count: usize,
    pub dome: DomeGeometry,
    pub config: SampleConfig,
}

impl Topology {
    pub fn center_direction(&self) -> [f64; 3] {
        self.config.center_direction()
    }
}

/// Number of transmitters in the dome: Poisson with mean `⌊λ·A⌋`.
///
/// The mean is floored before sampling, so `λ·A = 57.94` draws from
/// Poisson(57).
pub fn poisson_count<R: RngCore + ?Sized>(density_per_km2: f64, area_km2: f64, rng: &mut R) -> u64 {
    let mean = (density_per_km2 * area_km2).floor();
    poisson::sample(mean, rng)
}

/// Draws `count` `(azimuth, polar)` pairs about the generation pole.
///
/// All azimuths are drawn first, then all polar angles.
pub fn sample_cap_angles<R: RngCore + ?Sized>(
    vertex_angle_rad: f64,
    count: usize,
    mode: SamplingMode,
    rng: &mut R,
) -> Result<Vec<(f64, f64)>> {
    if !(0.0..=PI).contains(&vertex_angle_rad) {
        return Err(Error::InvalidParameter {
            name: "vertex_angle_rad",
            value: vertex_angle_rad,
            reason: "must lie in [0, pi]",
        });
    }
    let azimuths: Vec<f64> = (0..count).map(|_| TAU * unit_f64(rng)).collect();
    let half_sin = (0.5 * vertex_angle_rad).sin();
    let polars = (0..count).map(|_| {
        let u = unit_f64(rng);
        match mode {
            SamplingMode::PaperFaithful => vertex_angle_rad * (2.0 * u - 1.0),
            // acos(1 − u·(1 − cos φ)) rewritten through the half angle.
            SamplingMode::AreaUniform => 2.0 * (u.sqrt() * half_sin).min(1.0).asin(),
        }
    });
    Ok(azimuths.into_iter().zip(polars).collect())
}

/// `R_z(ϑ_r)·R_y(φ_r)`: pitch the pole down by `φ_r`, then yaw by `ϑ_r`.
pub fn yaw_pitch_matrix(rx_azimuth_rad: f64, rx_polar_rad: f64) -> Matrix3 {
    let (sa, ca) = rx_azimuth_rad.sin_cos();
    let (sp, cp) = rx_polar_rad.sin_cos();
    let yaw = [[ca, -sa, 0.0], [sa, ca, 0.0], [0.0, 0.0, 1.0]];
    let pitch = [[cp, 0.0, sp], [0.0, 1.0, 0.0], [-sp, 0.0, cp]];
    mat_mul(&yaw, &pitch)
}

pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_vec(m: &Matrix3, v: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

pub fn transpose(m: &Matrix3) -> Matrix3 {
    let mut t = [[0.0; 3]; 3];
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            t[j][i] = *v;
        }
    }
    t
}

pub fn receiver_direction(azimuth_rad: f64, polar_rad: f64) -> [f64; 3] {
    let (sp, cp) = polar_rad.sin_cos();
    let (sa, ca) = azimuth_rad.sin_cos();
    [sp * ca, sp * sa, cp]
}

fn norm(v: [f64; 3]) -> f64 {
    v[0].hypot(v[1]).hypot(v[2])
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Angle at the Earth centre between `p` and `center_direction`.
///
/// Evaluated as `atan2(|p × c|, p · c)`, which equals the arccos of the
/// normalised dot product but stays accurate for the tiny caps of aerial
/// receivers.
pub fn angular_distance(p: CartesianPoint, center_direction: [f64; 3]) -> Result<f64> {
    let v = p.to_array();
    for (name, n) in [
        ("point", norm(v)),
        ("center_direction", norm(center_direction)),
    ] {
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidParameter {
                name,
                value: n,
                reason: "vector must be finite and non-zero",
            });
        }
    }
    let dot: f64 = (0..3).map(|i| v[i] * center_direction[i]).sum();
    Ok(norm(cross(v, center_direction)).atan2(dot))
}

/// Generates one realisation of transmitters inside `dome`.
///
/// The count is drawn first, then the angles, from a single generator
/// stream, so `(dome, config)` fixes the output bit for bit.
pub fn generate(dome: &DomeGeometry, config: &SampleConfig) -> Result<Topology> {
    config.validate()?;
    let mut rng = config.rng()?;
    let count = poisson_count(config.density_per_km2, dome.area_km2, &mut rng);
    let count = usize::try_from(count).map_err(|_| Error::InvalidParameter {
        name: "density_per_km2",
        value: config.density_per_km2,
        reason: "expected point count does not fit in memory",
    })?;
    let angles = sample_cap_angles(dome.vertex_angle_rad, count, config.mode, &mut rng)?;

    let rotation = yaw_pitch_matrix(config.rx_azimuth_rad, config.rx_polar_rad);
    let radius = dome.transmitter_radius_km;
    let points = angles
        .into_iter()
        .map(|(azimuth, polar)| {
            let local = PolarPoint::new(radius, azimuth, polar).to_cartesian();
            CartesianPoint::from(mat_vec(&rotation, local.to_array()))
        })
        .collect();

    Ok(Topology {
        points,
        count,
        dome: *dome,
        config: config.clone(),
    })
}
