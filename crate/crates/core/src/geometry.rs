//! Closed-form coverage geometry.
//!
//! A receiver's coverage region on the sphere carrying its transmitters is a
//! spherical cap (dome) centred on the receiver's sub-point. The cap is fully
//! described by the transmitter-sphere radius `R_t` and the Earth-central
//! vertex angle `φ` between the cap centre and its rim. This module computes
//! `φ` for beam-limited receivers (uplink) and elevation-limited receivers
//! (downlink), and the resulting cap area.
//!
//! All angles are radians. Lengths are kilometres unless the field name says
//! otherwise.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{require_positive, Error, Result};

/// Arguments of `acos`/`asin`/`sqrt` within this distance of their domain are
/// clamped silently; anything further out is reported as an error.
pub const CLAMP_TOLERANCE: f64 = 1e-12;

pub const DEFAULT_EARTH_RADIUS_KM: f64 = 6371.0;
pub const DEFAULT_LIGHT_SPEED_M_PER_S: f64 = 2.998e8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub earth_radius_km: f64,
    pub light_speed_m_per_s: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            earth_radius_km: DEFAULT_EARTH_RADIUS_KM,
            light_speed_m_per_s: DEFAULT_LIGHT_SPEED_M_PER_S,
        }
    }
}

impl PhysicalConstants {
    pub fn with_earth_radius_km(mut self, earth_radius_km: f64) -> Self {
        self.earth_radius_km = earth_radius_km;
        self
    }

    pub fn with_light_speed_m_per_s(mut self, light_speed_m_per_s: f64) -> Self {
        self.light_speed_m_per_s = light_speed_m_per_s;
        self
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("earth_radius_km", self.earth_radius_km)?;
        require_positive("light_speed_m_per_s", self.light_speed_m_per_s)?;
        Ok(())
    }
}

/// Reflector antenna of a beam-limited (uplink) receiver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntennaConfig {
    pub illumination_coefficient: f64,
    pub reflector_diameter_m: f64,
    pub carrier_frequency_hz: f64,
}

impl AntennaConfig {
    pub fn new(
        illumination_coefficient: f64,
        reflector_diameter_m: f64,
        carrier_frequency_hz: f64,
    ) -> Self {
        Self {
            illumination_coefficient,
            reflector_diameter_m,
            carrier_frequency_hz,
        }
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("illumination_coefficient", self.illumination_coefficient)?;
        require_positive("reflector_diameter_m", self.reflector_diameter_m)?;
        require_positive("carrier_frequency_hz", self.carrier_frequency_hz)?;
        Ok(())
    }
}

/// Resolved coverage dome of one receiver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomeGeometry {
    /// Radius of the sphere the transmitters live on.
    pub transmitter_radius_km: f64,
    pub receiver_radius_km: f64,
    /// Earth-central angle from the cap centre to its rim.
    pub vertex_angle_rad: f64,
    /// `cos(vertex_angle_rad)`.
    pub delta: f64,
    pub area_km2: f64,
    /// True when an uplink beam is wider than the transmitter sphere seen
    /// from the receiver, so the cap is bounded by the tangent cone.
    pub tangent_limited: bool,
    /// Half-power beamwidth for beam-limited receivers.
    pub beamwidth_rad: Option<f64>,
}

impl DomeGeometry {
    pub fn new(
        transmitter_radius_km: f64,
        receiver_radius_km: f64,
        vertex_angle_rad: f64,
        tangent_limited: bool,
        beamwidth_rad: Option<f64>,
    ) -> Result<Self> {
        require_positive("receiver_radius_km", receiver_radius_km)?;
        let area_km2 = cap_area(transmitter_radius_km, vertex_angle_rad)?;
        Ok(Self {
            transmitter_radius_km,
            receiver_radius_km,
            vertex_angle_rad,
            delta: vertex_angle_rad.cos(),
            area_km2,
            tangent_limited,
            beamwidth_rad,
        })
    }

    pub fn is_uplink(&self) -> bool {
        self.transmitter_radius_km < self.receiver_radius_km
    }
}

/// Clamps `x` into `[lo, hi]` when it is at most [`CLAMP_TOLERANCE`] outside.
fn clamp_domain(x: f64, lo: f64, hi: f64, context: &'static str) -> Result<f64> {
    if x.is_nan() || x < lo - CLAMP_TOLERANCE || x > hi + CLAMP_TOLERANCE {
        return Err(Error::NumericDomain { context, value: x });
    }
    Ok(x.clamp(lo, hi))
}

pub(crate) fn clamp_unit(x: f64, context: &'static str) -> Result<f64> {
    clamp_domain(x, -1.0, 1.0, context)
}

fn clamped_sqrt(x: f64, context: &'static str) -> Result<f64> {
    Ok(clamp_domain(x, 0.0, f64::INFINITY, context)?.sqrt())
}

/// Half-power (3 dB) beamwidth of a reflector antenna, `κ·c / (f·D)`.
///
/// The product is conventionally expressed in degrees; the result is
/// converted to radians here and nowhere else.
pub fn half_power_beamwidth(antenna: &AntennaConfig, constants: &PhysicalConstants) -> Result<f64> {
    antenna.validate()?;
    require_positive("light_speed_m_per_s", constants.light_speed_m_per_s)?;
    let degrees = antenna.illumination_coefficient * constants.light_speed_m_per_s
        / (antenna.carrier_frequency_hz * antenna.reflector_diameter_m);
    Ok(degrees.to_radians())
}

fn check_uplink_radii(r_t_km: f64, r_r_km: f64) -> Result<()> {
    require_positive("r_t_km", r_t_km)?;
    require_positive("r_r_km", r_r_km)?;
    if r_t_km >= r_r_km {
        return Err(Error::InvalidGeometry(format!(
            "uplink receiver radius {r_r_km} km must exceed transmitter radius {r_t_km} km"
        )));
    }
    Ok(())
}

fn check_downlink_inputs(elevation_rad: f64, r_t_km: f64, r_r_km: f64) -> Result<()> {
    require_positive("r_t_km", r_t_km)?;
    require_positive("r_r_km", r_r_km)?;
    if r_r_km >= r_t_km {
        return Err(Error::InvalidGeometry(format!(
            "downlink transmitter radius {r_t_km} km must exceed receiver radius {r_r_km} km"
        )));
    }
    if !(0.0..=FRAC_PI_2).contains(&elevation_rad) {
        return Err(Error::InvalidParameter {
            name: "min_elevation_rad",
            value: elevation_rad,
            reason: "must lie in [0, pi/2]",
        });
    }
    Ok(())
}

fn check_beamwidth(beamwidth_rad: f64) -> Result<()> {
    if !(0.0..=PI).contains(&beamwidth_rad) {
        return Err(Error::InvalidParameter {
            name: "beamwidth_rad",
            value: beamwidth_rad,
            reason: "must lie in [0, pi]",
        });
    }
    Ok(())
}

/// Half-beam angle above which the beam edge misses the transmitter sphere.
pub fn tangent_half_angle(r_t_km: f64, r_r_km: f64) -> f64 {
    (r_t_km / r_r_km).asin()
}

/// Vertex angle of an uplink (beam-limited) dome.
///
/// The receiver at radius `r_r_km` points its beam at the Earth centre. While
/// the half beam fits inside the transmitter sphere's angular radius the cap
/// rim is where the beam edge meets the sphere:
///
/// `δ = (R_r/R_t)·sin²(θ/2) + cos(θ/2)·√(1 − (R_r/R_t)²·sin²(θ/2))`, `φ = acos δ`.
///
/// Wider beams are cut off by the tangent cone and `φ = acos(R_t/R_r)`. The
/// boolean is true in that case. A tie takes the beam branch; both agree there.
pub fn vertex_angle_uplink(beamwidth_rad: f64, r_t_km: f64, r_r_km: f64) -> Result<(f64, bool)> {
    check_uplink_radii(r_t_km, r_r_km)?;
    check_beamwidth(beamwidth_rad)?;

    let half = 0.5 * beamwidth_rad;
    if half > tangent_half_angle(r_t_km, r_r_km) {
        let cos_tangent = clamp_unit(r_t_km / r_r_km, "uplink tangent branch")?;
        return Ok((cos_tangent.acos(), true));
    }

    let ratio = r_r_km / r_t_km;
    let sin_half = half.sin();
    let radicand = clamped_sqrt(1.0 - ratio * ratio * sin_half * sin_half, "uplink radicand")?;
    let delta = ratio * sin_half * sin_half + half.cos() * radicand;
    let delta = clamp_unit(delta, "uplink delta")?;
    Ok((delta.acos(), false))
}

/// Vertex angle of a downlink (elevation-limited) dome.
///
/// `δ = (R_r/R_t)·cos²α + sin α·√(1 − (R_r/R_t)²·cos²α)`, `φ = acos δ`.
pub fn vertex_angle_downlink(elevation_rad: f64, r_t_km: f64, r_r_km: f64) -> Result<f64> {
    check_downlink_inputs(elevation_rad, r_t_km, r_r_km)?;

    let ratio = r_r_km / r_t_km;
    let cos_el = elevation_rad.cos();
    let radicand = clamped_sqrt(1.0 - ratio * ratio * cos_el * cos_el, "downlink radicand")?;
    let delta = ratio * cos_el * cos_el + elevation_rad.sin() * radicand;
    let delta = clamp_unit(delta, "downlink delta")?;
    Ok(delta.acos())
}

fn check_cap(r_t_km: f64, vertex_angle_rad: f64) -> Result<()> {
    require_positive("r_t_km", r_t_km)?;
    if !(0.0..=PI).contains(&vertex_angle_rad) {
        return Err(Error::InvalidParameter {
            name: "vertex_angle_rad",
            value: vertex_angle_rad,
            reason: "must lie in [0, pi]",
        });
    }
    Ok(())
}

/// Area of a spherical cap, `2π·R²·(1 − cos φ)`.
///
/// Evaluated as `4π·R²·sin²(φ/2)`; the `1 − cos φ` form cancels badly for the
/// sub-milliradian caps of aerial receivers.
pub fn cap_area(r_t_km: f64, vertex_angle_rad: f64) -> Result<f64> {
    check_cap(r_t_km, vertex_angle_rad)?;
    let s = (0.5 * vertex_angle_rad).sin();
    Ok(4.0 * PI * r_t_km * r_t_km * s * s)
}

/// Flat-disc approximation `π·R²·φ²` of [`cap_area`], valid for `φ ≪ 1`.
pub fn cap_area_small_angle(r_t_km: f64, vertex_angle_rad: f64) -> Result<f64> {
    check_cap(r_t_km, vertex_angle_rad)?;
    Ok(PI * r_t_km * r_t_km * vertex_angle_rad * vertex_angle_rad)
}

/// Difference-of-angles forms of the vertex angles.
///
/// These follow from the law of sines in the Earth-centre/receiver/rim
/// triangle rather than from the `δ` expressions, and exist to cross-check
/// [`vertex_angle_uplink`] and [`vertex_angle_downlink`].
pub mod oracle {
    use super::*;

    /// `asin((R_r/R_t)·sin(θ/2)) − θ/2`; only defined off the tangent branch.
    pub fn vertex_angle_uplink_oracle(beamwidth_rad: f64, r_t_km: f64, r_r_km: f64) -> Result<f64> {
        check_uplink_radii(r_t_km, r_r_km)?;
        check_beamwidth(beamwidth_rad)?;
        let half = 0.5 * beamwidth_rad;
        if half > tangent_half_angle(r_t_km, r_r_km) {
            return Err(Error::UnsupportedBranch);
        }
        let sine = clamp_unit((r_r_km / r_t_km) * half.sin(), "uplink oracle")?;
        Ok(sine.asin() - half)
    }

    /// `acos((R_r/R_t)·cos α) − α`.
    pub fn vertex_angle_downlink_oracle(
        elevation_rad: f64,
        r_t_km: f64,
        r_r_km: f64,
    ) -> Result<f64> {
        check_downlink_inputs(elevation_rad, r_t_km, r_r_km)?;
        let cosine = clamp_unit((r_r_km / r_t_km) * elevation_rad.cos(), "downlink oracle")?;
        Ok(cosine.acos() - elevation_rad)
    }
}
