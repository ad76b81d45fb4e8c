use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sagin_core::{Scale, SweptParameter};

use crate::descriptor::ScenarioDescriptor;

#[derive(Debug, Parser)]
#[command(
    name = "sagin",
    version,
    about = "Spherical-dome coverage and transmitter sampling for space-air-ground links"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resolve a scenario's coverage dome and print it as JSON.
    Coverage(ScenarioArgs),
    /// Sweep one parameter and print vertex angle and area per grid point as CSV.
    Sweep(SweepArgs),
    /// Draw one seeded transmitter realisation into a CSV file.
    Sample(SampleArgs),
    /// Print the expected transmitter counts for a descriptor's density.
    Count(ScenarioArgs),
}

/// Scenario parameters, from a descriptor file and/or flags. Flags win.
#[derive(Debug, Clone, Default, Args)]
pub struct ScenarioArgs {
    /// JSON scenario descriptor.
    #[arg(long, value_name = "FILE")]
    pub descriptor: Option<PathBuf>,
    /// g2a, a2s, g2s, a2g, s2a or s2g.
    #[arg(long)]
    pub scenario: Option<String>,
    #[arg(long)]
    pub carrier_frequency_hz: Option<f64>,
    #[arg(long)]
    pub illumination_coefficient: Option<f64>,
    #[arg(long)]
    pub reflector_diameter_m: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub min_elevation_deg: Option<f64>,
    #[arg(long)]
    pub air_altitude_km: Option<f64>,
    #[arg(long)]
    pub space_altitude_km: Option<f64>,
    /// Overrides the descriptor and SAGIN_EARTH_RADIUS_KM.
    #[arg(long)]
    pub earth_radius_km: Option<f64>,
    /// Speed of light used for the beamwidth (default 2.998e8).
    #[arg(long)]
    pub light_speed_m_per_s: Option<f64>,
    #[arg(long)]
    pub density_per_km2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub rx_azimuth_deg: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub rx_polar_deg: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// area_uniform (default) or paper_faithful.
    #[arg(long)]
    pub mode: Option<String>,
}

impl ScenarioArgs {
    pub fn flag_descriptor(&self) -> ScenarioDescriptor {
        ScenarioDescriptor {
            scenario: self.scenario.clone(),
            carrier_frequency_hz: self.carrier_frequency_hz,
            illumination_coefficient: self.illumination_coefficient,
            reflector_diameter_m: self.reflector_diameter_m,
            min_elevation_deg: self.min_elevation_deg,
            air_altitude_km: self.air_altitude_km,
            space_altitude_km: self.space_altitude_km,
            earth_radius_km: self.earth_radius_km,
            density_per_km2: self.density_per_km2,
            rx_azimuth_deg: self.rx_azimuth_deg,
            rx_polar_deg: self.rx_polar_deg,
            seed: self.seed,
            mode: self.mode.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    CarrierFrequencyHz,
    /// Degrees on the command line and in the output column.
    MinElevationDeg,
    AirAltitudeKm,
    SpaceAltitudeKm,
}

impl SweepParam {
    pub fn parameter(self) -> SweptParameter {
        match self {
            SweepParam::CarrierFrequencyHz => SweptParameter::CarrierFrequency,
            SweepParam::MinElevationDeg => SweptParameter::MinElevation,
            SweepParam::AirAltitudeKm => SweptParameter::AirAltitude,
            SweepParam::SpaceAltitudeKm => SweptParameter::SpaceAltitude,
        }
    }

    pub fn to_internal(self, value: f64) -> f64 {
        match self {
            SweepParam::MinElevationDeg => value.to_radians(),
            _ => value,
        }
    }

    pub fn to_external(self, value: f64) -> f64 {
        match self {
            SweepParam::MinElevationDeg => value.to_degrees(),
            _ => value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ScaleArg {
    #[default]
    Linear,
    #[value(alias = "logarithmic")]
    Log,
}

impl From<ScaleArg> for Scale {
    fn from(s: ScaleArg) -> Self {
        match s {
            ScaleArg::Linear => Scale::Linear,
            ScaleArg::Log => Scale::Logarithmic,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    #[arg(long, value_enum)]
    pub param: SweepParam,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = ScaleArg::Linear)]
    pub scale: ScaleArg,
    /// Write the CSV here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Destination of the point CSV.
    #[arg(long, value_name = "FILE")]
    pub output: PathBuf,
}
