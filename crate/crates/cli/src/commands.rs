//! Subcommand bodies. Each returns the text destined for standard output and
//! leaves printing to the caller, so a failing command emits nothing.

use std::fs;
use std::path::Path;

use sagin_core::{
    coverage, expected_count, full_sphere_count, generate, run_sweep, validate, DomeGeometry,
    ScenarioSpec, SweepSpec,
};

use crate::args::{SampleArgs, ScenarioArgs, SweepArgs};
use crate::descriptor::ScenarioDescriptor;
use crate::error::CliError;
use crate::output::{self, JsonObject};

/// Process-level inputs that are not flags.
#[derive(Debug, Clone, Default)]
pub struct Environment {
    pub earth_radius_km: Option<String>,
}

impl Environment {
    pub fn from_process() -> Self {
        Self {
            earth_radius_km: std::env::var(crate::descriptor::EARTH_RADIUS_ENV).ok(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub stdout: String,
    /// Non-fatal notes for standard error.
    pub warnings: Vec<String>,
}

fn descriptor(args: &ScenarioArgs) -> Result<ScenarioDescriptor, CliError> {
    let base = match &args.descriptor {
        Some(path) => ScenarioDescriptor::from_path(path)?,
        None => ScenarioDescriptor::default(),
    };
    Ok(base.overlay(&args.flag_descriptor()))
}

fn scenario(
    args: &ScenarioArgs,
    env: &Environment,
) -> Result<(ScenarioDescriptor, ScenarioSpec), CliError> {
    let desc = descriptor(args)?;
    let mut constants = desc.constants(env.earth_radius_km.as_deref())?;
    if let Some(c) = args.light_speed_m_per_s {
        constants.light_speed_m_per_s = c;
        constants.validate()?;
    }
    let spec = desc.scenario_spec(constants)?;
    Ok((desc, spec))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display())))
}

pub fn coverage_json(spec: &ScenarioSpec, dome: &DomeGeometry) -> String {
    let warnings = validate(spec)
        .violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>();
    let mut json = JsonObject::new()
        .string("scenario", spec.id.as_str())
        .real("r_t_km", dome.transmitter_radius_km)
        .real("r_r_km", dome.receiver_radius_km);
    if let Some(beamwidth) = dome.beamwidth_rad {
        json = json.real("beamwidth_rad", beamwidth);
    }
    json.real("vertex_angle_rad", dome.vertex_angle_rad)
        .real("delta", dome.delta)
        .real("area_km2", dome.area_km2)
        .boolean("tangent_limited", dome.tangent_limited)
        .strings("validation_warnings", warnings)
        .finish()
}

pub fn run_coverage(args: &ScenarioArgs, env: &Environment) -> Result<Report, CliError> {
    let (_, spec) = scenario(args, env)?;
    let dome = coverage(&spec)?;
    Ok(Report {
        stdout: coverage_json(&spec, &dome),
        warnings: Vec::new(),
    })
}

pub fn run_sweep_command(args: &SweepArgs, env: &Environment) -> Result<Report, CliError> {
    let (_, base) = scenario(&args.scenario, env)?;
    let spec = SweepSpec {
        base,
        parameter: args.param.parameter(),
        range: (
            args.param.to_internal(args.from),
            args.param.to_internal(args.to),
        ),
        steps: args.steps,
        scale: args.scale.into(),
    };
    let rows = run_sweep(&spec)?;

    let mut csv = String::from(output::SWEEP_HEADER);
    csv.push('\n');
    let mut warnings = Vec::new();
    for row in &rows {
        let value = args.param.to_external(row.parameter_value);
        if let Err(e) = &row.outcome {
            warnings.push(format!("{} = {}: {e}", spec.parameter, output::real(value)));
        }
        csv.push_str(&format!(
            "{},{},{},{}\n",
            output::real(value),
            output::real(row.vertex_angle_rad().unwrap_or(f64::NAN)),
            output::real(row.area_km2().unwrap_or(f64::NAN)),
            row.tangent_limited()
        ));
    }

    match &args.output {
        Some(path) => {
            write_file(path, &csv)?;
            Ok(Report {
                stdout: String::new(),
                warnings,
            })
        }
        None => Ok(Report {
            stdout: csv,
            warnings,
        }),
    }
}

pub fn run_sample(args: &SampleArgs, env: &Environment) -> Result<Report, CliError> {
    let (desc, spec) = scenario(&args.scenario, env)?;
    let config = desc.sample_config()?;
    let dome = coverage(&spec)?;
    let topology = generate(&dome, &config)?;
    write_file(&args.output, &output::points_csv(&topology.points))?;
    let summary = JsonObject::new()
        .integer("count", topology.count as u64)
        .real("area_km2", dome.area_km2)
        .real("vertex_angle_rad", dome.vertex_angle_rad)
        .integer("seed", config.seed)
        .string("rng_algorithm", &config.rng_algorithm)
        .string("mode", config.mode.as_str())
        .finish();
    Ok(Report {
        stdout: summary,
        warnings: Vec::new(),
    })
}

pub fn run_count(args: &ScenarioArgs, env: &Environment) -> Result<Report, CliError> {
    let (desc, spec) = scenario(args, env)?;
    let density = desc.density()?;
    if !(density.is_finite() && density >= 0.0) {
        return Err(CliError::Input(format!(
            "density_per_km2 = {density} must be non-negative"
        )));
    }
    let dome = coverage(&spec)?;
    let (exact, mean) = expected_count(&dome, density);
    let stdout = JsonObject::new()
        .real("exact_product", exact)
        .integer("poisson_mean", mean)
        .real(
            "full_sphere_count",
            full_sphere_count(dome.transmitter_radius_km, density),
        )
        .finish();
    Ok(Report {
        stdout,
        warnings: Vec::new(),
    })
}

pub fn run(command: &crate::args::Command, env: &Environment) -> Result<Report, CliError> {
    use crate::args::Command;
    match command {
        Command::Coverage(a) => run_coverage(a, env),
        Command::Sweep(a) => run_sweep_command(a, env),
        Command::Sample(a) => run_sample(a, env),
        Command::Count(a) => run_count(a, env),
    }
}
