//! Argument definitions and command dispatch for the `poincare` binary.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use poincare::BeamSpec;
use serde::Serialize;

use crate::dsl::{parse_angle, parse_pipeline, parse_word, DslError};
use crate::report::{
    classify_report, entropy_sweep, lorentz_report, oracle_report, run_beam, sphere_sweep, StageStatus,
};

#[derive(Debug, Parser)]
#[command(name = "poincare", version, about = "Polarization optics on the Lorentz group")]
pub struct Cli {
    /// Emit JSON Lines instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a beam through an optical pipeline, e.g. "rotate(45deg) | atten(0.2, 0)".
    Beam {
        #[command(flatten)]
        beam: BeamArgs,
        /// Pipeline text; empty means no elements.
        #[arg(long, default_value = "")]
        pipeline: String,
    },
    /// Classify a four-momentum (t, z, x, y) and sample its little group.
    Classify {
        #[arg(num_args = 4, value_names = ["T", "Z", "X", "Y"], allow_negative_numbers = true, required = true)]
        momentum: Vec<f64>,
        /// Parameter of the stabilizer sample.
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        param: f64,
    },
    /// Sphere radii and angles on a grid of decoherence angles from 0 to 90 degrees.
    Sphere {
        #[command(flatten)]
        amps: AmplitudeArgs,
        #[arg(long, default_value_t = 10)]
        points: usize,
    },
    /// Entropy of the beam and of its companion on a grid of decoherence angles.
    Entropy {
        #[command(flatten)]
        amps: AmplitudeArgs,
        #[arg(long, default_value_t = 10)]
        points: usize,
    },
    /// Ensemble estimate of the coherency matrix from phase-jittered fields.
    Oracle {
        #[command(flatten)]
        amps: AmplitudeArgs,
        #[command(flatten)]
        decoherence: Decoherence,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Print the 2x2 and 4x4 forms of a generator word, e.g. "R(90deg) B(0.5)".
    Lorentz { word: String },
}

#[derive(Debug, Clone, Args)]
pub struct AmplitudeArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Relative phase, radians or with a `deg` suffix.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub delta: String,
}

#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct Decoherence {
    /// Decoherence angle, radians or with a `deg` suffix.
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<String>,
    /// Decay exponent with `cos χ = e^{-σ}`.
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct BeamArgs {
    #[command(flatten)]
    pub amps: AmplitudeArgs,
    #[command(flatten)]
    pub decoherence: Decoherence,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] DslError),
    #[error("domain error: {0}")]
    Domain(#[from] poincare::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    /// Single-line JSON diagnostic for `--json` mode.
    pub fn to_json(&self) -> String {
        let value = match self {
            CliError::Parse(e) => serde_json::json!({
                "error": e.code.as_str(),
                "line": e.line,
                "column": e.column,
                "message": e.message,
            }),
            CliError::Domain(e) => serde_json::json!({ "error": "domain", "message": e.to_string() }),
            CliError::Io(e) => serde_json::json!({ "error": "io", "message": e.to_string() }),
        };
        value.to_string()
    }
}

fn amplitudes(args: &AmplitudeArgs) -> Result<(f64, f64, f64), CliError> {
    Ok((args.a, args.b, parse_angle(&args.delta)?))
}

fn beam_spec(amps: &AmplitudeArgs, dec: &Decoherence, default_sigma: f64) -> Result<BeamSpec, CliError> {
    let (a, b, delta) = amplitudes(amps)?;
    Ok(match (&dec.chi, dec.sigma) {
        (Some(chi), _) => BeamSpec::with_chi(a, b, delta, parse_angle(chi)?)?,
        (None, Some(sigma)) => BeamSpec::with_sigma(a, b, delta, sigma)?,
        (None, None) => BeamSpec::with_sigma(a, b, delta, default_sigma)?,
    })
}

fn json_lines<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<(), CliError> {
    for r in rows {
        serde_json::to_writer(&mut *out, r).map_err(io::Error::from)?;
        writeln!(out)?;
    }
    Ok(())
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"))
}

/// Runs one parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Beam { beam, pipeline } => {
            let ast = parse_pipeline(pipeline)?;
            let spec = beam_spec(&beam.amps, &beam.decoherence, 0.0)?;
            let stages = run_beam(&spec, &ast);
            if cli.json {
                return json_lines(out, &stages);
            }
            writeln!(
                out,
                "{:>5}  {:<28} {:>10} {:>10} {:>10} {:>10} {:>9} {:>9} {:>9} {:>11}",
                "stage", "element", "S0", "S3", "S1", "S2", "f", "chi", "S", "det"
            )?;
            for s in &stages {
                let element = s.element.as_deref().unwrap_or("(input)");
                write!(
                    out,
                    "{:>5}  {:<28} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>9} {:>9} {:>9} {:>11.4e}",
                    s.stage,
                    element,
                    s.stokes.s0,
                    s.stokes.s3,
                    s.stokes.s1,
                    s.stokes.s2,
                    opt(s.f),
                    opt(s.chi),
                    opt(s.entropy),
                    s.det
                )?;
                if s.status == StageStatus::ZeroBeam {
                    write!(out, "  zero beam")?;
                }
                writeln!(out)?;
            }
        }
        Command::Classify { momentum, param } => {
            let p = [momentum[0], momentum[1], momentum[2], momentum[3]];
            let r = classify_report(p, *param)?;
            if cli.json {
                return json_lines(out, &[r]);
            }
            writeln!(out, "class:        {}", r.class)?;
            writeln!(out, "mass squared: {}", r.mass_squared)?;
            if let (Some(word), Some(c), Some(s)) = (&r.word, &r.canonical, &r.stabilizer) {
                writeln!(out, "to canonical: {}", if word.is_empty() { "(identity)" } else { word })?;
                writeln!(
                    out,
                    "canonical:    [[{}, {}{:+}i], [{}{:+}i, {}]]",
                    c.d1, c.off.re, c.off.im, c.off.re, -c.off.im, c.d2
                )?;
                writeln!(out, "stabilizer:   {}({})", s.generator, s.parameter)?;
                for row in &s.matrix {
                    writeln!(
                        out,
                        "              [{:>10.6}{:+.6}i  {:>10.6}{:+.6}i]",
                        row[0].re, row[0].im, row[1].re, row[1].im
                    )?;
                }
            }
        }
        Command::Sphere { amps, points } => {
            let (a, b, delta) = amplitudes(amps)?;
            let rows = sphere_sweep(a, b, delta, *points)?;
            if cli.json {
                return json_lines(out, &rows);
            }
            writeln!(
                out,
                "{:>9} {:>10} {:>10} {:>10} {:>9} {:>9} {:>9}",
                "chi(deg)", "S0", "R", "S3", "f", "polar", "azimuth"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>9.3} {:>10.6} {:>10.6} {:>10.6} {:>9.6} {:>9.6} {:>9.6}",
                    r.chi.to_degrees(),
                    r.radii.s0,
                    r.radii.r,
                    r.radii.s3,
                    r.f,
                    r.polar,
                    r.azimuth
                )?;
            }
        }
        Command::Entropy { amps, points } => {
            let (a, b, delta) = amplitudes(amps)?;
            let rows = entropy_sweep(a, b, delta, *points)?;
            if cli.json {
                return json_lines(out, &rows);
            }
            writeln!(
                out,
                "{:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>11}",
                "chi(deg)", "f", "S", "f'", "S'", "S+S'", "det+det'"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>9.3} {:>9.6} {:>9.6} {:>9.6} {:>9.6} {:>9.6} {:>11.6}",
                    r.chi.to_degrees(),
                    r.f,
                    r.entropy,
                    r.f_complement,
                    r.entropy_complement,
                    r.total_entropy,
                    r.total_det
                )?;
            }
        }
        Command::Oracle {
            amps,
            decoherence,
            seed,
            samples,
        } => {
            let spec = beam_spec(amps, decoherence, std::f64::consts::LN_2)?;
            let r = oracle_report(&spec, *samples, *seed)?;
            if cli.json {
                return json_lines(out, &[r]);
            }
            writeln!(out, "samples:   {} (seed {})", r.samples, r.seed)?;
            writeln!(out, "sigma:     {} (phase variance {})", r.sigma, r.variance)?;
            writeln!(out, "S11, S22:  {}, {}", r.s11, r.s22)?;
            writeln!(out, "S12:       {}{:+}i", r.s12.re, r.s12.im)?;
            writeln!(
                out,
                "|S12|/ab:  {} (expected {}, standard error {:.2e})",
                r.coherence, r.expected, r.standard_error
            )?;
        }
        Command::Lorentz { word } => {
            let w = parse_word(word)?;
            let r = lorentz_report(&w);
            if cli.json {
                return json_lines(out, &[r]);
            }
            writeln!(out, "word: {}", if r.word.is_empty() { "(identity)" } else { &r.word })?;
            writeln!(out, "2x2:")?;
            for row in &r.matrix {
                writeln!(
                    out,
                    "  [{:>10.6}{:+.6}i  {:>10.6}{:+.6}i]",
                    row[0].re, row[0].im, row[1].re, row[1].im
                )?;
            }
            writeln!(out, "4x4 (t, z, x, y):")?;
            for row in &r.lorentz {
                writeln!(out, "  [{:>10.6} {:>10.6} {:>10.6} {:>10.6}]", row[0], row[1], row[2], row[3])?;
            }
        }
    }
    Ok(())
}
