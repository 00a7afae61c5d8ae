//! Serializable records emitted by the commands.

use poincare::lorentz::{to_four_by_four, FourVector, GeneratorWord, GroupElement};
use poincare::mat2::HermitianMat2;
use poincare::oracle::{mc_coherency_with, Amplitudes, JitterModel};
use poincare::polarization::{
    apply_element, coherency_from_beam, degree_of_polarization, stokes_from_coherency, CoherencyMatrix,
};
use poincare::sphere::{entropy, sphere_state_or_default, sweep_chi};
use poincare::wigner::{
    canonicalize, classify, is_little_group_element, stabilizer_element, MomentumKind, MomentumMatrix,
    DEFAULT_CLASSIFY_TOL,
};
use poincare::{BeamSpec, Complex, Execution, Mat2, StokesVector};
use serde::Serialize;

use crate::dsl::PipelineAst;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StokesJson {
    pub s0: f64,
    pub s3: f64,
    pub s1: f64,
    pub s2: f64,
}

impl From<&StokesVector> for StokesJson {
    fn from(s: &StokesVector) -> Self {
        StokesJson {
            s0: s.s0,
            s3: s.s3,
            s1: s.s1,
            s2: s.s2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiiJson {
    pub s0: f64,
    pub r: f64,
    pub s3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for ComplexJson {
    fn from(z: Complex) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

fn matrix_json(m: &Mat2) -> [[ComplexJson; 2]; 2] {
    m.entries().map(|row| row.map(ComplexJson::from))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StageStatus {
    Ok,
    ZeroBeam,
}

/// State of the beam after `stage` elements of a pipeline.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageReport {
    pub v: u32,
    pub stage: usize,
    /// `None` for the input beam.
    pub element: Option<String>,
    pub status: StageStatus,
    pub stokes: StokesJson,
    pub f: Option<f64>,
    /// Decoherence angle read back from the matrix, `cos χ = |S12| / √(S11 S22)`.
    pub chi: Option<f64>,
    pub entropy: Option<f64>,
    pub det: f64,
    pub radii: RadiiJson,
}

/// `χ` of the beam that a coherency matrix represents; undefined if one
/// component carries no intensity.
pub fn coherency_chi(c: &CoherencyMatrix) -> Option<f64> {
    let denom = (c.s11() * c.s22()).sqrt();
    if denom > 0.0 {
        Some((c.s12().norm() / denom).clamp(0.0, 1.0).acos())
    } else {
        None
    }
}

pub fn stage_report(stage: usize, element: Option<String>, c: &CoherencyMatrix) -> StageReport {
    let stokes = stokes_from_coherency(c);
    let radius = stokes.radius();
    let f = degree_of_polarization(c).ok();
    StageReport {
        v: SCHEMA_VERSION,
        stage,
        element,
        status: if f.is_some() { StageStatus::Ok } else { StageStatus::ZeroBeam },
        stokes: (&stokes).into(),
        f,
        chi: coherency_chi(c),
        entropy: f.and_then(|f| entropy(f).ok()),
        det: c.det(),
        radii: RadiiJson {
            s0: stokes.s0,
            r: radius,
            s3: stokes.s3.abs(),
        },
    }
}

/// Stage 0 is the input beam; stage `k` follows the `k`-th element.
pub fn run_beam(beam: &BeamSpec, pipeline: &PipelineAst) -> Vec<StageReport> {
    let mut c = coherency_from_beam(beam);
    let mut out = vec![stage_report(0, None, &c)];
    for (i, node) in pipeline.nodes.iter().enumerate() {
        c = apply_element(&node.element, &c);
        out.push(stage_report(i + 1, Some(node.to_string()), &c));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HermitianJson {
    pub d1: f64,
    pub d2: f64,
    pub off: ComplexJson,
}

impl From<&HermitianMat2> for HermitianJson {
    fn from(h: &HermitianMat2) -> Self {
        HermitianJson {
            d1: h.d1(),
            d2: h.d2(),
            off: h.off().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilizerJson {
    pub generator: String,
    pub parameter: f64,
    pub matrix: [[ComplexJson; 2]; 2],
    /// Whether the sample fixes the input momentum.
    pub fixes_input: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub v: u32,
    pub momentum: [f64; 4],
    pub class: &'static str,
    pub mass_squared: f64,
    /// Word taking the input to the canonical momentum.
    pub word: Option<String>,
    pub canonical: Option<HermitianJson>,
    pub stabilizer: Option<StabilizerJson>,
}

pub fn classify_report(p: [f64; 4], parameter: f64) -> poincare::Result<ClassifyReport> {
    let momentum = MomentumMatrix::from_four_momentum(&FourVector::from_array(p));
    let class = classify(&momentum, DEFAULT_CLASSIFY_TOL)?;
    let mut report = ClassifyReport {
        v: SCHEMA_VERSION,
        momentum: p,
        class: class.kind.as_str(),
        mass_squared: class.mass_squared,
        word: None,
        canonical: None,
        stabilizer: None,
    };
    if class.kind == MomentumKind::Null {
        return Ok(report);
    }
    let canon = canonicalize(&momentum)?;
    let stab = stabilizer_element(class.kind, parameter)?;
    // carry the stabilizer of the canonical form back to the input momentum
    let back = canon.element.inverse().compose(&stab.element).compose(&canon.element);
    let scale = momentum.hermitian().max_abs().max(1.0);
    report.word = Some(canon.word.to_string());
    report.canonical = Some(canon.canonical.hermitian().into());
    report.stabilizer = Some(StabilizerJson {
        generator: stabilizer_name(class.kind).to_string(),
        parameter,
        matrix: matrix_json(stab.element.matrix()),
        fixes_input: is_little_group_element(&back, &momentum, 1e-9 * scale),
    });
    Ok(report)
}

fn stabilizer_name(kind: MomentumKind) -> &'static str {
    match kind {
        MomentumKind::Massive => "rotation_y",
        MomentumKind::Massless => "triangular",
        MomentumKind::ImaginaryMass => "boost_x",
        MomentumKind::Null => "none",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SphereReport {
    pub v: u32,
    pub chi: f64,
    pub stokes: StokesJson,
    pub radii: RadiiJson,
    pub f: f64,
    pub polar: f64,
    pub azimuth: f64,
}

pub fn sphere_sweep(a: f64, b: f64, delta: f64, points: usize) -> poincare::Result<Vec<SphereReport>> {
    Ok(sweep_chi(a, b, delta, points, Execution::default())?
        .into_iter()
        .map(|p| {
            let sphere = sphere_state_or_default(&p.stokes);
            SphereReport {
                v: SCHEMA_VERSION,
                chi: p.chi,
                stokes: (&p.stokes).into(),
                radii: RadiiJson {
                    s0: p.radii.s0,
                    r: p.radii.r,
                    s3: p.radii.s3,
                },
                f: p.two_sphere.f,
                polar: sphere.polar,
                azimuth: sphere.azimuth,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub v: u32,
    pub chi: f64,
    pub f: f64,
    pub entropy: f64,
    pub det: f64,
    pub f_complement: f64,
    pub entropy_complement: f64,
    pub det_complement: f64,
    pub total_det: f64,
    pub total_entropy: f64,
}

pub fn entropy_sweep(a: f64, b: f64, delta: f64, points: usize) -> poincare::Result<Vec<EntropyReport>> {
    Ok(sweep_chi(a, b, delta, points, Execution::default())?
        .into_iter()
        .map(|p| {
            let t = &p.two_sphere;
            EntropyReport {
                v: SCHEMA_VERSION,
                chi: p.chi,
                f: t.f,
                entropy: t.entropy,
                det: t.det,
                f_complement: t.f_complement,
                entropy_complement: t.entropy_complement,
                det_complement: t.det_complement,
                total_det: t.total_det(),
                total_entropy: t.total_entropy(),
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub v: u32,
    pub samples: u64,
    pub seed: u64,
    pub sigma: f64,
    pub variance: f64,
    pub s11: f64,
    pub s22: f64,
    pub s12: ComplexJson,
    /// `|S12| / (ab)` from the ensemble.
    pub coherence: f64,
    /// `e^{-σ}`.
    pub expected: f64,
    /// Standard error of `coherence` for this sample count.
    pub standard_error: f64,
}

/// Standard error of the ensemble mean of `cos φ` with `φ ~ N(0, 2σ)`.
pub fn coherence_standard_error(sigma: f64, samples: u64) -> f64 {
    -(-2.0 * sigma).exp_m1() / (2.0 * samples as f64).sqrt()
}

pub fn oracle_report(beam: &BeamSpec, samples: u64, seed: u64) -> poincare::Result<OracleReport> {
    let model = JitterModel::for_sigma(beam.sigma(), samples, seed)?;
    let amps = Amplitudes {
        a: beam.a(),
        b: beam.b(),
        delta: beam.delta(),
    };
    let c = mc_coherency_with(&amps, &model, Execution::default())?;
    let ab = beam.a() * beam.b();
    Ok(OracleReport {
        v: SCHEMA_VERSION,
        samples,
        seed,
        sigma: beam.sigma(),
        variance: model.variance(),
        s11: c.s11(),
        s22: c.s22(),
        s12: c.s12().into(),
        coherence: if ab > 0.0 { c.s12().norm() / ab } else { 0.0 },
        expected: beam.cos_chi(),
        standard_error: coherence_standard_error(beam.sigma(), samples),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LorentzReport {
    pub v: u32,
    pub word: String,
    pub matrix: [[ComplexJson; 2]; 2],
    pub lorentz: [[f64; 4]; 4],
    pub metric_defect: f64,
}

pub fn lorentz_report(word: &GeneratorWord) -> LorentzReport {
    let g: GroupElement = poincare::lorentz::compose(word);
    let l = to_four_by_four(&g);
    LorentzReport {
        v: SCHEMA_VERSION,
        word: word.to_string(),
        matrix: matrix_json(g.matrix()),
        lorentz: *l.rows(),
        metric_defect: l.metric_defect(),
    }
}
