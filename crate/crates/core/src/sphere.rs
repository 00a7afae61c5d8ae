//! Poincaré-sphere geometry, entropy, and the two-sphere determinant law.
//!
//! Three radii describe a beam: `S0` (intensity, the largest), `R` (the
//! usual sphere radius) and `S3` (the smallest, reached at `χ = 90°`).
//! `S0² - R² = det C = (ab)² sin²χ` is Lorentz invariant.
//!
//! A companion sphere swaps `cos χ ↔ sin χ`; its determinant is `(ab)² cos²χ`,
//! so the two determinants always sum to `(ab)²`.
//!
//! Entropies are in nats. For `a = b` the largest entropy is `ln 2`.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::mat2::{Complex, HermitianMat2};
use crate::parallel::{map_indexed, Execution};
use crate::polarization::{
    coherency_from_beam, degree_of_polarization, stokes_from_coherency, BeamSpec, CoherencyMatrix,
    StokesVector,
};

/// Spherical coordinates of the polarized part of a Stokes vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereState {
    pub stokes: StokesVector,
    /// `R = √(S1² + S2² + S3²)`.
    pub radius: f64,
    /// Polar angle ξ from the S3 axis.
    pub polar: f64,
    /// Azimuth δ in the (S1, S2) plane.
    pub azimuth: f64,
}

/// `S3 = R cos ξ`, `S1 = R sin ξ cos δ`, `S2 = R sin ξ sin δ`.
///
/// Fails with [`Error::DegenerateDirection`] when `R = 0`; use
/// [`sphere_state_or_default`] to get the zero-angle convention instead.
pub fn sphere_state(s: &StokesVector) -> Result<SphereState> {
    let radius = s.radius();
    if radius == 0.0 {
        return Err(Error::DegenerateDirection);
    }
    Ok(SphereState {
        stokes: *s,
        radius,
        polar: s.s1.hypot(s.s2).atan2(s.s3),
        azimuth: s.s2.atan2(s.s1),
    })
}

/// Like [`sphere_state`] but sets both angles to 0 when `R = 0`.
pub fn sphere_state_or_default(s: &StokesVector) -> SphereState {
    sphere_state(s).unwrap_or(SphereState {
        stokes: *s,
        radius: 0.0,
        polar: 0.0,
        azimuth: 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Radii {
    pub s0: f64,
    pub r: f64,
    pub s3: f64,
}

/// `S0 = (a²+b²)/2`, `R = ½√((a²-b²)² + 4(ab)² cos²χ)`, `S3 = (a²-b²)/2`.
pub fn radii(beam: &BeamSpec) -> Radii {
    let (a2, b2) = (beam.a() * beam.a(), beam.b() * beam.b());
    let ab_cos = beam.a() * beam.b() * beam.cos_chi();
    Radii {
        s0: 0.5 * (a2 + b2),
        r: 0.5 * (a2 - b2).hypot(2.0 * ab_cos),
        s3: 0.5 * (a2 - b2),
    }
}

/// `(ab)² sin²χ`, which equals `det C` and `S0² - R²`.
pub fn lorentz_invariant(beam: &BeamSpec) -> f64 {
    let ab = beam.a() * beam.b();
    ab * ab * beam.sin_chi_squared()
}

/// A unit-trace coherency matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(HermitianMat2);

impl DensityMatrix {
    pub fn hermitian(&self) -> &HermitianMat2 {
        &self.0
    }

    /// Eigenvalues, equal to `((1+f)/2, (1-f)/2)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let (l1, l2, _) = crate::mat2::eig_hermitian(&self.0);
        (l1, l2)
    }

    /// Von Neumann entropy `-Σ λ ln λ`, computed from the spectrum.
    pub fn von_neumann_entropy(&self) -> f64 {
        let (l1, l2) = self.eigenvalues();
        xlnx_neg(l1.clamp(0.0, 1.0)) + xlnx_neg(l2.clamp(0.0, 1.0))
    }
}

/// `ρ = C / tr C`.
pub fn density_matrix(c: &CoherencyMatrix) -> Result<DensityMatrix> {
    let trace = c.trace();
    if trace <= 0.0 {
        return Err(Error::ZeroBeam);
    }
    Ok(DensityMatrix(c.hermitian().scale(trace.recip())))
}

/// `-x ln x` with `0 ln 0 = 0`.
fn xlnx_neg(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        -x * x.ln()
    }
}

/// Two-level entropy as a function of the degree of polarization:
/// `S = -((1+f)/2) ln((1+f)/2) - ((1-f)/2) ln((1-f)/2)`.
pub fn entropy(f: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&f) {
        return Err(Error::Domain {
            name: "degree of polarization",
            value: f,
            domain: "[0, 1]",
        });
    }
    Ok(xlnx_neg(0.5 * (1.0 + f)) + xlnx_neg(0.5 * (1.0 - f)))
}

/// [`entropy`] in bits.
pub fn entropy_bits(f: f64) -> Result<f64> {
    entropy(f).map(|s| s / LN_2)
}

/// Entropy of a fully incoherent beam (`χ = 90°`):
/// `(a²/(a²+b²)) ln((a²+b²)/a²) + (b²/(a²+b²)) ln((a²+b²)/b²)`.
///
/// Equals `ln 2` at `a = b` and 0 when one amplitude vanishes.
pub fn max_entropy(a: f64, b: f64) -> Result<f64> {
    let (a2, b2) = (a * a, b * b);
    let total = a2 + b2;
    if total <= 0.0 {
        return Err(Error::ZeroBeam);
    }
    let term = |w: f64| if w == 0.0 { 0.0 } else { (w / total) * (total / w).ln() };
    Ok(term(a2) + term(b2))
}

/// The beam's sphere and its companion with `cos χ ↔ sin χ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSphereSystem {
    pub beam: BeamSpec,
    pub f: f64,
    pub entropy: f64,
    /// `det C = (ab)² sin²χ`.
    pub det: f64,
    pub f_complement: f64,
    pub entropy_complement: f64,
    /// `det C' = (ab)² cos²χ`.
    pub det_complement: f64,
}

impl TwoSphereSystem {
    /// `det C + det C'`, always `(ab)²`.
    pub fn total_det(&self) -> f64 {
        self.det + self.det_complement
    }

    pub fn total_entropy(&self) -> f64 {
        self.entropy + self.entropy_complement
    }
}

/// Coherency matrix of the companion beam: off-diagonal `ab sin χ e^{-iδ}`.
pub fn complement_coherency(beam: &BeamSpec) -> CoherencyMatrix {
    let (a, b) = (beam.a(), beam.b());
    let sin_chi = beam.sin_chi_squared().sqrt();
    let h = HermitianMat2::new(a * a, b * b, Complex::from_polar(a * b * sin_chi, -beam.delta()))
        .expect("finite beam parameters");
    CoherencyMatrix::new(h).expect("companion coherency is positive")
}

/// Builds both spheres. `f'` is `√((a²-b²)² + 4(ab)² sin²χ)/(a²+b²)`.
pub fn second_sphere(beam: &BeamSpec) -> Result<TwoSphereSystem> {
    let c = coherency_from_beam(beam);
    let c2 = complement_coherency(beam);
    let f = degree_of_polarization(&c)?;
    let f_complement = degree_of_polarization(&c2)?;
    let ab2 = (beam.a() * beam.b()).powi(2);
    Ok(TwoSphereSystem {
        beam: *beam,
        f,
        entropy: entropy(f)?,
        det: lorentz_invariant(beam),
        f_complement,
        entropy_complement: entropy(f_complement)?,
        det_complement: ab2 * beam.cos_chi().powi(2),
    })
}

/// Geometry and entropy of one beam at one decoherence angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub chi: f64,
    pub stokes: StokesVector,
    pub radii: Radii,
    pub sphere: SphereState,
    pub two_sphere: TwoSphereSystem,
}

/// Evaluates `points` evenly spaced decoherence angles on `[0, π/2]`.
pub fn sweep_chi(a: f64, b: f64, delta: f64, points: usize, exec: Execution) -> Result<Vec<SweepPoint>> {
    if points < 2 {
        return Err(Error::Domain {
            name: "points",
            value: points as f64,
            domain: "[2, inf)",
        });
    }
    let step = std::f64::consts::FRAC_PI_2 / (points - 1) as f64;
    map_indexed(points, exec, |i| {
        let chi = if i + 1 == points {
            std::f64::consts::FRAC_PI_2
        } else {
            i as f64 * step
        };
        let beam = BeamSpec::with_chi(a, b, delta, chi)?;
        let stokes = stokes_from_coherency(&coherency_from_beam(&beam));
        Ok(SweepPoint {
            chi,
            stokes,
            radii: radii(&beam),
            sphere: sphere_state_or_default(&stokes),
            two_sphere: second_sphere(&beam)?,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::GroupElement;
    use crate::polarization::transform_coherency;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn chi_beam(a: f64, b: f64, chi: f64) -> BeamSpec {
        BeamSpec::with_chi(a, b, 0.0, chi).unwrap()
    }

    #[test]
    fn sphere_state_examples() {
        let s = sphere_state(&StokesVector::new(1.0, 0.5, 0.0, 0.0)).unwrap();
        assert_eq!((s.radius, s.polar), (0.5, 0.0));
        let s = sphere_state(&StokesVector::new(1.0, 0.0, 1.0, 0.0)).unwrap();
        assert_eq!((s.radius, s.polar, s.azimuth), (1.0, FRAC_PI_2, 0.0));
        let stokes = stokes_from_coherency(&coherency_from_beam(&chi_beam(2.0, 1.0, FRAC_PI_2)));
        assert!((sphere_state(&stokes).unwrap().radius - 1.5).abs() < 1e-15);
        assert_eq!(
            sphere_state(&StokesVector::new(1.0, 0.0, 0.0, 0.0)),
            Err(Error::DegenerateDirection)
        );
        assert_eq!(sphere_state_or_default(&StokesVector::new(1.0, 0.0, 0.0, 0.0)).polar, 0.0);
    }

    #[test]
    fn sphere_state_reconstructs_components() {
        let s = StokesVector::new(3.0, -0.4, 1.2, -2.1);
        let st = sphere_state(&s).unwrap();
        assert!((st.radius * st.polar.cos() - s.s3).abs() < 1e-15);
        assert!((st.radius * st.polar.sin() * st.azimuth.cos() - s.s1).abs() < 1e-15);
        assert!((st.radius * st.polar.sin() * st.azimuth.sin() - s.s2).abs() < 1e-15);
    }

    #[test]
    fn radii_examples() {
        assert_eq!(radii(&chi_beam(1.0, 1.0, 0.0)), Radii { s0: 1.0, r: 1.0, s3: 0.0 });
        assert_eq!(radii(&chi_beam(1.0, 1.0, FRAC_PI_2)), Radii { s0: 1.0, r: 0.0, s3: 0.0 });
        let r = radii(&chi_beam(2.0, 1.0, PI / 3.0));
        assert_eq!(r.s0, 2.5);
        assert_eq!(r.s3, 1.5);
        assert!((r.r - 0.5 * 13.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn lorentz_invariant_examples() {
        assert_eq!(lorentz_invariant(&chi_beam(1.3, 0.2, 0.0)), 0.0);
        assert!((lorentz_invariant(&chi_beam(1.0, 1.0, PI / 6.0)) - 0.25).abs() < 1e-15);
        let beam = chi_beam(1.4, 0.6, 0.7);
        let c = coherency_from_beam(&beam);
        let g = GroupElement::normalized(
            crate::mat2::Mat2::new(
                Complex::new(1.2, 0.3),
                Complex::new(-0.4, 0.9),
                Complex::new(0.5, 0.0),
                Complex::new(0.8, -0.2),
            )
            .unwrap(),
        )
        .unwrap();
        let moved = transform_coherency(&g, &c);
        assert!((moved.det() - lorentz_invariant(&beam)).abs() < 1e-14);
    }

    #[test]
    fn density_examples() {
        let pure = CoherencyMatrix::new(HermitianMat2::diagonal(1.0, 0.0).unwrap()).unwrap();
        let rho = density_matrix(&pure).unwrap();
        assert_eq!(*rho.hermitian(), HermitianMat2::diagonal(1.0, 0.0).unwrap());
        assert_eq!(rho.von_neumann_entropy(), 0.0);

        let mixed = density_matrix(&coherency_from_beam(&chi_beam(0.7, 0.7, FRAC_PI_2))).unwrap();
        assert!(mixed.hermitian().max_abs_diff(&HermitianMat2::IDENTITY.scale(0.5)) < 1e-15);

        let c = coherency_from_beam(&BeamSpec::with_sigma(1.5, 0.4, 0.3, 0.2).unwrap());
        let f = degree_of_polarization(&c).unwrap();
        let (l1, l2) = density_matrix(&c).unwrap().eigenvalues();
        assert!((l1 - 0.5 * (1.0 + f)).abs() < 1e-14);
        assert!((l2 - 0.5 * (1.0 - f)).abs() < 1e-14);

        let zero = CoherencyMatrix::new(HermitianMat2::diagonal(0.0, 0.0).unwrap()).unwrap();
        assert_eq!(density_matrix(&zero), Err(Error::ZeroBeam));
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(1.0).unwrap(), 0.0);
        assert!((entropy(0.0).unwrap() - LN_2).abs() < 1e-15);
        assert!((entropy_bits(0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(entropy(1.1).is_err());
        assert!(entropy(-0.1).is_err());
        for chi in [0.1, 0.5, 1.0, 1.4] {
            let f = degree_of_polarization(&coherency_from_beam(&chi_beam(1.0, 1.0, chi))).unwrap();
            let (c2, s2) = ((chi / 2.0).cos().powi(2), (chi / 2.0).sin().powi(2));
            let closed = -c2 * c2.ln() - s2 * s2.ln();
            assert!((entropy(f).unwrap() - closed).abs() < 1e-14, "chi = {chi}");
        }
    }

    #[test]
    fn max_entropy_examples() {
        assert!((max_entropy(1.0, 1.0).unwrap() - LN_2).abs() < 1e-15);
        assert_eq!(max_entropy(1.0, 0.0).unwrap(), 0.0);
        let want = 0.8 * 1.25_f64.ln() + 0.2 * 5.0_f64.ln();
        assert!((max_entropy(2.0, 1.0).unwrap() - want).abs() < 1e-15);
        assert!((max_entropy(2.0, 1.0).unwrap() - 0.500_402_423_538_187_9).abs() < 1e-15);
        assert_eq!(max_entropy(0.0, 0.0), Err(Error::ZeroBeam));
    }

    #[test]
    fn second_sphere_examples() {
        let t = second_sphere(&chi_beam(1.0, 1.0, 0.0)).unwrap();
        assert_eq!((t.f, t.entropy), (1.0, 0.0));
        assert!(t.f_complement.abs() < 1e-15);
        assert!((t.entropy_complement - LN_2).abs() < 1e-15);

        let t = second_sphere(&chi_beam(1.0, 1.0, FRAC_PI_2)).unwrap();
        assert_eq!((t.f, t.f_complement), (0.0, 1.0));
        assert!((t.entropy - LN_2).abs() < 1e-15);
        assert!(t.entropy_complement.abs() < 1e-15);
        assert!((t.total_det() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn complement_degree_matches_closed_form() {
        let beam = chi_beam(1.7, 0.9, 0.8);
        let t = second_sphere(&beam).unwrap();
        let (a2, b2) = (1.7_f64 * 1.7, 0.9_f64 * 0.9);
        let closed = ((a2 - b2).powi(2) + 4.0 * a2 * b2 * 0.8_f64.sin().powi(2)).sqrt() / (a2 + b2);
        assert!((t.f_complement - closed).abs() < 1e-14);
    }

    #[test]
    fn entropy_curves_for_equal_amplitudes() {
        let pts = sweep_chi(1.0, 1.0, 0.0, 1000, Execution::Sequential).unwrap();
        for w in pts.windows(2) {
            let (lo, hi) = (&w[0].two_sphere, &w[1].two_sphere);
            assert!(hi.entropy > lo.entropy, "S not increasing at chi = {}", w[1].chi);
            assert!(hi.entropy_complement < lo.entropy_complement);
        }
        let sums: Vec<f64> = pts.iter().map(|p| p.two_sphere.total_entropy()).collect();
        let spread = sums.iter().cloned().fold(f64::MIN, f64::max) - sums.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread > 0.1, "S + S' looks constant: spread {spread}");
    }

    #[test]
    fn entropy_decreases_in_f() {
        let mut prev = entropy(0.0).unwrap();
        for i in 1..=1000 {
            let s = entropy(i as f64 / 1000.0).unwrap();
            assert!(s < prev);
            prev = s;
        }
    }

    #[test]
    fn spectral_entropy_matches_formula() {
        let c = coherency_from_beam(&BeamSpec::with_sigma(1.2, 0.7, 0.4, 0.35).unwrap());
        let f = degree_of_polarization(&c).unwrap();
        let rho = density_matrix(&c).unwrap();
        assert!((rho.von_neumann_entropy() - entropy(f).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn sweep_endpoints() {
        let pts = sweep_chi(2.0, 1.0, 0.0, 11, Execution::Sequential).unwrap();
        assert_eq!(pts.len(), 11);
        assert_eq!(pts[0].chi, 0.0);
        assert_eq!(pts[10].chi, FRAC_PI_2);
        assert!((pts[10].radii.r - 1.5).abs() < 1e-15);
        assert!(sweep_chi(1.0, 1.0, 0.0, 1, Execution::Sequential).is_err());
    }
}
