//! Jones-vector optics in the coherency-matrix picture.
//!
//! A partially coherent beam with amplitudes `a`, `b`, relative phase `δ` and
//! decoherence exponent `σ` has the coherency matrix
//!
//! ```text
//! C = [[a²,              ab e^{-(σ + iδ)}],
//!      [ab e^{-(σ - iδ)}, b²             ]]
//! ```
//!
//! Optical elements act by `C' = k² G C G†` where `G` is unimodular and `k`
//! is the element's global attenuation. The polarizer is the one singular
//! element and is applied as a projector.

use std::fmt;

use crate::error::{check_finite, Error, Result};
use crate::lorentz::{pack, to_four_by_four, unpack, FourVector, FourVectorMatrix, GroupElement, LorentzMatrix4};
use crate::mat2::{conjugate_transform, eig_hermitian, Complex, HermitianMat2};

/// Slack allowed on `|S12|² ≤ S11·S22` and on the sign of the diagonals.
const POSITIVITY_SLACK: f64 = 1e-12;

/// Physical beam parameters. `sigma` may be `+∞` (fully incoherent).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSpec {
    a: f64,
    b: f64,
    delta: f64,
    sigma: f64,
}

impl BeamSpec {
    pub fn with_sigma(a: f64, b: f64, delta: f64, sigma: f64) -> Result<Self> {
        check_finite(&[a, b, delta], "beam parameter")?;
        if a < 0.0 || b < 0.0 {
            return Err(Error::Domain {
                name: "amplitude",
                value: a.min(b),
                domain: "[0, inf)",
            });
        }
        if sigma.is_nan() || sigma < 0.0 {
            return Err(Error::Domain {
                name: "sigma",
                value: sigma,
                domain: "[0, inf]",
            });
        }
        Ok(BeamSpec { a, b, delta, sigma })
    }

    /// Builds the beam from the decoherence angle, `cos χ = e^{-σ}`.
    /// `χ = π/2` maps to `σ = ∞`.
    pub fn with_chi(a: f64, b: f64, delta: f64, chi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&chi) {
            return Err(Error::Domain {
                name: "chi",
                value: chi,
                domain: "[0, pi/2]",
            });
        }
        let sigma = if chi == std::f64::consts::FRAC_PI_2 {
            f64::INFINITY
        } else {
            -chi.cos().ln()
        };
        Self::with_sigma(a, b, delta, sigma)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// `cos χ = e^{-σ}`.
    pub fn cos_chi(&self) -> f64 {
        (-self.sigma).exp()
    }

    /// `sin² χ = 1 - e^{-2σ}`, without cancellation for small σ.
    pub fn sin_chi_squared(&self) -> f64 {
        -(-2.0 * self.sigma).exp_m1()
    }

    pub fn chi(&self) -> f64 {
        decoherence_angle(self)
    }

    /// Degree of polarization from the beam parameters,
    /// `√(1 - 4(ab)² sin²χ / (a² + b²)²)`. Exactly 1 when `σ = 0`.
    pub fn degree_of_polarization(&self) -> Result<f64> {
        let total = self.a * self.a + self.b * self.b;
        if total <= 0.0 {
            return Err(Error::ZeroBeam);
        }
        let ab = self.a * self.b;
        let ratio = 4.0 * ab * ab * self.sin_chi_squared() / (total * total);
        Ok((1.0 - ratio).clamp(0.0, 1.0).sqrt())
    }
}

/// `χ = arccos(e^{-σ})`, in `[0, π/2]`.
pub fn decoherence_angle(beam: &BeamSpec) -> f64 {
    beam.cos_chi().acos()
}

/// A positive semidefinite Hermitian coherency matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherencyMatrix(HermitianMat2);

impl CoherencyMatrix {
    /// Validates positivity: `S11, S22 ≥ 0` and `|S12|² ≤ S11·S22` (to 1e-12).
    pub fn new(h: HermitianMat2) -> Result<Self> {
        let scale = h.max_abs().max(1.0);
        let slack = POSITIVITY_SLACK * scale * scale;
        if h.d1() < -POSITIVITY_SLACK * scale || h.d2() < -POSITIVITY_SLACK * scale {
            return Err(Error::Domain {
                name: "coherency diagonal",
                value: h.d1().min(h.d2()),
                domain: "[0, inf)",
            });
        }
        if h.off().norm_sqr() > h.d1() * h.d2() + slack {
            return Err(Error::Domain {
                name: "coherency determinant",
                value: h.det(),
                domain: "[0, inf)",
            });
        }
        Ok(CoherencyMatrix(h))
    }

    pub fn hermitian(&self) -> &HermitianMat2 {
        &self.0
    }

    pub fn s11(&self) -> f64 {
        self.0.d1()
    }

    pub fn s22(&self) -> f64 {
        self.0.d2()
    }

    pub fn s12(&self) -> Complex {
        self.0.off()
    }

    pub fn s21(&self) -> Complex {
        self.0.off().conj()
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    pub fn det(&self) -> f64 {
        self.0.det()
    }

    pub fn is_zero(&self) -> bool {
        self.trace() <= 0.0
    }

    /// Eigenvalues `(λ1, λ2)`, `λ1 ≥ λ2`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let (l1, l2, _) = eig_hermitian(&self.0);
        (l1, l2)
    }

    /// Holds `|S12|² ≤ S11·S22 + slack` where slack is 1e-12 at unit scale.
    pub fn satisfies_cauchy_schwarz(&self) -> bool {
        let scale = self.0.max_abs().max(1.0);
        self.s12().norm_sqr() <= self.s11() * self.s22() + POSITIVITY_SLACK * scale * scale
    }
}

/// Coherency matrix of a beam.
pub fn coherency_from_beam(beam: &BeamSpec) -> CoherencyMatrix {
    let off = Complex::from_polar(beam.a * beam.b * beam.cos_chi(), -beam.delta);
    CoherencyMatrix(HermitianMat2::from_parts(beam.a * beam.a, beam.b * beam.b, off))
}

/// `f = √(1 - 4 det C / (tr C)²)`, clamped to `[0, 1]`.
///
/// Evaluated as `√((S11 - S22)² + 4|S12|²) / tr C`, the same quantity
/// without the cancellation in `1 - 4 det/tr²`.
pub fn degree_of_polarization(c: &CoherencyMatrix) -> Result<f64> {
    let trace = c.trace();
    if trace <= 0.0 {
        return Err(Error::ZeroBeam);
    }
    let polarized = (c.s11() - c.s22()).hypot(2.0 * c.s12().norm());
    Ok((polarized / trace).clamp(0.0, 1.0))
}

/// Stokes four-vector, stored in the `(S0, S3, S1, S2)` order that mirrors
/// `(t, z, x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StokesVector {
    pub s0: f64,
    pub s3: f64,
    pub s1: f64,
    pub s2: f64,
}

impl StokesVector {
    pub const fn new(s0: f64, s3: f64, s1: f64, s2: f64) -> Self {
        StokesVector { s0, s3, s1, s2 }
    }

    pub fn as_four_vector(&self) -> FourVector {
        FourVector::new(self.s0, self.s3, self.s1, self.s2)
    }

    pub fn from_four_vector(v: &FourVector) -> Self {
        StokesVector::new(v.t, v.z, v.x, v.y)
    }

    /// `√(S1² + S2² + S3²)`.
    pub fn radius(&self) -> f64 {
        self.s1.hypot(self.s2).hypot(self.s3)
    }

    /// `S0² - S3² - S1² - S2²`, equal to `det C`.
    pub fn minkowski_norm(&self) -> f64 {
        self.as_four_vector().interval()
    }

    pub fn max_abs_diff(&self, other: &StokesVector) -> f64 {
        self.as_four_vector().max_abs_diff(&other.as_four_vector())
    }
}

impl fmt::Display for StokesVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(S0={}, S3={}, S1={}, S2={})",
            self.s0, self.s3, self.s1, self.s2
        )
    }
}

/// `S0 = (S11 + S22)/2`, `S3 = (S11 - S22)/2`, `S1 = Re S12`, `S2 = -Im S12`.
///
/// The ½ normalization makes `S0² - R² = det C` exactly.
pub fn stokes_from_coherency(c: &CoherencyMatrix) -> StokesVector {
    StokesVector::from_four_vector(&unpack(&FourVectorMatrix(c.0)))
}

/// Inverse of [`stokes_from_coherency`]. Fails if the vector is not a
/// physical (future-pointing, non-spacelike) Stokes vector.
pub fn coherency_from_stokes(s: &StokesVector) -> Result<CoherencyMatrix> {
    CoherencyMatrix::new(pack(&s.as_four_vector()).0)
}

/// `C' = G C G†`.
pub fn transform_coherency(g: &GroupElement, c: &CoherencyMatrix) -> CoherencyMatrix {
    CoherencyMatrix(conjugate_transform(g.matrix(), &c.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OpticalElement {
    /// Retarder adding `delta` to the relative phase `δ = δ1 - δ2`.
    PhaseShift { delta: f64 },
    /// Field attenuation `diag(e^{-μ1}, e^{-μ2})`.
    Attenuate { mu1: f64, mu2: f64 },
    /// Rotation of the polarization axes, half-angle convention `R(θ)`.
    Rotate { theta: f64 },
    /// Squeeze along the 45° axes with rapidity `lambda`.
    Squeeze45 { lambda: f64 },
    /// Ideal polarizer transmitting the given axis.
    Polarizer(Axis),
}

impl OpticalElement {
    /// Attenuator `Attenuate(0, μ)` (or `(μ, 0)` for the y axis) that tends
    /// to the ideal polarizer as `μ → ∞`.
    pub fn approximate_polarizer(axis: Axis, mu: f64) -> Self {
        match axis {
            Axis::X => OpticalElement::Attenuate { mu1: 0.0, mu2: mu },
            Axis::Y => OpticalElement::Attenuate { mu1: mu, mu2: 0.0 },
        }
    }

    /// Global field attenuation `e^{-(μ1+μ2)/2}`; 1 for lossless elements.
    pub fn overall_factor(&self) -> f64 {
        match *self {
            OpticalElement::Attenuate { mu1, mu2 } => (-0.5 * (mu1 + mu2)).exp(),
            _ => 1.0,
        }
    }

    pub fn is_invertible(&self) -> bool {
        !matches!(self, OpticalElement::Polarizer(_))
    }
}

impl fmt::Display for OpticalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpticalElement::PhaseShift { delta } => write!(f, "phase({delta})"),
            OpticalElement::Attenuate { mu1, mu2 } => write!(f, "atten({mu1},{mu2})"),
            OpticalElement::Rotate { theta } => write!(f, "rotate({theta})"),
            OpticalElement::Squeeze45 { lambda } => write!(f, "squeeze45({lambda})"),
            OpticalElement::Polarizer(axis) => write!(f, "polarizer({axis})"),
        }
    }
}

/// Unimodular part of an element and its global attenuation.
///
/// A phase shifter `diag(e^{iδ1}, e^{iδ2})` equals `e^{i(δ1+δ2)/2}·Z(-δ)`
/// with `δ = δ1 - δ2`, so `PhaseShift(δ)` maps to `rotation_z(-δ)`; with the
/// `e^{-iδ}` phase convention of the coherency matrix this advances the beam's
/// relative phase by `+δ`.
pub fn element_to_group(e: &OpticalElement) -> Result<(GroupElement, f64)> {
    let g = match *e {
        OpticalElement::PhaseShift { delta } => GroupElement::rotation_z(-delta),
        OpticalElement::Attenuate { mu1, mu2 } => GroupElement::boost_z(mu2 - mu1),
        OpticalElement::Rotate { theta } => GroupElement::rotation_y(theta),
        OpticalElement::Squeeze45 { lambda } => GroupElement::boost_x(lambda),
        OpticalElement::Polarizer(_) => return Err(Error::SingularElement),
    };
    Ok((g, e.overall_factor()))
}

/// Applies one element to a coherency matrix.
pub fn apply_element(e: &OpticalElement, c: &CoherencyMatrix) -> CoherencyMatrix {
    match (e, element_to_group(e)) {
        (OpticalElement::Polarizer(axis), _) => {
            let h = match axis {
                Axis::X => HermitianMat2::from_parts(c.s11(), 0.0, Complex::from(0.0)),
                Axis::Y => HermitianMat2::from_parts(0.0, c.s22(), Complex::from(0.0)),
            };
            CoherencyMatrix(h)
        }
        (_, Ok((g, overall))) => {
            let t = transform_coherency(&g, c);
            CoherencyMatrix(t.0.scale(overall * overall))
        }
        (_, Err(_)) => unreachable!("only the polarizer lacks a group image"),
    }
}

/// Mueller matrix of an invertible element: a scale times a Lorentz matrix,
/// acting on Stokes vectors in `(S0, S3, S1, S2)` order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuellerMatrix {
    pub scale: f64,
    pub lorentz: LorentzMatrix4,
}

impl MuellerMatrix {
    pub fn apply(&self, s: &StokesVector) -> StokesVector {
        let v = self.lorentz.apply(&s.as_four_vector());
        StokesVector::new(
            self.scale * v.t,
            self.scale * v.z,
            self.scale * v.x,
            self.scale * v.y,
        )
    }

    /// Row-major entries including the scale.
    pub fn entries(&self) -> [[f64; 4]; 4] {
        let mut rows = *self.lorentz.rows();
        for v in rows.as_flattened_mut() {
            *v *= self.scale;
        }
        rows
    }
}

pub fn mueller_matrix(e: &OpticalElement) -> Result<MuellerMatrix> {
    let (g, overall) = element_to_group(e)?;
    Ok(MuellerMatrix {
        scale: overall * overall,
        lorentz: to_four_by_four(&g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2, PI};

    const TOL: f64 = 1e-14;

    fn beam(a: f64, b: f64, delta: f64, sigma: f64) -> BeamSpec {
        BeamSpec::with_sigma(a, b, delta, sigma).unwrap()
    }

    fn herm(d1: f64, d2: f64, re: f64, im: f64) -> HermitianMat2 {
        HermitianMat2::new(d1, d2, Complex::new(re, im)).unwrap()
    }

    #[test]
    fn beam_validation() {
        assert!(BeamSpec::with_sigma(-1.0, 1.0, 0.0, 0.0).is_err());
        assert!(BeamSpec::with_sigma(1.0, 1.0, 0.0, -0.1).is_err());
        assert!(BeamSpec::with_sigma(1.0, 1.0, f64::NAN, 0.0).is_err());
        assert!(BeamSpec::with_chi(1.0, 1.0, 0.0, 2.0).is_err());
        assert_eq!(BeamSpec::with_chi(1.0, 1.0, 0.0, FRAC_PI_2).unwrap().sigma(), f64::INFINITY);
    }

    #[test]
    fn element_images() {
        let (g, k) = element_to_group(&OpticalElement::PhaseShift { delta: 0.7 }).unwrap();
        assert_eq!((g, k), (GroupElement::rotation_z(-0.7), 1.0));
        let (g, k) = element_to_group(&OpticalElement::Attenuate { mu1: 0.2, mu2: 0.9 }).unwrap();
        assert_eq!(g, GroupElement::boost_z(0.7));
        assert!((k - (-0.55_f64).exp()).abs() < 1e-16);
        let (g, k) = element_to_group(&OpticalElement::Rotate { theta: 1.3 }).unwrap();
        assert_eq!((g, k), (GroupElement::rotation_y(1.3), 1.0));
        assert_eq!(
            element_to_group(&OpticalElement::Polarizer(Axis::X)),
            Err(Error::SingularElement)
        );
    }

    #[test]
    fn attenuator_factorization_matches_field_matrix() {
        let (mu1, mu2) = (0.3_f64, 1.1_f64);
        let (g, k) = element_to_group(&OpticalElement::Attenuate { mu1, mu2 }).unwrap();
        let m = g.matrix().scale(Complex::from(k));
        assert!((m.get(0, 0).re - (-mu1).exp()).abs() < 1e-15);
        assert!((m.get(1, 1).re - (-mu2).exp()).abs() < 1e-15);
    }

    #[test]
    fn coherency_examples() {
        assert_eq!(coherency_from_beam(&beam(1.0, 0.0, 0.4, 0.0)).0, herm(1.0, 0.0, 0.0, 0.0));
        let c = coherency_from_beam(&beam(1.0, 1.0, 0.0, 0.0));
        assert_eq!(c.0, herm(1.0, 1.0, 1.0, 0.0));
        assert_eq!(c.det(), 0.0);
        let c = coherency_from_beam(&BeamSpec::with_chi(1.0, 1.0, 0.0, FRAC_PI_2).unwrap());
        assert_eq!(c.0, HermitianMat2::IDENTITY);
    }

    #[test]
    fn coherency_off_diagonal_phase_and_magnitude() {
        let b = beam(2.0, 0.5, 0.9, 0.3);
        let c = coherency_from_beam(&b);
        assert!((c.s12().norm() - 1.0 * (-0.3_f64).exp()).abs() < 1e-15);
        assert!((c.s12().arg() + 0.9).abs() < 1e-15);
        assert!((c.det() - 1.0 * b.sin_chi_squared()).abs() < 1e-15);
    }

    #[test]
    fn decoherence_angles() {
        assert_eq!(decoherence_angle(&beam(1.0, 1.0, 0.0, 0.0)), 0.0);
        assert!((decoherence_angle(&beam(1.0, 1.0, 0.0, LN_2)) - PI / 3.0).abs() < 1e-15);
        assert!((decoherence_angle(&beam(1.0, 1.0, 0.0, 40.0)) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(decoherence_angle(&beam(1.0, 1.0, 0.0, f64::INFINITY)), FRAC_PI_2);
    }

    #[test]
    fn degree_examples() {
        let coherent = beam(1.3, 0.4, 0.2, 0.0);
        assert_eq!(coherent.degree_of_polarization().unwrap(), 1.0);
        let f = degree_of_polarization(&coherency_from_beam(&coherent)).unwrap();
        assert!((f - 1.0).abs() <= f64::EPSILON);
        let incoherent = |a, b| BeamSpec::with_chi(a, b, 0.0, FRAC_PI_2).unwrap();
        let f = degree_of_polarization(&coherency_from_beam(&incoherent(1.0, 1.0))).unwrap();
        assert_eq!(f, 0.0);
        let f = degree_of_polarization(&coherency_from_beam(&incoherent(2.0, 1.0))).unwrap();
        assert!((f - 0.6).abs() < 1e-15);
        let zero = coherency_from_beam(&beam(0.0, 0.0, 0.0, 0.0));
        assert_eq!(degree_of_polarization(&zero), Err(Error::ZeroBeam));
        assert_eq!(beam(0.0, 0.0, 0.0, 0.0).degree_of_polarization(), Err(Error::ZeroBeam));
    }

    #[test]
    fn stokes_examples() {
        let s = stokes_from_coherency(&CoherencyMatrix::new(herm(1.0, 0.0, 0.0, 0.0)).unwrap());
        assert_eq!(s, StokesVector::new(0.5, 0.5, 0.0, 0.0));
        let s = stokes_from_coherency(&coherency_from_beam(&beam(1.0, 1.0, 0.0, 0.0)));
        assert_eq!(s, StokesVector::new(1.0, 0.0, 1.0, 0.0));
        let s = stokes_from_coherency(&coherency_from_beam(&beam(1.0, 1.0, FRAC_PI_2, 0.0)));
        assert!(s.max_abs_diff(&StokesVector::new(1.0, 0.0, 0.0, 1.0)) < TOL, "{s}");
    }

    #[test]
    fn stokes_norm_is_determinant() {
        let c = coherency_from_beam(&beam(1.7, 0.6, 2.1, 0.45));
        let s = stokes_from_coherency(&c);
        assert!((s.minkowski_norm() - c.det()).abs() < 1e-14);
        let back = coherency_from_stokes(&s).unwrap();
        assert!(back.0.max_abs_diff(&c.0) < 1e-15);
    }

    #[test]
    fn coherency_rejects_unphysical() {
        assert!(CoherencyMatrix::new(herm(1.0, 1.0, 2.0, 0.0)).is_err());
        assert!(CoherencyMatrix::new(herm(-1.0, 1.0, 0.0, 0.0)).is_err());
        assert!(coherency_from_stokes(&StokesVector::new(1.0, 2.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn transform_examples() {
        let c = coherency_from_beam(&beam(1.2, 0.7, 0.3, 0.2));
        assert_eq!(transform_coherency(&GroupElement::IDENTITY, &c), c);

        // rotation_z(δ0) conjugation takes δ to δ - δ0; the phase shifter uses -δ0.
        let shifted = transform_coherency(&GroupElement::rotation_z(0.5), &c);
        let want = coherency_from_beam(&beam(1.2, 0.7, 0.3 - 0.5, 0.2));
        assert!(shifted.0.max_abs_diff(&want.0) < TOL);
        let shifted = apply_element(&OpticalElement::PhaseShift { delta: 0.5 }, &c);
        let want = coherency_from_beam(&beam(1.2, 0.7, 0.3 + 0.5, 0.2));
        assert!(shifted.0.max_abs_diff(&want.0) < TOL);

        let mu = 0.4_f64;
        let d = CoherencyMatrix::new(HermitianMat2::diagonal(4.0, 9.0).unwrap()).unwrap();
        let out = transform_coherency(&GroupElement::boost_z(mu), &d);
        assert!(out.0.max_abs_diff(&HermitianMat2::diagonal(mu.exp() * 4.0, (-mu).exp() * 9.0).unwrap()) < TOL);
    }

    #[test]
    fn apply_element_examples() {
        let c = coherency_from_beam(&beam(1.5, 0.8, 1.0, 0.1));
        let out = apply_element(&OpticalElement::Polarizer(Axis::X), &c);
        assert_eq!(out.0, HermitianMat2::diagonal(c.s11(), 0.0).unwrap());
        let out = apply_element(&OpticalElement::Polarizer(Axis::Y), &c);
        assert_eq!(out.0, HermitianMat2::diagonal(0.0, c.s22()).unwrap());

        let mu = 0.35_f64;
        let out = apply_element(&OpticalElement::Attenuate { mu1: mu, mu2: mu }, &c);
        assert!(out.0.max_abs_diff(&c.0.scale((-2.0 * mu).exp())) < TOL);
        assert!(
            (degree_of_polarization(&out).unwrap() - degree_of_polarization(&c).unwrap()).abs() < 1e-14
        );

        let there = apply_element(&OpticalElement::PhaseShift { delta: 0.9 }, &c);
        let back = apply_element(&OpticalElement::PhaseShift { delta: -0.9 }, &there);
        assert!(back.0.max_abs_diff(&c.0) < TOL);
    }

    #[test]
    fn polarizer_is_idempotent_and_limit_of_attenuator() {
        let c = coherency_from_beam(&beam(1.0, 2.0, 0.4, 0.2));
        let p = OpticalElement::Polarizer(Axis::Y);
        let once = apply_element(&p, &c);
        assert_eq!(apply_element(&p, &once), once);
        for (mu, tol) in [(10.0, 1e-3), (20.0, 1e-8), (40.0, 1e-17)] {
            let approx = apply_element(&OpticalElement::approximate_polarizer(Axis::Y, mu), &c);
            assert!(approx.0.max_abs_diff(&once.0) < tol, "mu = {mu}");
        }
    }

    #[test]
    fn mueller_examples() {
        let delta = 0.8_f64;
        let m = mueller_matrix(&OpticalElement::PhaseShift { delta }).unwrap();
        let (s, c) = delta.sin_cos();
        // (S1, S2) turn counterclockwise by δ
        let e = m.entries();
        assert!((e[2][2] - c).abs() < TOL && (e[2][3] + s).abs() < TOL);
        assert!((e[3][2] - s).abs() < TOL && (e[3][3] - c).abs() < TOL);
        assert!((e[0][0] - 1.0).abs() < TOL && (e[1][1] - 1.0).abs() < TOL);

        let theta = 0.5_f64;
        let m = mueller_matrix(&OpticalElement::Rotate { theta }).unwrap();
        let (s, c) = theta.sin_cos();
        let e = m.entries();
        assert!((e[1][1] - c).abs() < TOL && (e[1][2] + s).abs() < TOL);
        assert!((e[2][1] - s).abs() < TOL && (e[2][2] - c).abs() < TOL);

        assert_eq!(
            mueller_matrix(&OpticalElement::Polarizer(Axis::X)),
            Err(Error::SingularElement)
        );
    }

    #[test]
    fn mueller_matches_coherency_route() {
        let c = coherency_from_beam(&beam(1.1, 0.9, -0.4, 0.6));
        for e in [
            OpticalElement::PhaseShift { delta: 1.2 },
            OpticalElement::Attenuate { mu1: 0.1, mu2: 0.8 },
            OpticalElement::Rotate { theta: -0.7 },
            OpticalElement::Squeeze45 { lambda: 0.9 },
        ] {
            let via_mueller = mueller_matrix(&e).unwrap().apply(&stokes_from_coherency(&c));
            let via_coherency = stokes_from_coherency(&apply_element(&e, &c));
            assert!(via_mueller.max_abs_diff(&via_coherency) < 1e-13, "{e}");
        }
    }
}
