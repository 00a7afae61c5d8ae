//! Wigner little groups: classification of four-momenta by the sign of
//! `det P = m²`, canonical forms, and the stabilizers of each canonical form.
//!
//! | class          | canonical `P`        | stabilizer                  |
//! |----------------|----------------------|-----------------------------|
//! | massive        | `m · I`              | `rotation_y(θ)`             |
//! | massless       | `diag(1, 0)`         | `triangular(γ)`             |
//! | imaginary mass | `k · diag(1, -1)`    | `boost_x(λ)`                |
//!
//! `rotation_z(δ)` stabilizes all three.

use std::fmt;

use crate::error::{Error, Result};
use crate::lorentz::{compose, pack, FourVector, Generator, GeneratorWord, GroupElement};
use crate::mat2::{conjugate_transform, HermitianMat2};

/// Default relative threshold for treating `det P` as zero.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

/// Energy-momentum matrix `[[E + pz, px - i py], [px + i py, E - pz]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumMatrix(pub HermitianMat2);

impl MomentumMatrix {
    pub fn from_four_momentum(p: &FourVector) -> Self {
        MomentumMatrix(pack(p).0)
    }

    pub fn hermitian(&self) -> &HermitianMat2 {
        &self.0
    }

    pub fn energy(&self) -> f64 {
        0.5 * self.0.trace()
    }

    /// Spatial momentum `(pz, px, py)`.
    fn momentum(&self) -> (f64, f64, f64) {
        let h = &self.0;
        (0.5 * (h.d1() - h.d2()), h.off().re, -h.off().im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentumKind {
    Massive,
    Massless,
    ImaginaryMass,
    /// The zero matrix.
    Null,
}

impl MomentumKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MomentumKind::Massive => "massive",
            MomentumKind::Massless => "massless",
            MomentumKind::ImaginaryMass => "imaginary_mass",
            MomentumKind::Null => "null",
        }
    }
}

impl fmt::Display for MomentumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LittleGroupClass {
    pub kind: MomentumKind,
    /// `det P`, in energy².
    pub mass_squared: f64,
}

/// Classifies `p` by the sign of its determinant, treating
/// `|det| < tol · trace²` as zero.
///
/// Negative energy is rejected for timelike and lightlike momenta, where its
/// sign is frame independent. Spacelike momenta are accepted with either sign
/// of energy, because a boost can flip it.
pub fn classify(p: &MomentumMatrix, tol: f64) -> Result<LittleGroupClass> {
    let h = &p.0;
    let det = h.det();
    if h.is_zero() {
        return Ok(LittleGroupClass {
            kind: MomentumKind::Null,
            mass_squared: 0.0,
        });
    }
    let trace = h.trace();
    let kind = if det.abs() < tol * trace * trace {
        MomentumKind::Massless
    } else if det > 0.0 {
        MomentumKind::Massive
    } else {
        MomentumKind::ImaginaryMass
    };
    if trace < 0.0 && kind != MomentumKind::ImaginaryMass {
        return Err(Error::UnsupportedBranch("negative-energy momentum"));
    }
    Ok(LittleGroupClass {
        kind,
        mass_squared: det,
    })
}

/// Result of [`canonicalize`]: `G · P · G† = canonical`.
#[derive(Debug, Clone, PartialEq)]
pub struct Canonicalization {
    pub class: LittleGroupClass,
    /// Generator word realizing `element`: a boost after a rotation after a phase.
    pub word: GeneratorWord,
    pub element: GroupElement,
    pub canonical: MomentumMatrix,
}

/// Brings `p` to its canonical form with an explicit Lorentz word.
///
/// The spatial momentum is first turned onto `+z` (`rotation_z` removes the
/// azimuth, `rotation_y` the polar angle), then a z-boost fixes the scale:
/// `m · I` for massive, `diag(1, 0)` for massless and `k · diag(1, -1)` with
/// `k = √(-det P)` for imaginary mass.
pub fn canonicalize(p: &MomentumMatrix) -> Result<Canonicalization> {
    let class = classify(p, DEFAULT_CLASSIFY_TOL)?;
    let energy = p.energy();
    let (pz, px, py) = p.momentum();
    let transverse = px.hypot(py);
    let speed = transverse.hypot(pz);
    let polar = transverse.atan2(pz);
    let azimuth = py.atan2(px);

    // After the rotation the matrix is diag(E + |p|, E - |p|).
    let upper = energy + speed;
    let (rapidity, canonical) = match class.kind {
        MomentumKind::Null => return Err(Error::ZeroMomentum),
        MomentumKind::Massive => {
            let m = class.mass_squared.sqrt();
            (
                (m / upper).ln(),
                HermitianMat2::diagonal(m, m)?,
            )
        }
        MomentumKind::Massless => ((1.0 / upper).ln(), HermitianMat2::diagonal(1.0, 0.0)?),
        MomentumKind::ImaginaryMass => {
            let k = (-class.mass_squared).sqrt();
            ((k / upper).ln(), HermitianMat2::diagonal(k, -k)?)
        }
    };

    let mut gens = Vec::with_capacity(3);
    if rapidity != 0.0 {
        gens.push(Generator::BoostZ(rapidity));
    }
    if polar != 0.0 {
        gens.push(Generator::RotationY(-polar));
    }
    if azimuth != 0.0 {
        gens.push(Generator::RotationZ(azimuth));
    }
    let word = GeneratorWord::new(gens)?;
    let element = compose(&word);
    Ok(Canonicalization {
        class,
        word,
        element,
        canonical: MomentumMatrix(canonical),
    })
}

/// The canonical momentum of each non-null class.
pub fn canonical_momentum(kind: MomentumKind) -> Result<MomentumMatrix> {
    let h = match kind {
        MomentumKind::Massive => HermitianMat2::IDENTITY,
        MomentumKind::Massless => HermitianMat2::diagonal(1.0, 0.0)?,
        MomentumKind::ImaginaryMass => HermitianMat2::diagonal(1.0, -1.0)?,
        MomentumKind::Null => return Err(Error::ZeroMomentum),
    };
    Ok(MomentumMatrix(h))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stabilizer {
    pub kind: MomentumKind,
    pub element: GroupElement,
    pub parameter: f64,
}

/// The class-specific little-group element: `rotation_y(θ)` for massive,
/// `triangular(γ)` for massless, `boost_x(λ)` for imaginary mass.
pub fn stabilizer_element(kind: MomentumKind, parameter: f64) -> Result<Stabilizer> {
    let element = match kind {
        MomentumKind::Massive => GroupElement::rotation_y(parameter),
        MomentumKind::Massless => GroupElement::triangular(parameter),
        MomentumKind::ImaginaryMass => GroupElement::boost_x(parameter),
        MomentumKind::Null => return Err(Error::ZeroMomentum),
    };
    Ok(Stabilizer {
        kind,
        element,
        parameter,
    })
}

/// Checks `W P W† = P` entrywise against `tol` times the scale of `P`.
///
/// The scale is `max(|tr P|, max |P_ij|)`, so the traceless imaginary-mass
/// form is measured against its entries rather than its zero trace.
pub fn is_little_group_element(w: &GroupElement, p: &MomentumMatrix, tol: f64) -> bool {
    let h = &p.0;
    let scale = h.trace().abs().max(h.max_abs());
    let moved = conjugate_transform(w.matrix(), h);
    moved.max_abs_diff(h) < tol * scale
}
