//! The two-by-two (Naimark) representation of the Lorentz group.
//!
//! A four-vector `(t, z, x, y)` is packed into the Hermitian matrix
//!
//! ```text
//! X = [[t + z, x - iy],
//!      [x + iy, t - z]]      det X = t² - z² - x² - y²
//! ```
//!
//! and a unimodular `G` acts by `X' = G X G†`. Coordinates are always ordered
//! `(t, z, x, y)`; the Stokes vector reuses this order as `(S0, S3, S1, S2)`.
//!
//! Conventions fixed by the packing above (all active transformations):
//!
//! * `rotation_z(δ)` turns the `(x, y)` plane by `-δ`, so `+x` goes to `-y` for
//!   positive δ;
//! * `rotation_y(θ)` turns `+z` toward `+x` by θ;
//! * `boost_z(μ)` and `boost_x(λ)` are boosts of rapidity μ, λ along `+z`, `+x`;
//! * `triangular(γ)` is the null rotation fixing the lightlike vector `(1,1,0,0)/2`.

use std::fmt;

use crate::error::{check_finite, Error, Result};
use crate::mat2::{conjugate_transform, Complex, HermitianMat2, Mat2};

/// Absolute tolerance on `|det G - 1|` accepted by [`GroupElement::new`].
pub const UNIMODULAR_TOL: f64 = 1e-10;

/// Number of multiplications between determinant renormalizations in [`compose`].
const RENORMALIZE_EVERY: usize = 16;

/// A complex 2×2 matrix of unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    m: Mat2,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { m: Mat2::IDENTITY };

    /// Accepts `m` if `|det m - 1| < 1e-10`.
    pub fn new(m: Mat2) -> Result<Self> {
        let d = m.det();
        if (d - Complex::from(1.0)).norm() < UNIMODULAR_TOL {
            Ok(GroupElement { m })
        } else {
            Err(Error::NotUnimodular { re: d.re, im: d.im })
        }
    }

    /// Divides `m` by a square root of its determinant.
    pub fn normalized(m: Mat2) -> Result<Self> {
        let d = m.det();
        if d.norm() == 0.0 || !d.is_finite() {
            return Err(Error::Singular);
        }
        Ok(GroupElement {
            m: m.scale(d.sqrt().inv()),
        })
    }

    fn renormalize(self) -> Self {
        Self::normalized(self.m).unwrap_or(self)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn rotation_z(delta: f64) -> Self {
        let half = 0.5 * delta;
        GroupElement {
            m: Mat2::diag(Complex::from_polar(1.0, half), Complex::from_polar(1.0, -half)),
        }
    }

    pub fn rotation_y(theta: f64) -> Self {
        let (s, c) = (0.5 * theta).sin_cos();
        GroupElement {
            m: Mat2::from_entries(c.into(), (-s).into(), s.into(), c.into()),
        }
    }

    pub fn boost_z(mu: f64) -> Self {
        let half = 0.5 * mu;
        GroupElement {
            m: Mat2::diag(half.exp().into(), (-half).exp().into()),
        }
    }

    pub fn boost_x(lambda: f64) -> Self {
        let half = 0.5 * lambda;
        let (c, s) = (half.cosh(), half.sinh());
        GroupElement {
            m: Mat2::from_entries(c.into(), s.into(), s.into(), c.into()),
        }
    }

    pub fn triangular(gamma: f64) -> Self {
        GroupElement {
            m: Mat2::from_entries(1.0.into(), gamma.into(), 0.0.into(), 1.0.into()),
        }
    }

    pub fn compose(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            m: self.m.multiply(&rhs.m),
        }
    }

    /// Inverse from the adjugate; exact for unit determinant.
    pub fn inverse(&self) -> GroupElement {
        let m = &self.m;
        GroupElement {
            m: Mat2::from_entries(m.get(1, 1), -m.get(0, 1), -m.get(1, 0), m.get(0, 0)),
        }
    }

    /// `-G`, the other preimage of the same Lorentz transformation.
    pub fn negated(&self) -> GroupElement {
        GroupElement { m: self.m.neg() }
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.m.multiply(&self.m.adjoint()).max_abs_diff(&Mat2::IDENTITY) < tol
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

/// One factor of a [`GeneratorWord`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    /// Rotation about z by an angle in radians.
    RotationZ(f64),
    /// Rotation about y by an angle in radians.
    RotationY(f64),
    /// Boost along z with the given rapidity.
    BoostZ(f64),
    /// Boost along x with the given rapidity.
    BoostX(f64),
    /// Null rotation `[[1, γ], [0, 1]]`.
    Triangular(f64),
}

impl Generator {
    pub fn parameter(&self) -> f64 {
        match *self {
            Generator::RotationZ(p)
            | Generator::RotationY(p)
            | Generator::BoostZ(p)
            | Generator::BoostX(p)
            | Generator::Triangular(p) => p,
        }
    }

    /// The single-letter name used in generator-word text: Z, R, B, S or T.
    pub fn symbol(&self) -> char {
        match self {
            Generator::RotationZ(_) => 'Z',
            Generator::RotationY(_) => 'R',
            Generator::BoostZ(_) => 'B',
            Generator::BoostX(_) => 'S',
            Generator::Triangular(_) => 'T',
        }
    }

    pub fn from_symbol(symbol: char, parameter: f64) -> Option<Generator> {
        Some(match symbol.to_ascii_uppercase() {
            'Z' => Generator::RotationZ(parameter),
            'R' => Generator::RotationY(parameter),
            'B' => Generator::BoostZ(parameter),
            'S' => Generator::BoostX(parameter),
            'T' => Generator::Triangular(parameter),
            _ => return None,
        })
    }

    pub fn element(&self) -> GroupElement {
        match *self {
            Generator::RotationZ(d) => GroupElement::rotation_z(d),
            Generator::RotationY(t) => GroupElement::rotation_y(t),
            Generator::BoostZ(m) => GroupElement::boost_z(m),
            Generator::BoostX(l) => GroupElement::boost_x(l),
            Generator::Triangular(g) => GroupElement::triangular(g),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.symbol(), self.parameter())
    }
}

/// An ordered product of generators.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        let params: Vec<f64> = generators.iter().map(Generator::parameter).collect();
        check_finite(&params, "generator parameter")?;
        Ok(GeneratorWord(generators))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            g.fmt(f)?;
        }
        Ok(())
    }
}

/// Left-to-right product of the word's generators, kept unimodular.
pub fn compose(word: &GeneratorWord) -> GroupElement {
    let mut acc = GroupElement::IDENTITY;
    for (i, g) in word.0.iter().enumerate() {
        acc = acc.compose(&g.element());
        if (i + 1) % RENORMALIZE_EVERY == 0 {
            acc = acc.renormalize();
        }
    }
    if word.0.is_empty() {
        acc
    } else {
        acc.renormalize()
    }
}

/// A Minkowski four-vector in `(t, z, x, y)` order, natural units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourVector {
    pub t: f64,
    pub z: f64,
    pub x: f64,
    pub y: f64,
}

impl FourVector {
    pub const fn new(t: f64, z: f64, x: f64, y: f64) -> Self {
        FourVector { t, z, x, y }
    }

    pub fn from_array(v: [f64; 4]) -> Self {
        FourVector::new(v[0], v[1], v[2], v[3])
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.t, self.z, self.x, self.y]
    }

    /// `t² - z² - x² - y²`.
    pub fn interval(&self) -> f64 {
        self.t * self.t - self.z * self.z - self.x * self.x - self.y * self.y
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Hermitian matrix image of a [`FourVector`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVectorMatrix(pub HermitianMat2);

impl FourVectorMatrix {
    /// Accepts a general matrix only if it is Hermitian to 1e-10.
    pub fn try_from_mat2(m: &Mat2) -> Result<Self> {
        HermitianMat2::try_from_mat2(m, 1e-10).map(FourVectorMatrix)
    }

    pub fn hermitian(&self) -> &HermitianMat2 {
        &self.0
    }

    pub fn det(&self) -> f64 {
        self.0.det()
    }
}

pub fn pack(v: &FourVector) -> FourVectorMatrix {
    FourVectorMatrix(HermitianMat2::from_parts(
        v.t + v.z,
        v.t - v.z,
        Complex::new(v.x, -v.y),
    ))
}

pub fn unpack(m: &FourVectorMatrix) -> FourVector {
    let h = &m.0;
    FourVector {
        t: 0.5 * (h.d1() + h.d2()),
        z: 0.5 * (h.d1() - h.d2()),
        x: h.off().re,
        y: -h.off().im,
    }
}

/// `unpack(G · pack(v) · G†)`.
pub fn naimark_apply(g: &GroupElement, v: &FourVector) -> FourVector {
    unpack(&FourVectorMatrix(conjugate_transform(g.matrix(), pack(v).hermitian())))
}

/// Minkowski metric `diag(1, -1, -1, -1)` in `(t, z, x, y)` order.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// A real 4×4 Lorentz matrix acting on `(t, z, x, y)`, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix4 {
    rows: [[f64; 4]; 4],
}

impl LorentzMatrix4 {
    pub const IDENTITY: LorentzMatrix4 = LorentzMatrix4 {
        rows: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    };

    /// Accepts `rows` if it preserves the metric to 1e-10 and is orthochronous.
    pub fn try_from_rows(rows: [[f64; 4]; 4]) -> Result<Self> {
        check_finite(rows.as_flattened(), "LorentzMatrix4 entry")?;
        let m = LorentzMatrix4 { rows };
        let defect = m.metric_defect();
        if defect >= 1e-10 {
            return Err(Error::Domain {
                name: "metric defect",
                value: defect,
                domain: "< 1e-10",
            });
        }
        if rows[0][0] < 1.0 - 1e-10 {
            return Err(Error::UnsupportedBranch("non-orthochronous Lorentz matrix"));
        }
        Ok(m)
    }

    pub(crate) const fn from_rows_unchecked(rows: [[f64; 4]; 4]) -> Self {
        LorentzMatrix4 { rows }
    }

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let a = v.to_array();
        let mut out = [0.0; 4];
        for (o, row) in out.iter_mut().zip(&self.rows) {
            *o = row.iter().zip(&a).map(|(r, x)| r * x).sum();
        }
        FourVector::from_array(out)
    }

    pub fn multiply(&self, rhs: &LorentzMatrix4) -> LorentzMatrix4 {
        let mut rows = [[0.0; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.rows[i][k] * rhs.rows[k][j]).sum();
            }
        }
        LorentzMatrix4 { rows }
    }

    pub fn max_abs_diff(&self, other: &LorentzMatrix4) -> f64 {
        self.rows
            .as_flattened()
            .iter()
            .zip(other.rows.as_flattened())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Largest entry of `|Λᵀ η Λ - η|`.
    pub fn metric_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, &eta) in METRIC.iter().enumerate() {
            for j in 0..4 {
                let g: f64 = (0..4)
                    .map(|k| self.rows[k][i] * METRIC[k] * self.rows[k][j])
                    .sum();
                let target = if i == j { eta } else { 0.0 };
                worst = worst.max((g - target).abs());
            }
        }
        worst
    }
}

impl fmt::Display for LorentzMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "{:>14.9} {:>14.9} {:>14.9} {:>14.9}",
                row[0], row[1], row[2], row[3]
            )?;
        }
        Ok(())
    }
}

/// Pauli basis matching the packing: `X = t·σt + z·σz + x·σx + y·σy`.
fn pauli(index: usize) -> Mat2 {
    let (o, l, i) = (Complex::from(0.0), Complex::from(1.0), Complex::i());
    match index {
        0 => Mat2::IDENTITY,
        1 => Mat2::from_entries(l, o, o, -l),
        2 => Mat2::from_entries(o, l, l, o),
        3 => Mat2::from_entries(o, -i, i, o),
        _ => unreachable!("Pauli index out of range"),
    }
}

/// Real 4×4 image of `G`: `Λ[μ][ν] = ½ tr(σμ G σν G†)`.
pub fn to_four_by_four(g: &GroupElement) -> LorentzMatrix4 {
    let gm = g.matrix();
    let gd = gm.adjoint();
    let images: [Mat2; 4] = std::array::from_fn(|nu| gm.multiply(&pauli(nu)).multiply(&gd));
    let mut rows = [[0.0; 4]; 4];
    for (mu, row) in rows.iter_mut().enumerate() {
        let sigma = pauli(mu);
        for (nu, cell) in row.iter_mut().enumerate() {
            *cell = 0.5 * sigma.multiply(&images[nu]).trace().re;
        }
    }
    LorentzMatrix4::from_rows_unchecked(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    const TOL: f64 = 1e-14;

    fn assert_close(a: &Mat2, b: &Mat2, tol: f64) {
        assert!(a.max_abs_diff(b) < tol, "{a} != {b}");
    }

    #[test]
    fn rotation_z_values() {
        assert_close(GroupElement::rotation_z(0.0).matrix(), &Mat2::IDENTITY, TOL);
        assert_close(
            GroupElement::rotation_z(2.0 * PI).matrix(),
            &Mat2::IDENTITY.neg(),
            TOL,
        );
        let i = Complex::i();
        assert_close(
            GroupElement::rotation_z(PI).matrix(),
            &Mat2::diag(i, -i),
            TOL,
        );
        assert_eq!(
            to_four_by_four(&GroupElement::rotation_z(2.0 * PI)),
            to_four_by_four(&GroupElement::rotation_z(2.0 * PI).negated())
        );
    }

    #[test]
    fn rotation_y_values() {
        assert_eq!(GroupElement::rotation_y(0.0), GroupElement::IDENTITY);
        assert_close(
            GroupElement::rotation_y(PI).matrix(),
            &Mat2::real(0.0, -1.0, 1.0, 0.0).unwrap(),
            TOL,
        );
        let v = naimark_apply(&GroupElement::rotation_y(PI / 2.0), &FourVector::new(0.0, 1.0, 0.0, 0.0));
        assert!(v.max_abs_diff(&FourVector::new(0.0, 0.0, 1.0, 0.0)) < TOL);
    }

    #[test]
    fn boost_z_values() {
        assert_eq!(GroupElement::boost_z(0.0), GroupElement::IDENTITY);
        assert_close(
            GroupElement::boost_z(2.0 * LN_2).matrix(),
            &Mat2::real(2.0, 0.0, 0.0, 0.5).unwrap(),
            TOL,
        );
        let mu = 0.8_f64;
        let v = naimark_apply(&GroupElement::boost_z(mu), &FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert!(v.max_abs_diff(&FourVector::new(mu.cosh(), mu.sinh(), 0.0, 0.0)) < TOL);
    }

    #[test]
    fn boost_x_values() {
        assert_eq!(GroupElement::boost_x(0.0), GroupElement::IDENTITY);
        let lambda = -1.2_f64;
        let word = GeneratorWord(vec![
            Generator::RotationY(PI / 2.0),
            Generator::BoostZ(lambda),
            Generator::RotationY(-PI / 2.0),
        ]);
        assert_close(compose(&word).matrix(), GroupElement::boost_x(lambda).matrix(), 1e-14);
        let v = naimark_apply(&GroupElement::boost_x(lambda), &FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert!(v.max_abs_diff(&FourVector::new(lambda.cosh(), 0.0, lambda.sinh(), 0.0)) < TOL);
    }

    #[test]
    fn triangular_values() {
        assert_eq!(GroupElement::triangular(0.0), GroupElement::IDENTITY);
        assert_eq!(GroupElement::triangular(1.0).matrix().det(), Complex::from(1.0));
        let p = HermitianMat2::diagonal(1.0, 0.0).unwrap();
        let out = conjugate_transform(GroupElement::triangular(3.7).matrix(), &p);
        assert_eq!(out, p);
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&GeneratorWord::default()), GroupElement::IDENTITY);
        let w = GeneratorWord(vec![Generator::RotationZ(0.9), Generator::RotationZ(-0.9)]);
        assert_close(compose(&w).matrix(), &Mat2::IDENTITY, TOL);
    }

    #[test]
    fn compose_keeps_long_words_unimodular() {
        let w = GeneratorWord(
            (0..500)
                .map(|i| match i % 4 {
                    0 => Generator::RotationZ(0.3),
                    1 => Generator::RotationY(0.7),
                    2 => Generator::RotationZ(-1.9),
                    _ => Generator::RotationY(1.1),
                })
                .collect(),
        );
        let g = compose(&w);
        assert!((g.matrix().det() - Complex::from(1.0)).norm() < 1e-14);
        assert!(g.is_unitary(1e-13));
    }

    #[test]
    fn group_element_rejects_non_unimodular() {
        let m = Mat2::real(2.0, 0.0, 0.0, 1.0).unwrap();
        assert!(matches!(GroupElement::new(m), Err(Error::NotUnimodular { .. })));
        let g = GroupElement::normalized(m).unwrap();
        assert!((g.matrix().det() - Complex::from(1.0)).norm() < 1e-15);
        assert!(GroupElement::normalized(Mat2::ZERO).is_err());
    }

    #[test]
    fn pack_examples() {
        assert_eq!(pack(&FourVector::new(1.0, 0.0, 0.0, 0.0)).0, HermitianMat2::IDENTITY);
        assert_eq!(
            pack(&FourVector::new(0.0, 0.0, 1.0, 0.0)).0.to_mat2(),
            Mat2::real(0.0, 1.0, 1.0, 0.0).unwrap()
        );
        let light = pack(&FourVector::new(1.0, 1.0, 0.0, 0.0));
        assert_eq!(light.0, HermitianMat2::diagonal(2.0, 0.0).unwrap());
        assert_eq!(light.det(), 0.0);
    }

    #[test]
    fn unpack_rejects_non_hermitian() {
        let m = Mat2::new(
            Complex::new(1.0, 0.5),
            Complex::from(0.0),
            Complex::from(0.0),
            Complex::from(1.0),
        )
        .unwrap();
        assert!(FourVectorMatrix::try_from_mat2(&m).is_err());
    }

    #[test]
    fn naimark_examples() {
        let v = FourVector::new(2.0, 0.3, -0.4, 1.1);
        assert!(naimark_apply(&GroupElement::IDENTITY, &v).max_abs_diff(&v) < TOL);
        // Z(π/2) carries +x to -y under the (x - iy) packing.
        let out = naimark_apply(&GroupElement::rotation_z(PI / 2.0), &FourVector::new(0.0, 0.0, 1.0, 0.0));
        assert!(out.max_abs_diff(&FourVector::new(0.0, 0.0, 0.0, -1.0)) < TOL, "{out:?}");
    }

    #[test]
    fn four_by_four_examples() {
        assert!(to_four_by_four(&GroupElement::IDENTITY).max_abs_diff(&LorentzMatrix4::IDENTITY) < TOL);

        let mu = 0.75_f64;
        let (ch, sh) = (mu.cosh(), mu.sinh());
        let want = LorentzMatrix4::try_from_rows([
            [ch, sh, 0.0, 0.0],
            [sh, ch, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
        .unwrap();
        assert!(to_four_by_four(&GroupElement::boost_z(mu)).max_abs_diff(&want) < TOL);

        let lambda = 0.4_f64;
        let (ch, sh) = (lambda.cosh(), lambda.sinh());
        let want = LorentzMatrix4::try_from_rows([
            [ch, 0.0, sh, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [sh, 0.0, ch, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
        .unwrap();
        assert!(to_four_by_four(&GroupElement::boost_x(lambda)).max_abs_diff(&want) < TOL);

        let theta = 0.6_f64;
        let (s, c) = theta.sin_cos();
        let want = LorentzMatrix4::try_from_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, c, -s, 0.0],
            [0.0, s, c, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
        .unwrap();
        assert!(to_four_by_four(&GroupElement::rotation_y(theta)).max_abs_diff(&want) < TOL);

        let delta = 0.6_f64;
        let (s, c) = delta.sin_cos();
        let want = LorentzMatrix4::try_from_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, c, s],
            [0.0, 0.0, -s, c],
        ])
        .unwrap();
        assert!(to_four_by_four(&GroupElement::rotation_z(delta)).max_abs_diff(&want) < TOL);
    }

    #[test]
    fn try_from_rows_rejects_non_lorentz() {
        let mut rows = *LorentzMatrix4::IDENTITY.rows();
        rows[1][2] = 0.5;
        assert!(LorentzMatrix4::try_from_rows(rows).is_err());
        let mut rows = *LorentzMatrix4::IDENTITY.rows();
        rows[0][0] = -1.0;
        assert!(LorentzMatrix4::try_from_rows(rows).is_err());
    }

    #[test]
    fn generator_symbols_round_trip() {
        for g in [
            Generator::RotationZ(1.0),
            Generator::RotationY(2.0),
            Generator::BoostZ(3.0),
            Generator::BoostX(4.0),
            Generator::Triangular(5.0),
        ] {
            assert_eq!(Generator::from_symbol(g.symbol(), g.parameter()), Some(g));
        }
        assert_eq!(Generator::from_symbol('Q', 1.0), None);
    }
}
