//! Complex 2×2 linear algebra.
//!
//! Everything in the crate is built from [`Mat2`] (a general complex matrix)
//! and [`HermitianMat2`] (a matrix that is Hermitian by construction, stored as
//! two real diagonal entries and the upper off-diagonal entry).

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{check_finite, Error, Result};

pub type Complex = Complex64;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// A general complex 2×2 matrix with finite entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    e: [[Complex; 2]; 2],
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        e: [[ONE, ZERO], [ZERO, ONE]],
    };

    pub const ZERO: Mat2 = Mat2 {
        e: [[ZERO, ZERO], [ZERO, ZERO]],
    };

    /// Builds a matrix from its entries, rejecting NaN and infinities.
    pub fn new(e11: Complex, e12: Complex, e21: Complex, e22: Complex) -> Result<Self> {
        check_finite(
            &[e11.re, e11.im, e12.re, e12.im, e21.re, e21.im, e22.re, e22.im],
            "Mat2 entry",
        )?;
        Ok(Self::from_entries(e11, e12, e21, e22))
    }

    /// Real-entry convenience constructor.
    pub fn real(e11: f64, e12: f64, e21: f64, e22: f64) -> Result<Self> {
        Self::new(
            Complex::from(e11),
            Complex::from(e12),
            Complex::from(e21),
            Complex::from(e22),
        )
    }

    pub(crate) const fn from_entries(e11: Complex, e12: Complex, e21: Complex, e22: Complex) -> Self {
        Mat2 {
            e: [[e11, e12], [e21, e22]],
        }
    }

    pub(crate) fn diag(d1: Complex, d2: Complex) -> Self {
        Self::from_entries(d1, ZERO, ZERO, d2)
    }

    /// Entry at zero-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.e[row][col]
    }

    pub fn entries(&self) -> [[Complex; 2]; 2] {
        self.e
    }

    pub fn multiply(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.e;
        let b = &rhs.e;
        Mat2::from_entries(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }

    pub fn det(&self) -> Complex {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn trace(&self) -> Complex {
        self.e[0][0] + self.e[1][1]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        let e = &self.e;
        Mat2::from_entries(e[0][0].conj(), e[1][0].conj(), e[0][1].conj(), e[1][1].conj())
    }

    pub fn scale(&self, k: Complex) -> Mat2 {
        let e = &self.e;
        Mat2::from_entries(e[0][0] * k, e[0][1] * k, e[1][0] * k, e[1][1] * k)
    }

    pub fn neg(&self) -> Mat2 {
        self.scale(Complex::from(-1.0))
    }

    /// Inverse via the adjugate. Fails when the determinant vanishes.
    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det();
        if d.norm() == 0.0 {
            return Err(Error::Singular);
        }
        let e = &self.e;
        let inv = d.inv();
        Ok(Mat2::from_entries(e[1][1] * inv, -e[0][1] * inv, -e[1][0] * inv, e[0][0] * inv))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.e[i][j] - other.e[i][j]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_diff(&Mat2::ZERO)
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().flatten().all(|z| z.is_finite())
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        self.multiply(&rhs)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        self.multiply(rhs)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.e;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0], e[0][1], e[1][0], e[1][1]
        )
    }
}

/// A 2×2 Hermitian matrix `[[d1, off], [conj(off), d2]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMat2 {
    d1: f64,
    d2: f64,
    off: Complex,
}

impl HermitianMat2 {
    pub const IDENTITY: HermitianMat2 = HermitianMat2 {
        d1: 1.0,
        d2: 1.0,
        off: ZERO,
    };

    pub fn new(d1: f64, d2: f64, off: Complex) -> Result<Self> {
        check_finite(&[d1, d2, off.re, off.im], "HermitianMat2 entry")?;
        Ok(HermitianMat2 { d1, d2, off })
    }

    pub fn diagonal(d1: f64, d2: f64) -> Result<Self> {
        Self::new(d1, d2, ZERO)
    }

    pub(crate) const fn from_parts(d1: f64, d2: f64, off: Complex) -> Self {
        HermitianMat2 { d1, d2, off }
    }

    /// Accepts a general matrix if it is Hermitian to within `tol` (absolute,
    /// entrywise), then symmetrizes it exactly.
    pub fn try_from_mat2(m: &Mat2, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite("HermitianMat2 entry"));
        }
        let deviation = m.max_abs_diff(&m.adjoint());
        if deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self::symmetrized(m))
    }

    /// Projects onto the Hermitian part: real diagonal, averaged off-diagonals.
    pub(crate) fn symmetrized(m: &Mat2) -> Self {
        HermitianMat2 {
            d1: m.get(0, 0).re,
            d2: m.get(1, 1).re,
            off: (m.get(0, 1) + m.get(1, 0).conj()) * 0.5,
        }
    }

    #[inline]
    pub fn d1(&self) -> f64 {
        self.d1
    }

    #[inline]
    pub fn d2(&self) -> f64 {
        self.d2
    }

    /// Upper off-diagonal entry; the lower one is its conjugate.
    #[inline]
    pub fn off(&self) -> Complex {
        self.off
    }

    pub fn trace(&self) -> f64 {
        self.d1 + self.d2
    }

    pub fn det(&self) -> f64 {
        self.d1 * self.d2 - self.off.norm_sqr()
    }

    pub fn to_mat2(&self) -> Mat2 {
        Mat2::from_entries(
            Complex::from(self.d1),
            self.off,
            self.off.conj(),
            Complex::from(self.d2),
        )
    }

    pub fn scale(&self, k: f64) -> HermitianMat2 {
        HermitianMat2 {
            d1: self.d1 * k,
            d2: self.d2 * k,
            off: self.off * k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d1 == 0.0 && self.d2 == 0.0 && self.off == ZERO
    }

    pub fn max_abs_diff(&self, other: &HermitianMat2) -> f64 {
        (self.d1 - other.d1)
            .abs()
            .max((self.d2 - other.d2).abs())
            .max((self.off - other.off).norm())
    }

    pub fn max_abs(&self) -> f64 {
        self.d1.abs().max(self.d2.abs()).max(self.off.norm())
    }
}

impl fmt::Display for HermitianMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_mat2().fmt(f)
    }
}

/// `G · H · G†`, re-symmetrized to exact Hermitian form.
pub fn conjugate_transform(g: &Mat2, h: &HermitianMat2) -> HermitianMat2 {
    let full = g.multiply(&h.to_mat2()).multiply(&g.adjoint());
    HermitianMat2::symmetrized(&full)
}

/// Eigen-decomposition of a Hermitian matrix.
///
/// Returns `(λ1, λ2, U)` with `λ1 ≥ λ2` and `U† H U = diag(λ1, λ2)`. The first
/// column of `U` has a real non-negative first component and `det U = 1`.
/// A scalar matrix returns `U = I`.
pub fn eig_hermitian(h: &HermitianMat2) -> (f64, f64, Mat2) {
    let (d1, d2, w) = (h.d1, h.d2, h.off);
    let mean = 0.5 * (d1 + d2);
    let half_gap = 0.5 * (d1 - d2);
    let radius = half_gap.hypot(w.norm());
    let (l1, l2) = (mean + radius, mean - radius);

    if w == ZERO {
        return if d1 >= d2 {
            (d1, d2, Mat2::IDENTITY)
        } else {
            // columns (0, 1) and (-1, 0); det = 1
            (
                d2,
                d1,
                Mat2::from_entries(ZERO, Complex::from(-1.0), ONE, ZERO),
            )
        };
    }

    // Leading eigenvector, picked from whichever closed form avoids cancellation.
    let (p, q) = if d1 >= d2 {
        (Complex::from(half_gap + radius), w.conj())
    } else {
        let phase = w.conj() / w.norm();
        (Complex::from(w.norm()), Complex::from(radius - half_gap) * phase)
    };
    let norm = p.norm().hypot(q.norm());
    let (p, q) = (p / norm, q / norm);
    let u = Mat2::from_entries(p, -q.conj(), q, p.conj());
    (l1, l2, u)
}
