//! Independent brute-force checks.
//!
//! * [`mc_coherency`] time-averages `ψ1* ψ2` over a beam whose relative phase
//!   carries stationary Gaussian jitter of variance `s²`. The ensemble mean is
//!   `ab e^{-iδ} e^{-s²/2}`, so the jitter reproduces a decoherence exponent
//!   `σ = s²/2`.
//! * [`outer_product_lorentz`] builds the 4×4 Lorentz matrix from the sixteen
//!   products `G_ij G*_kl` acting on `(t+z, x-iy, x+iy, t-z)`, then changes
//!   basis back to `(t, z, x, y)`. It shares no code with
//!   [`crate::lorentz::to_four_by_four`].
//!
//! Sampling uses ChaCha8 (`rand_chacha`): the sample range is split into
//! fixed chunks of [`CHUNK_SIZE`], chunk `k` draws from stream `k` of the
//! generator seeded with the model's seed, and chunk sums are added in chunk
//! order. Output is therefore bit-identical across runs, platforms, and
//! sequential or parallel execution.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{check_finite, Error, Result};
use crate::lorentz::{GroupElement, LorentzMatrix4};
use crate::mat2::{Complex, HermitianMat2};
use crate::parallel::{map_indexed, Execution};
use crate::polarization::CoherencyMatrix;

/// Samples per independently seeded stream.
pub const CHUNK_SIZE: u64 = 4096;

/// Gaussian phase jitter on the relative phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JitterModel {
    variance: f64,
    samples: u64,
    seed: u64,
}

impl JitterModel {
    pub fn gaussian_phase(variance: f64, samples: u64, seed: u64) -> Result<Self> {
        check_finite(&[variance], "jitter variance")?;
        if variance < 0.0 {
            return Err(Error::Domain {
                name: "variance",
                value: variance,
                domain: "[0, inf)",
            });
        }
        if samples == 0 {
            return Err(Error::Domain {
                name: "samples",
                value: 0.0,
                domain: "[1, inf)",
            });
        }
        Ok(JitterModel {
            variance,
            samples,
            seed,
        })
    }

    /// Jitter whose expected suppression is `e^{-σ}`: variance `2σ`.
    pub fn for_sigma(sigma: f64, samples: u64, seed: u64) -> Result<Self> {
        Self::gaussian_phase(2.0 * sigma, samples, seed)
    }

    pub fn variance(&self) -> f64 {
        self.variance
    }

    pub fn samples(&self) -> u64 {
        self.samples
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The decoherence exponent this jitter models, `σ = s²/2`.
    pub fn sigma(&self) -> f64 {
        0.5 * self.variance
    }
}

/// Fixed field amplitudes and relative phase of a beam.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplitudes {
    pub a: f64,
    pub b: f64,
    pub delta: f64,
}

fn chunk_sum(amps: &Amplitudes, model: &JitterModel, chunk: u64) -> Complex {
    let start = chunk * CHUNK_SIZE;
    let len = CHUNK_SIZE.min(model.samples - start);
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
    rng.set_stream(chunk);
    let normal = Normal::new(0.0, model.variance.sqrt()).expect("variance checked at construction");
    let mut acc = Complex::from(0.0);
    for _ in 0..len {
        let phi = normal.sample(&mut rng);
        // ψ1 = a e^{i(δ+φ)}, ψ2 = b, so ψ1* ψ2 = ab e^{-i(δ+φ)}
        acc += Complex::from_polar(1.0, -(amps.delta + phi));
    }
    acc
}

/// Monte Carlo coherency matrix with the default execution mode.
pub fn mc_coherency(amps: &Amplitudes, model: &JitterModel) -> Result<CoherencyMatrix> {
    mc_coherency_with(amps, model, Execution::default())
}

/// Monte Carlo coherency matrix. The diagonal is exactly `(a², b²)` since the
/// amplitudes carry no noise; the off-diagonal is the sample mean of `ψ1* ψ2`.
pub fn mc_coherency_with(amps: &Amplitudes, model: &JitterModel, exec: Execution) -> Result<CoherencyMatrix> {
    check_finite(&[amps.a, amps.b, amps.delta], "beam amplitude")?;
    let chunks = model.samples.div_ceil(CHUNK_SIZE);
    let partials = map_indexed(chunks as usize, exec, |k| chunk_sum(amps, model, k as u64));
    let total: Complex = partials.into_iter().fold(Complex::from(0.0), |acc, z| acc + z);
    let mean = total / model.samples as f64;
    let h = HermitianMat2::new(amps.a * amps.a, amps.b * amps.b, mean * (amps.a * amps.b))?;
    CoherencyMatrix::new(h)
}

/// 4×4 Lorentz matrix of `G` assembled entry by entry from the outer products.
pub fn outer_product_lorentz(g: &GroupElement) -> LorentzMatrix4 {
    let m = g.matrix();
    let (al, be, ga, de) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));

    // Rows act on u = (t+z, x-iy, x+iy, t-z).
    let prod: [[Complex; 4]; 4] = [
        [al * al.conj(), al * be.conj(), be * al.conj(), be * be.conj()],
        [al * ga.conj(), al * de.conj(), be * ga.conj(), be * de.conj()],
        [ga * al.conj(), ga * be.conj(), de * al.conj(), de * be.conj()],
        [ga * ga.conj(), ga * de.conj(), de * ga.conj(), de * de.conj()],
    ];

    let (o, l, i) = (Complex::from(0.0), Complex::from(1.0), Complex::i());
    let h = Complex::from(0.5);
    // (t, z, x, y) = to_txyz · u
    let to_txyz = [
        [h, o, o, h],
        [h, o, o, -h],
        [o, h, h, o],
        [o, h * i, -h * i, o],
    ];
    // u = to_u · (t, z, x, y)
    let to_u = [
        [l, l, o, o],
        [o, o, l, -i],
        [o, o, l, i],
        [l, -l, o, o],
    ];

    let matmul = |a: &[[Complex; 4]; 4], b: &[[Complex; 4]; 4]| {
        let mut out = [[o; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                for k in 0..4 {
                    out[r][c] += a[r][k] * b[k][c];
                }
            }
        }
        out
    };
    let full = matmul(&to_txyz, &matmul(&prod, &to_u));
    let mut rows = [[0.0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            rows[r][c] = full[r][c].re;
        }
    }
    LorentzMatrix4::from_rows_unchecked(rows)
}
