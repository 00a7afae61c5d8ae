//! Two-by-two Lorentz group numerics shared by special relativity and
//! polarization optics.
//!
//! A unimodular complex 2×2 matrix `G` acts on Hermitian matrices by
//! `X ↦ G X G†`. Read `X` as a packed four-vector `(t, z, x, y)` and this is a
//! Lorentz transformation; read it as a coherency matrix and `G` is an optical
//! element acting on a beam. The modules are:
//!
//! * [`mat2`]: complex 2×2 algebra, conjugation, Hermitian eigensolver;
//! * [`lorentz`]: generators, words, four-vector packing, 4×4 images;
//! * [`wigner`]: little-group classification and stabilizers;
//! * [`polarization`]: beams, coherency and Stokes vectors, optical elements;
//! * [`sphere`]: Poincaré-sphere radii, entropy, and the two-sphere law;
//! * [`oracle`]: Monte Carlo and outer-product cross-checks;
//! * [`parallel`]: rayon-backed batch evaluation with a sequential fallback.

pub mod error;
pub mod lorentz;
pub mod mat2;
pub mod oracle;
pub mod parallel;
pub mod polarization;
pub mod sphere;
pub mod wigner;

pub use error::{Error, Result};
pub use lorentz::{FourVector, GeneratorWord, Generator, GroupElement, LorentzMatrix4};
pub use mat2::{Complex, HermitianMat2, Mat2};
pub use parallel::Execution;
pub use polarization::{BeamSpec, CoherencyMatrix, OpticalElement, StokesVector};
