//! Bound-state spectra of a charged particle in the two-dimensional
//! non-central Kratzer potential
//!
//! ```text
//! U(r, θ) = −Z/r + D_r/r² + D_θ cos θ / r²
//! ```
//!
//! in Hartree atomic units. The angular problem is a Mathieu equation whose
//! characteristic values are computed by a truncated tridiagonal matrix
//! ([`mathieu`]); the radial problem is solved in closed form
//! ([`nonrel`], [`specfun`]); the spin and pseudo-spin symmetric
//! Klein-Gordon/Dirac spectra are obtained by root finding on the coupled
//! angular/radial eigenvalue relations ([`rel`]).

pub mod error;
pub mod mathieu;
pub mod nonrel;
pub mod rel;
pub mod roots;
pub mod specfun;
pub mod tridiag;

pub use error::{Error, Result};
pub use mathieu::{Branch, MathieuOptions, MathieuProblem, MathieuSolution};
pub use nonrel::{EnergyResult, PotentialParams, Provenance, QuantumState, Settings};
pub use rel::{RelEnergyResult, RelOptions, SymmetryMode};
pub use specfun::RadialSolution;
