//! Exact enumerative geometry of generic projective K3 surfaces.
//!
//! A surface `S` with `Pic S = Z h`, `h^2 = 2t`, embedded in `P^{t+1}`.
//! Degrees of its secant and tangent varieties are derived through the
//! classes of the secant-line and tangent-plane loci in Grassmannians:
//!
//! - [`schubert`]: Schubert calculus on `G(l, n)` (Pieri, Littlewood-Richardson,
//!   duality pairing, Plücker degrees).
//! - [`hilb2k3`]: the Beauville-Bogomolov-Fujiki lattice of `Hilb^2 S`, the
//!   Fujiki quartic and Riemann-Roch.
//! - [`ampleness`]: Knutsen's k-very-ampleness criterion in Picard rank one.
//! - [`enumerative`]: coefficient formulas for embedded surfaces and the K3
//!   degree theorems.
//! - [`cli`]: the command-line front end and its JSON/CSV/markdown tables.
//!
//! ```
//! use k3_secant::enumerative::{k3_secant_degree, k3_tangent_degree};
//!
//! assert_eq!(k3_secant_degree(5).unwrap(), 12.into());
//! assert_eq!(k3_tangent_degree(6).unwrap(), 48.into());
//! ```
//!
//! Everything is exact: coefficients are [`num_bigint::BigInt`] and every
//! function is pure.

pub mod ampleness;
pub mod cli;
pub mod enumerative;
mod error;
pub mod hilb2k3;
mod linalg;
pub mod schubert;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
