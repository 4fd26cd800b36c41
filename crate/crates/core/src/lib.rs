//! Exact combinatorics of generalized Young walls of affine type A_n^(1).
//!
//! The crate provides:
//!
//! - [`root_system`]: the Cartan datum, root-lattice vectors, and
//!   positive-root enumeration with multiplicities;
//! - [`series`]: sparse Laurent polynomials in q and truncated multivariate
//!   formal series over the root lattice;
//! - [`young_wall`]: generalized Young walls — properness, reducedness,
//!   weights, the row statistics, the splitting algorithm, and enumeration;
//! - [`kostant`]: Kostant partitions, the folding/unfolding maps between
//!   arbitrary and reduced expressions, and the row-to-part bijections with
//!   walls;
//! - [`gk`]: both sides of the affine Gindikin-Karpelevich identity, the
//!   correction-factor expansion, their product, and the orbit-intersection
//!   counting polynomial, all as truncated series with exact coefficients.
//!
//! All arithmetic is exact; identities are compared coefficient-by-
//! coefficient up to a total-height cutoff.

pub mod error;
pub mod gk;
pub mod kostant;
pub mod root_system;
pub mod series;
pub mod young_wall;

pub use error::{Error, Result};
pub use gk::{Mismatch, VerificationReport};
pub use kostant::{KostantExpr, KostantPart};
pub use root_system::{CartanData, RootVector};
pub use series::{QLaurent, ZSeries};
pub use young_wall::{MultiPartition, Wall, WallStats};
