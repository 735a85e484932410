//! Polyhedral C-pseudo-cones: closed convex sets `K ⊆ C` with `o ∉ K`,
//! `K + C = K` and recession cone `C`, for a pointed full-dimensional
//! polyhedral cone `C`.
//!
//! Geometry is exact over big rationals ([`linalg`], [`polyhedra`]); metric
//! quantities are `f64`. The main entry points:
//!
//! - [`cone::PolyCone`] and [`pseudocone::PseudoCone`] for the objects,
//!   with support and radial functions, truncations and crucial pairs;
//! - [`copolarity`] for the copolar set `K⋆`, conjugate faces and the
//!   identity battery;
//! - [`minkowski`] for surface area measures, coconvex volumes, the
//!   Minkowski solver and the truncation pipeline;
//! - [`cli`] for the JSON command-line interface.
//!
//! ```
//! use std::sync::Arc;
//! use pseudocone::cone::PolyCone;
//! use pseudocone::copolarity::copolar;
//! use pseudocone::linalg::{rat, Halfspace, QVec};
//! use pseudocone::pseudocone::PseudoCone;
//!
//! let quadrant = Arc::new(PolyCone::orthant(2).unwrap());
//! let k = PseudoCone::from_cone_and_halfspaces(
//!     quadrant,
//!     vec![Halfspace::new(QVec::from_ints(&[-1, -1]), rat(-1))],
//! )
//! .unwrap();
//! assert_eq!(k.radial(&QVec::from_ints(&[1, 1])).unwrap(), rat(1) / rat(2));
//! assert_eq!(copolar(&copolar(&k)), k);
//! ```

pub mod cli;
pub mod cone;
pub mod copolarity;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod minkowski;
pub mod polyhedra;
pub mod pseudocone;

pub use error::{Error, Result};
