//! Exact symbolic calculator for the universal formal group law and its
//! consequences.
//!
//! The crate computes, over the polynomial model `Z[b1, b2, ...]` of the
//! Lazard ring:
//!
//! - the coefficients `a_ij` of the universal formal group law, projective
//!   space classes, and the eta coefficient families ([`fgl`]);
//! - the Hopf algebra structure of the complex bordism of infinite projective
//!   space in both the dual and the geometric basis ([`hopf`]);
//! - Gysin pushforwards along projective-space projections, diagonal classes,
//!   and splitting-principle Euler classes in truncated polynomial models
//!   ([`gysin`]);
//! - mod-l motivic Steenrod and Milnor operations on the cohomology of
//!   products of root-of-unity classifying stacks ([`steenrod`]).
//!
//! Every headline value is cross-checked by an independent route; see the
//! `verify`-style functions in each module and the `acceptance` test suite.
//! The `lazard` binary exposes all computations as CLI subcommands, and
//! `examples/` holds one runnable example per capability.
//!
//! All values are immutable after construction and freely shareable across
//! threads; operations are pure.
//!
//! ```
//! use lazard::{text, Fgl};
//!
//! let fgl = Fgl::universal(6);
//! assert_eq!(text::to_canonical(&fgl.a(1, 1)), "2*b1");
//! assert_eq!(text::to_canonical(&fgl.cp_class(2)?), "6*b1^2 - 3*b2");
//! assert!(fgl.verify_axioms(6).passed());
//! # Ok::<(), lazard::Error>(())
//! ```

pub mod cache;
pub mod cli;
pub mod error;
pub mod expr;
pub mod fgl;
pub mod gysin;
pub mod hopf;
pub mod report;
pub mod ring;
pub mod series;
pub mod steenrod;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use fgl::{Fgl, FglKind};
pub use report::{Check, Report, Status};
pub use ring::{Domain, GeneratorTable, GradedPoly, Monomial, Parity, Table};
pub use series::TruncatedSeries;
