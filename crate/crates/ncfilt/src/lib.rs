//! Exact symbolic computation for filtered noncommutative algebras of finite type.
//!
//! The crate works with algebras presented by generators and relations over the
//! rational numbers.  Every generator carries a nonnegative filtration degree;
//! all computations are degree-capped, exact, and deterministic.  On top of the
//! rewriting core this provides:
//!
//! * associated graded algebras, Rees algebras, and their specializations,
//! * the two-filtrations construction producing a new filtration whose
//!   associated graded is commutative and connected,
//! * constructors for Weyl algebras, enveloping algebras of Lie algebras and
//!   Lie algebroids, skew polynomial extensions, tensor products, opposites,
//!   and enveloping (two-sided) algebras,
//! * a commutative backend (Groebner bases, Hilbert functions, free
//!   resolutions, Ext, canonical dimension),
//! * Gelfand-Kirillov dimension for filtered modules,
//! * denominator-set (Ore) witness search together with obstruction
//!   certificates.

pub mod commalg;
pub mod constructors;
pub mod dimension;
pub mod error;
pub mod filtration;
pub mod linalg;
pub mod localization;
pub mod order;
pub mod poly;
pub mod presentation;
pub mod rewrite;
pub mod scalar;
pub mod twofilt;
pub mod word;

pub use error::Error;
pub use order::{Degree, MonomialOrder, OrderKind};
pub use poly::NCPoly;
pub use presentation::{Filtration, Generator, Presentation};
pub use rewrite::{CompletionStatus, RewriteSystem};
pub use scalar::Scalar;
pub use word::Word;

/// Default degree cap used across the crate when none is given.
pub const DEFAULT_CAP: u32 = 8;
