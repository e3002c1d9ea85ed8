//! Commutative polynomial backend: Groebner bases, Hilbert functions,
//! syzygies, free resolutions, Ext against the ring, and canonical
//! dimension.  Everything is exact over the rationals and deterministic.

pub mod cpoly;
pub mod groebner;
pub mod hilbert;
pub mod resolution;

pub use cpoly::{CPoly, CTermOrder, Expo};
pub use groebner::{gb, reduce, spair, syzygies, MPoly, ModOrder};
pub use hilbert::{growth_degree, hilbert_function};
pub use resolution::{
    auslander_spot_check, cdim_commutative, ext_modules, free_resolution, grade,
    CanonicalComplexSpec, ExtModule, Resolution,
};
