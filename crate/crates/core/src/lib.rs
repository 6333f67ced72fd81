//! Exact Picard-lattice engine for log del Pezzo surfaces of index `a` whose
//! anticanonical volume is at least `2a`.
//!
//! Surfaces are handled on their minimal resolutions, presented as blow-up
//! tapes over `P^2` or a Hirzebruch surface. The crate covers:
//!
//! * [`lattice`]: blow-up tapes, the intersection form and tracked curves;
//! * [`elimination`]: eliminations of curvilinear subschemes and the
//!   transform `E^{Δ,s} = ψ*E - s K_{Y/X}`;
//! * [`multiplet`]: basic pairs, fundamental multiplets, their ladders,
//!   certificates, volume and index, plus the built-in catalog;
//! * [`toric`]: two-dimensional fans, Hirzebruch-Jung resolution, discrepancies;
//! * [`enumerator`]: the pruned exhaustive search and the audit sweep;
//! * [`cli`]: the command-line front end.

pub mod error;
pub mod lattice;
pub mod elimination;
pub mod multiplet;
pub mod toric;
pub mod enumerator;
pub mod cli;
mod combinat;

pub use error::{Error, Result};
