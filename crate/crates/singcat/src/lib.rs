//! Exact invariants of singularity categories.
//!
//! * [`quiver`]: quivers with length-two monomial relations and their text
//!   format.
//! * [`gentle`]: gentleness, critical cycles, Gorenstein projectives and
//!   the singularity category of a gentle algebra.
//! * [`nodal`]: Hom dimensions, minimal strings and `K_0` classes in the
//!   relative singularity category of the node.
//! * [`surface`]: dual graphs, fundamental cycles and ADE block
//!   decompositions for rational surface singularities.
//! * [`dga`]: dg Auslander algebras of ADE singularities.
//!
//! ```
//! use singcat::gentle::singularity_category;
//! use singcat::quiver::Presentation;
//!
//! // A loop x with x² = 0: one critical cycle of length one.
//! let p = Presentation::from_parts(&["1"], &[("x", "1", "1")], &[("x", "x")]).unwrap();
//! assert_eq!(singularity_category(&p).unwrap().periods(), vec![1]);
//! ```

pub mod ade;
pub mod dga;
pub mod examples;
pub mod gentle;
pub mod nodal;
pub mod quiver;
pub mod surface;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/quivers.md")]
    struct Quivers;
    #[doc = include_str!("../../../book/src/gentle.md")]
    struct Gentle;
    #[doc = include_str!("../../../book/src/nodal.md")]
    struct Nodal;
    #[doc = include_str!("../../../book/src/surfaces.md")]
    struct Surfaces;
    #[doc = include_str!("../../../book/src/dg_auslander.md")]
    struct DgAuslander;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
