//! Almost-monochromatic set searches in exact-arithmetic colourings.
//!
//! A pair `(S, s0)` is *almost monochromatic* (AM) in a colouring when
//! `S \ {s0}` is monochromatic but `S` is not. This crate implements a
//! family of colouring constructions of the line, the plane, `Z^d` and `Q`
//! that avoid AM copies of chosen patterns, together with exhaustive,
//! certificate-producing searches for AM copies, monochromatic arithmetic
//! progressions, monochromatic homothets, Van der Waerden and Hales-Jewett
//! engines, and the supporting exact rational geometry (extreme points,
//! rational rotations, rotatable lattices, bouquets and pencils of the
//! plane, unit-distance graphs).
//!
//! Everything that decides an outcome runs over exact rationals; floating
//! point appears only in reporting and in a small numerical layer for cone
//! frames and circle placements, always behind stated tolerances.
//!
//! The `book/` directory of the repository walks through the concepts
//! chapter by chapter with runnable snippets.

pub mod colouring;
pub mod error;
pub mod geometry;
pub mod incidence;
pub mod rational;
pub mod ramsey;
pub mod search;
pub mod structure;
pub mod udg;

pub use colouring::Colouring;
pub use error::{Error, Result};
pub use geometry::{Lattice, PatternPair, Point, SimilarityMap};
pub use rational::{parse_rat, rat, ratio, Rat};
pub use search::{Window, Witness, WitnessKind};
