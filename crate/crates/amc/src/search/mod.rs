//! Exhaustive, certificate-producing searches.

pub mod am;
pub mod ap;
pub mod exec;
pub mod extend;
pub mod grid;
pub mod homothet;
pub mod interval;
pub mod window;
pub mod witness;

pub use am::{is_am_under, search_am_homothet, search_am_similar_2d};
pub use ap::probe_mono_ap;
pub use exec::SearchOptions;
pub use extend::{extend_from_ball, extend_from_ball_z, BallExtension};
pub use grid::{audit_mono_sublattice, grid_expand, GridExpandParams};
pub use homothet::{ball_pattern, search_mono_homothet};
pub use interval::{interval_i2, IntInterval, MiddleInterval};
pub use window::Window;
pub use witness::{digest, EnumerationBounds, Evidence, TransformJson, Witness, WitnessKind};
