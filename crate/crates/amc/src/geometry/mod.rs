//! Exact rational geometry: points, similarity transforms, extreme-point
//! tests, rational rotations, and lattices.

pub mod extreme;
pub mod lattice;
pub mod matrix;
pub mod point;
pub mod rotation;
pub mod similarity;

pub use extreme::{in_convex_hull, is_extreme_point};
pub use lattice::{find_rotatability_witness, Lattice, RotatabilityWitness};
pub use matrix::RatMatrix;
pub use point::{PatternPair, Point, MAX_DIM};
pub use rotation::{rational_rotations_2d, RationalRotation};
pub use similarity::{apply_similarity, SimilarityMap};
