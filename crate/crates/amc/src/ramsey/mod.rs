//! Van der Waerden and Hales-Jewett search kernels and the constructive
//! Gallai embedding.

pub mod gallai;
pub mod hj;
pub mod vdw;

pub use gallai::{build_gallai_embedding, gallai_via_hj, GallaiEmbedding};
pub use hj::{hj_find_line, line_count, CombinatorialLine, HJCube, Word};
pub use vdw::{
    brute_force_ap_free, is_ap_free, table_oracle, vdw_common_difference, vdw_number,
    CommonDifference, SearchLog, VdwOutcome,
};
