//! The book's chapters, included as doc comments so `cargo test --doc`
//! compiles and runs every code snippet in `book/src`. mdBook itself does
//! not execute snippets against the workspace crates; routing them through
//! rustdoc keeps the prose and the library honest together. One module per
//! chapter, so a failing snippet names its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-geometry.md")]
pub mod exact_geometry {}

#[doc = include_str!("../../../book/src/colourings.md")]
pub mod colourings {}

#[doc = include_str!("../../../book/src/witness-search.md")]
pub mod witness_search {}

#[doc = include_str!("../../../book/src/ramsey-engines.md")]
pub mod ramsey_engines {}

#[doc = include_str!("../../../book/src/integer-structure.md")]
pub mod integer_structure {}

#[doc = include_str!("../../../book/src/plane-geometry.md")]
pub mod plane_geometry {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
