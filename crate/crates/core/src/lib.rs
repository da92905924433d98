//! Planarity testing, combinatorial embedding and Kuratowski minor
//! extraction built on conflict graphs of cycles.
//!
//! The embedding route reduces a graph to its triconnected components,
//! embeds each 3-connected piece by changing the cycle basis from fundamental
//! cycles to faces, and glues the pieces back together. Non-planar inputs
//! yield checkable evidence, and [`kuratowski::find_kuratowski`] turns that
//! into a verified K5 or K3,3 minor.

pub mod conflict;
pub mod decompose;
pub mod embed3;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod kuratowski;
pub mod oracle;
pub mod par;

pub use embed3::{embed, embed_triconnected, is_planar, NonPlanarEvidence};
pub use embedding::PlanarEmbedding;
pub use error::*;
pub use graph::{build_graph, canonical_graph, Cycle, EdgeId, EdgeSet, Graph, VertexId};
pub use kuratowski::{find_kuratowski, KuratowskiMinor, MinorKind};
