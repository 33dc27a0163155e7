//! Basic covers of graphs, the cover poset of a bipartite graph, and the
//! combinatorial invariants that control the algebra generated by basic
//! covers.

pub mod asl;
pub mod budget;
pub mod complex;
pub mod cover_poset;
pub mod covers;
pub mod error;
pub mod fixtures;
pub mod gdim;
pub mod graph;
pub mod par;
pub mod poset;
pub mod projection;
pub mod report;

pub use budget::Budget;
pub use cover_poset::{build_poset, CoverPoset};
pub use covers::{Cover, HilbertData};
pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, VertexSet};
pub use poset::Poset;
pub use report::{analyze, AnalysisOptions, AnalysisReport, Verdict};
