//! Local versions of extremal bounds: every object of a structure gets a rational
//! weight from a local statistic, and the weights sum to at most the classical bound.

pub mod bits;
pub mod clique;
pub mod error;
pub mod family;
pub mod family_local;
pub mod generate;
pub mod graph;
pub mod graph_local;
pub mod io;
pub mod oracle;
pub mod order_local;
pub mod poset;
pub mod rational;
pub mod report;
pub mod sequence;
pub mod subgraph;

pub use error::{LocexError, Result, Violation};
pub use family::SetFamily;
pub use graph::SmallGraph;
pub use poset::RankedPoset;
pub use rational::{exact_sum, ExactRational};
pub use report::{ObjectWeight, ReportFormat, ReportMode, ReportRecord, Theorem, WeightReport};
pub use sequence::RealSequence;
