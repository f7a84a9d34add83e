//! Algebra-description files, run reports and the pipeline behind the `bihom`
//! binary.

pub mod document;
pub mod pipeline;
pub mod report;

pub use document::{parse_document, AlgebraDocument, DocError, NamedMap};
pub use pipeline::{run_pipeline, Command, Flags};
pub use report::{RunReport, Status};
