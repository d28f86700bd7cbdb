//! Reasoning engine for abstract and structured argumentation.
//!
//! The crate computes extensions of attack graphs under the usual semantics,
//! decides skeptical and credulous acceptance, and produces basic and
//! contrastive explanations for arguments and — through the structured layer
//! — for the formulas they conclude.

pub mod af;
pub mod aspic;
pub mod contrastive;
pub mod error;
pub mod explain;
mod semantics;
mod walks;

pub use af::{
    AcceptanceStatus, ArgumentId, ArgumentationFramework, Extension, Relevance, Semantics,
    Strategy,
};
pub use error::{Error, Result};
