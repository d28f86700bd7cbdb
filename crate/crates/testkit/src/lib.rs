//! Test support shared across the workspace: well-known fixture frameworks,
//! brute-force semantics oracles that follow the set-based definitions
//! clause by clause, and seeded random corpora. Nothing in here touches the
//! labelling engine, so oracle agreement is a real cross-check.

pub mod fixtures;
pub mod gen;
pub mod oracle;
