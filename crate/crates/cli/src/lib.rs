//! Command-line front end for the argumentation engine: text formats for
//! frameworks and theories, the machine-readable result envelope, and the
//! query driver behind the `argex` binary.

pub mod apx;
pub mod cli;
pub mod envelope;
pub mod theory;
