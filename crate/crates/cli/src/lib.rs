//! Rendering, wire formats, and the conjecture scan for the `arrspec` binary.

pub mod conjecture;
pub mod output;
