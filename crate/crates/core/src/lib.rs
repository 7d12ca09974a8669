pub mod algebra;
pub mod classical;
pub mod degenerate;
pub mod error;
pub mod exec;

pub use error::{Error, Result};
pub mod simsek;
pub mod phi;
pub mod report;
pub mod harness;
