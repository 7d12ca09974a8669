//! Identity registry, grid runner, report rendering and table export.

pub mod checks;
pub mod compute;
pub mod registry;
pub mod render;
pub mod suite;
pub mod table;

pub use registry::{Entry, Expected, Mode, SuiteConfig, REGISTRY};
pub use render::{render_reports, Format};
pub use suite::{fixed_points, run_suite, suite_passed, GridSpec, Summary};
pub use table::{build_table, emit_table, Family, NumberTable, TableSpec};
