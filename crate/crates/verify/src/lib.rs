//! Independent oracles for qcox-core and the acceptance criteria built on them.

pub mod counting;
pub mod criteria;
pub mod oracle;

pub use criteria::{run, run_all, CriterionReport, Suite};
