pub mod fixtures;
pub mod report;
pub mod suites;
