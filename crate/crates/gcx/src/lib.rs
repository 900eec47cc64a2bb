pub mod canon;
pub mod chain;
pub mod diff;
pub mod enumerate;
pub mod graph;
pub mod partitions;
pub mod reptheory;
