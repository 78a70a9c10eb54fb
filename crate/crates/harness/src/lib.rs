//! Bounded enumeration, property suites and export for the `ordgap` term
//! systems, shared by the command-line tool and the acceptance run.

pub mod check;
pub mod enumerate;
pub mod export;
pub mod random;
pub mod report;
pub mod suites;
