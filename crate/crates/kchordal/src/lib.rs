//! Graph file formats, JSON reports, parallel sweeps and the `kchordal`
//! command-line tool, built on [`kchordal_core`].

pub mod cli;
pub mod formats;
pub mod report;
pub mod sweep;

pub use kchordal_core as core;
