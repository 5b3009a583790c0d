//! File formats, parallel drivers, the verification report and the
//! command line for [`balance_core`].

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;
