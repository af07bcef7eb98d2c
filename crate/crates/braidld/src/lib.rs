//! Text formats, random samplers, property suites and the command-line
//! front end for [`braid_ld_core`].

pub mod cli;
pub mod gen;
pub mod grammar;
pub mod props;
