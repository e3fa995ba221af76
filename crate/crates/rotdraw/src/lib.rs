//! File formats, SVG rendering and the `rotdraw` command line for
//! combinatorial good drawings.

pub mod cli;
pub mod format;
pub mod render;

pub use cli::run;
