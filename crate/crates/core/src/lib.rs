pub mod algebra;
pub mod cli;
pub mod colimit;
pub mod error;
pub mod gf2;
pub mod golden;
pub mod gradings;
pub mod hfunc;
pub mod hybridge;
pub mod laurent;
pub mod parallel;
pub mod presentation;

pub use error::{Error, Result};
