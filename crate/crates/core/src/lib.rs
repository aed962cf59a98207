pub mod cli;
pub mod crgeom;
pub mod doc;
pub mod error;
pub mod exactfield;
pub mod fixtures;
pub mod hodge;
pub mod linalg;
pub mod metric;
pub mod polarization;
pub mod random;
pub mod tori;

pub use error::{Error, Result};
