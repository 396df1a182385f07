pub mod error;
pub mod field;
pub mod lin;
pub mod linalg;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub mod hopf;
pub mod report;
pub mod yd;
pub mod ydpost;
pub mod examples;
pub mod rota;
pub mod brace;
pub mod format;
pub mod suite;
