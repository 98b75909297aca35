pub mod ambient;
pub mod amitsur;
pub mod equiv;
pub mod error;
pub mod field;
pub mod gb;
pub mod linalg;
pub mod monoid;
pub mod poly;
pub mod quotient;
pub mod tensor;
pub mod torus;
pub mod zlin;

pub use error::{Error, Result};
pub use field::{Coef, Field};
