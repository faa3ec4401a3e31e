//! Linear codes over F_{2^s}: vectors, matrices, canonical codes and enumeration.

mod code;
mod enumerate;
mod matrix;
mod vector;

pub use code::{CodeFile, LinearCode, DEFAULT_CAP};
pub use matrix::Matrix;
pub use vector::Codeword;
