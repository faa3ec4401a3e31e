pub mod codelin;
pub mod constructions;
pub mod csst;
pub mod error;
pub mod gf2e;
pub mod qsim;
pub mod random;

pub use codelin::{Codeword, LinearCode, Matrix, DEFAULT_CAP};
pub use csst::CssPair;
pub use error::{Error, Result};
pub use gf2e::{FieldElement, FieldSpec};
pub use qsim::{Amplitude, LogicalOrder};

pub type StateVector64 = qsim::StateVector<f64>;
pub type StateVector32 = qsim::StateVector<f32>;
pub type CodeSpace64 = qsim::CodeSpace<f64>;
pub type CodeSpace32 = qsim::CodeSpace<f32>;
