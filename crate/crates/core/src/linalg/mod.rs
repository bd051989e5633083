//! Dense exact linear algebra.

pub mod eigen;
pub mod matrix;
pub mod roots;

pub use eigen::{eigenvalues, joint_weight_spaces, WeightSpace};
pub use matrix::Matrix;
pub use roots::roots_in_ratfunc;
