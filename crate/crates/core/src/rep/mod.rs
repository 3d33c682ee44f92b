//! Weight multiplicities, tensor products and invariant dimensions.
//!
//! One Racah–Speiser engine serves types A, B and C. Littlewood–Richardson
//! tableaux are implemented separately and used to check it in type A.

mod freudenthal;
mod invariants;
mod lr;
mod tensor;

pub use freudenthal::{dominant_weights_below, weight_multiplicities, WeightMultiset};
pub use invariants::{
    invariant_dim, invariant_dim_A, invariant_dim_BC, pair_invariant_A, tensor_product_gl,
};
pub use lr::{lr_coefficient, lr_product};
pub use tensor::{clear_memo, tensor_decompose, DecompositionMultiset};
