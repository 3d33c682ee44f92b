//! Spaces of polynomials as points of the Grassmannian.

mod data;
mod dual;
mod operators;
mod space;

pub use data::{derive_stratum_data, expected_exponents, stratum_membership, EvaluatedStratumData, Point};
pub use dual::{
    associated_t, divided_wronskian, dual_space, reduced_wronskian, selfdual_check, shift_by_roots, squaring_map,
    SelfDuality,
};
pub use operators::{
    build_dx_factorized, dual_operator_identity_check, half_conjugated_operator, miura_scalar_operator, y_from_basis,
};
pub use space::{base_points, BasePoints, PolySpace};
