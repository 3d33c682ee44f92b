//! Exact rational arithmetic: polynomials, rational functions, Wronskians and
//! differential operators.

pub mod diffop;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod roots;
pub mod wronskian;

pub use diffop::DiffOp;
pub use poly::Poly;
pub use rat::{format_rat, parse_rat, Rat};
pub use ratfunc::RatFunc;
pub use roots::rational_roots;
pub use wronskian::wronskian;
