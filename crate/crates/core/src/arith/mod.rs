//! Scalars, polynomials and rational functions over the rationals.

pub mod factor;
mod modp;
pub mod poly;
pub mod rat;
pub mod ratfunc;

pub use factor::{factor_poly, factor_ratfunc, FactoredPoly};
pub use poly::{Deg, PolyH};
pub use rat::Rat;
pub use ratfunc::RatFuncH;
