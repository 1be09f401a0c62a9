//! Exact arithmetic: rationals, polynomials, rational functions, truncated series.

pub mod field;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod ratfunc;
pub mod sampler;
pub mod series;

pub use matrix::determinant;
pub use field::{frac, parse_rational, rat, Field, Ring};
pub use mpoly::MPoly;
pub use poly::UniPoly;
pub use ratfunc::RatFunc;
pub use sampler::{schwartz_zippel_bound, PointSampler, DEFAULT_BOUND};
pub use series::TruncSeries;
