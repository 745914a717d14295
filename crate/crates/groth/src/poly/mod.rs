//! Sparse exact polynomial arithmetic over `Z[β]` in the indexed families
//! `a_k`, `b_k`, `x_k`, together with the localized ring whose denominators
//! are products of `(1+β·v)` and degree-truncated series with rational
//! coefficients.

mod loc;
mod mono;
#[allow(clippy::module_inception)]
mod poly;
mod series;
mod text;

pub use loc::LocPoly;
pub use mono::{Family, Mono, VarId};
pub use poly::Poly;
pub use series::TruncSeries;
pub use text::{LocPolyJson, PolyJson};
