//! Exact symbolic computation of double Grothendieck polynomials of the
//! classical types A, B, C, D.
//!
//! The crate builds the polynomials three independent ways — ordered products
//! of `h_i(x) = 1 + x·u_i` factors in the IdCoxeter algebra, compatible
//! sequence sums, and pipe-dream (extended excited-Young-diagram) state sums —
//! and verifies the structural theory connecting them: divided-difference
//! recurrences, GKM localization, Littlewood–Richardson expansion and adjoint
//! (boundary-class) polynomials.  All arithmetic is exact over `Z[β]` with
//! arbitrary-precision integers; series computations use exact rationals.

pub mod adjoint;
pub mod combinat;
pub mod divdiff;
pub mod error;
pub mod genfun;
pub mod hecke;
pub mod localization;
pub(crate) mod par;
pub mod poly;
pub mod symfun;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{LocPoly, Mono, Poly, TruncSeries, VarId};
pub use weyl::{GroupElt, SimpleRef, StrictPartition, WeylType};
