//! Separated pairs of a polynomial ideal.
//!
//! For an ideal `I` of `K[X,Y]` this crate computes generators of the
//! algebra of pairs `(f, g)` with `f` in `K[X]`, `g` in `K[Y]` and
//! `f - g` in `I`.

pub mod bivar;
pub mod enumerate;
pub mod field;
pub mod groebner;
pub mod intersect;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod principal;
pub mod zerodim;
