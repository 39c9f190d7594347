//! Formal power series expansion of implicit functions `y(x)` with
//! `f(x, y) = 0`, computed from the Taylor coefficients `f[m,n]` of `f`.
//!
//! Coefficients are produced exactly, either as rationals or as Laurent
//! polynomials in the symbols `f[m,n]` (with `f[0,1]` invertible), by three
//! independent routes: the closed partial-Bell / Stirling-polynomial formula,
//! series composition with the compositional inverse, and order-by-order
//! residual solving.

pub mod algebra;
pub mod combinatorics;
pub mod series;
pub mod implicit;
pub mod frontend;
pub mod cli;
