//! Computational tools around quotients `Cⁿ/G` of powers of a curve.
//!
//! * [`perm`]: permutation groups (Schreier–Sims, solvability, transposition structure).
//! * [`classify`]: the general-type criterion `g > m + 1` and related advisories.
//! * [`cover`]: Riemann–Hurwitz bookkeeping.
//! * [`algebra`]: exact polynomial arithmetic, resultants and finite-field factoring.
//! * [`quartic`]: flexes, tangents and residual points of plane quartics.
//! * [`census`] and [`cli`]: fixture census and the command-line front end.

pub mod algebra;
pub mod census;
pub mod classify;
pub mod cli;
pub mod cover;
pub mod perm;
pub mod quartic;
