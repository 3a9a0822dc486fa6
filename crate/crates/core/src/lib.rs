//! Exact invariants of two-bridge knots given in Conway notation.
//!
//! A Conway notation `[b_1, ..., b_k]` is turned into a plat-closed braid on
//! four strands, its planar diagram is checkerboard colored, and the
//! signature is read off the Goeritz matrix. Independently, a small
//! automaton counts reduced generators of a fork diagram and returns the
//! grading they concentrate in. The `invariants` module ties the two
//! together and cross-checks them against closed forms.

pub mod braidkit;
pub mod cli;
pub mod diagram;
pub mod forkengine;
pub mod goeritz;
pub mod invariants;
