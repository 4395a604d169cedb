//! Feasibility analysis for distance-regular graph intersection arrays.
//!
//! Given a candidate parameter set {b_0,...,b_{d-1}; c_1,...,c_d}, this crate
//! computes the spectrum of the intersection matrix exactly, checks the
//! classical integrality and counting conditions, and then runs a chained
//! local-structure argument (Terwilliger eigenvalue bound, Brooks-type
//! coclique guarantee, Koolen-Park inequality) that can rule the array out
//! entirely. Every conclusion is recorded in an auditable proof trace.
//!
//! The `oracle` module works with concrete graphs instead of parameter sets,
//! so the same inequalities can be checked against real adjacency data.

pub mod array;
pub mod feasibility;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod spectral;

pub use array::{derive_parameters, DerivedParameters, IntersectionArray};
pub use feasibility::{analyze, run_nonexistence_chain, ArrayReport, Verdict};
