//! Exact and numerical *-moments of DT operators.
//!
//! A DT(μ,c) element is the limit in *-moments of `D_n + c·T_n`, where `D_n`
//! is diagonal with i.i.d. entries drawn from a planar measure μ and `T_n` is
//! a strictly upper triangular Gaussian random matrix. This crate computes
//! those moments exactly through non-crossing pairings weighted by
//! linear-extension counts, checks the quasi-nilpotent case against an
//! independent recursion, evaluates the spectral law of `T*T`, and
//! cross-validates everything with seeded random-matrix simulation.
//!
//! Module map:
//!
//! * [`ncpair`]: compatible non-crossing pairings and their quotient trees
//! * [`linext`]: linear-extension counts of oriented trees
//! * [`measures`]: mixed moments `M_μ(r,s)` of the supported base measures
//! * [`moments`]: the moment engine for T-words, DT-words and Z-words
//! * [`quasinil`]: the recursion for `τ((T*)^{k₁}T^{ℓ₁}⋯)` and related closed forms
//! * [`transforms`]: exact power series, free cumulants and R-transforms
//! * [`spectral`]: the density of `T*T` on `(0, e)`
//! * [`rmt`]: random matrix samplers and Monte Carlo estimators
//! * [`cli`]: the `dtmoment` command line front end

pub mod cli;
pub mod error;
pub mod linext;
pub mod measures;
pub mod moments;
pub mod ncpair;
pub mod quasinil;
pub mod rmt;
pub mod spectral;
pub mod transforms;
pub mod value;

pub use error::{Error, Result};
pub use value::{Backend, MomentValue};
