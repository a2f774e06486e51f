//! Oscillatory reconstructions of prime-power structure from the
//! critical-line zeros of Dirichlet L-functions.
//!
//! The explicit formula ties the distribution of prime powers to sums over
//! the nontrivial zeros 1/2 + i gamma of L(s, chi). This crate computes
//! those zeros numerically (an Euler-Maclaurin Hurwitz zeta feeding a
//! real-rotated Hardy function), forms the truncated interference sums
//!
//! ```text
//! S_chi(x) = -sum_gamma cos(gamma log x),
//! T_chi(x) = -sum_gamma sin(gamma log x),
//! ```
//!
//! and analyzes where their peaks land: prime powers sorted into congruence
//! classes mod q, with spike signs given by Re chi(p^k) and Im chi(p^k).
//! Summing the reconstructions of all characters mod q reproduces the
//! factorization of the Dedekind zeta function of the q-th cyclotomic field
//! as interference: constructive on primes p = 1 (mod q), destructive on
//! the other classes, with the ramified prime powers q^k carried by the
//! principal factor alone.

pub mod analysis;
pub mod characters;
pub mod cli;
pub mod lfunction;
pub mod reconstruction;

pub use characters::{CharacterId, DirichletCharacter, UnitValue, enumerate_characters};
pub use lfunction::{
    EvalParams, LfunctionError, ZeroList, ZeroSource, find_zeros, hardy_z, l_value,
    zero_count_estimate,
};
pub use reconstruction::{
    Convention, Grid, GridSpacing, Reconstruction, ReconstructionError, combine,
    dedekind_reconstruction, psi_model, reconstruct,
};
pub use analysis::{
    AnalysisError, DedekindReport, Peak, SeparationReport, dedekind_survivor_check, detect_peaks,
    psi_chi_oracle, separation_report, von_mangoldt,
};
