//! Searches for smooth Sasaki-Einstein families and `Y^{p,q}` with
//! quasi-regular cscS rays.

pub mod congruence;
pub mod extend;
pub mod family;
pub mod grid;
pub mod ypq;

pub use congruence::{congruence_certify, PrimeResidues, ResidueCertificate};
pub use extend::{se_extend, Candidate, SeedStructure, Verdict};
pub use family::{FamilyPolynomial, IntPoly};
pub use grid::{evaluate_pairs, grid_search, replay_ledger, GridSpec, GridSummary};
pub use ypq::{ypq_csc_search, YpqSolution};
