//! Exact integer, rational and polynomial arithmetic.

pub mod integer;
pub mod lattice;
pub mod modp;
pub mod poly;
pub mod sturm;

pub use integer::{factorize, gcd, int, is_probable_prime, lcm, FactorEffort, FactoredInteger, Integer};
pub use poly::{rat, rat_int, Polynomial, Rational};
pub use sturm::{isolate_roots, sturm_count, Bound, RootInterval, SturmSequence};
