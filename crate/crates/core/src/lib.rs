//! Seed polynomials over prime fields, the genus-4 hyperelliptic function
//! field `y^2 = h(x)` with its evaluation codes, structural verifiers for
//! transitive, quasi-transitive and cyclic codes, and asymptotic bound
//! calculators.

pub mod agcode;
pub mod bounds;
pub mod curve;
pub mod ff;
pub mod linalg;
pub mod poly;
pub mod seeds;
pub mod structure;

pub use ff::{is_prime, legendre_symbol, sqrt_mod, PrimeField};
pub use poly::{build_seed_poly, Poly, SeedTuple};
