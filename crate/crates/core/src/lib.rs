//! Exact minimal distances between disjoint lattice polytopes in `[0,k]^d`.
//!
//! The crate computes ε(d,k), the smallest positive distance between two
//! disjoint lattice polytopes of the cube `[0,k]^d`, exactly for small `d` and
//! `k`, and checks the polynomial certificates showing that for `d = 3` and
//! every `k ≥ 6`
//!
//! ```text
//! ε(3,k)^2 = 1 / (2(2k^2 - 4k + 5)(2k^2 - 2k + 1)).
//! ```
//!
//! All arithmetic is exact; distances are kept squared so every quantity is
//! rational.
//!
//! Layers, bottom up:
//! - [`poly`]: integer polynomials, Sturm root isolation, positivity proofs.
//! - [`geometry`]: squared distances between points, segments and triangles.
//! - [`model`]: the nine-integer encoding of a simplex pair and `f`, `g`, `h`.
//! - [`symmetry`]: cube symmetries and canonical keys of simplex pairs.
//! - [`certify`]: candidate sets and the certificate pipeline.
//! - [`enumerate`]: brute-force ε(d,k) with kissing witnesses.
//! - [`report`]: the structured text output format.
//! - [`cli`]: the `kissing` command-line front end.

pub mod certificate;
pub mod certify;
pub mod cli;
pub mod enumerate;
pub mod geometry;
pub mod model;
pub mod poly;
pub mod report;
pub mod symmetry;

pub use certificate::{Certificate, Verdict, Witness};
pub use enumerate::{eps_bruteforce, EnumOptions, EpsResult, PairClass};
pub use geometry::{LatticePoint, LatticeSimplex, SqDistance};
pub use model::XPoint;
pub use poly::IntPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
