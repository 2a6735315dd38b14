//! Repeated-root cyclic codes over GF(2^s), built from BCH components.
//!
//! The toolkit constructs cyclic codes of even length 2n over fields of
//! characteristic 2 by combining two nested BCH codes of odd length n,
//! computes or bounds their true minimum distances with exact search engines,
//! checks parameter claims against the classical sphere-packing, even-distance,
//! Singleton and Griesmer bounds, and reproduces a 28-row catalog of codes
//! with optimal or best-known parameters over GF(2), GF(4) and GF(8).
//!
//! Modules:
//! - [`gf`]: finite fields GF(2^s) and extensions, log/antilog arithmetic.
//! - [`poly`]: dense polynomials over a field, gcd/lcm, squarefreeness.
//! - [`cyclo`]: cyclotomic cosets, coset-leader statistics, minimal polynomials.
//! - [`code`]: the cyclic-code object, BCH construction, matrices, encoding.
//! - [`dist`]: minimum-distance engines (exhaustive and low-weight search).
//! - [`bounds`]: classical bounds and distance-optimality classification.
//! - [`vanlint`]: the length-doubling combination and its Plotkin-sum oracle.
//! - [`families`]: one constructor per parameterized code family, plus a verifier.
//! - [`catalog`]: the results table and CSV/JSON/markdown emitters.

pub mod bounds;
pub mod catalog;
pub mod code;
pub mod cyclo;
pub mod dist;
pub mod error;
pub mod families;
pub mod gf;
pub mod poly;
pub mod vanlint;

pub use error::{Error, Result};
