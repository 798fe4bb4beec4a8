//! Exact computer algebra for operator-ordering pyramids.
//!
//! A *pyramid* is a triangular coefficient array `{a_{n,k}}` weighting the
//! basis words `q^k p^n q^{n-k}` of the Heisenberg-Weyl algebra
//! (generators `p`, `q` with `qp - pq = i`). Every such combination equals a
//! polynomial `P_n` in `z = (qp + pq)/2`, and the crate realizes that
//! correspondence exactly over the Gaussian rationals, in both directions,
//! together with:
//!
//! - [`exact`]: big rationals, Gaussian rationals, dense polynomials,
//!   truncated power series, Lagrange interpolation;
//! - [`comb`]: binomials, signed Stirling numbers, Euler numbers,
//!   Fibonacci/Lucas, Eulerian numbers of type A;
//! - [`weyl`]: the symbolic rewriting engine (`pq -> qp - i`), balanced-word
//!   reduction to polynomials in `z` by two independent routes, and the
//!   `RD - DR = 1` algebra representation;
//! - [`transforms`]: pyramid -> polynomial and polynomial -> pyramid maps,
//!   the `Q_{n,k}` basis, the Hankel inverse, structural predicates;
//! - [`hyperg`]: terminating hypergeometric sums and the identity suite
//!   (continuous Hahn / Bateman bridges, certified recurrences);
//! - [`families`]: named ordering families and classical polynomial families;
//! - [`ortho`]: orthogonality screening (determinant conditions, three-term
//!   recurrence, exact moment functionals);
//! - [`eulerian`]: the monomial pyramid and Eulerian numbers of type B.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod comb;
pub mod eulerian;
pub mod exact;
pub mod families;
pub mod formats;
pub mod hyperg;
pub mod ortho;
pub mod transforms;
pub mod weyl;

pub use exact::{BigRat, GaussRat, TruncSeries, ZPoly};
pub use transforms::{IntRow, PyramidRow};
