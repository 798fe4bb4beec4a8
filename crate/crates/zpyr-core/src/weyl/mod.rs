//! The symbolic Heisenberg-Weyl engine.
//!
//! Generators `p`, `q` satisfy `qp - pq = i`. The module parses operator
//! expressions, computes normal forms (`q`'s left of `p`'s) by explicit
//! term rewriting, and reduces balanced elements to polynomials in
//! `z = (qp + pq)/2` along two independent routes:
//!
//! - [`reduce_balanced`]: rewrite to normal form, then eliminate the
//!   diagonal monomials `q^m p^m` through engine-derived relations;
//! - [`reduce_via_interpolation`]: act on monomials `x^m` in the
//!   realization `p = x`, `q = i d/dx` and interpolate.
//!
//! Agreement of the two routes is the crate's primary internal oracle.
//!
//! ```
//! use zpyr_core::weyl::{parse_expr, reduce_balanced, reduce_via_interpolation};
//!
//! let e = parse_expr("q p^2 q").unwrap();
//! let p = reduce_balanced(&e).unwrap();
//! assert_eq!(p.to_string(), "z^2 + 1/4");
//! assert_eq!(p, reduce_via_interpolation(&e).unwrap());
//! ```

pub mod a1;
mod expr;
mod normal;
mod parse;
mod word;

pub use expr::WeylExpr;
pub use normal::{
    hermitian_palindrome_scan, is_hermitian, normal_order, normal_order_with, reduce_balanced,
    reduce_via_interpolation, NormalForm, Strategy,
};
pub use parse::parse_expr;
pub use word::{Letter, Word};

/// Errors from parsing or reducing operator expressions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("word `{0}` is not balanced")]
    Unbalanced(String),
}
