//! Reduced Groebner bases and standard monomials for vanishing ideals of
//! finite point sets over prime fields F_p.
//!
//! Two algorithms compute the same canonical answer: a classic
//! point-by-monomial construction ([`bma::buchberger_moller`]) and a
//! variable-by-variable construction ([`essbm::essbm`]) that stays fast
//! when the points are few and the variables are many. A verification
//! suite ([`verify`]) checks any result against the contracts both
//! algorithms must satisfy.
//!
//! ```
//! use pointgb::essbm::{essbm, Variety};
//! use pointgb::field::PrimeField;
//! use pointgb::order::TermOrder;
//!
//! let field = PrimeField::new(3).unwrap();
//! let v = Variety::from_values(field, 2, &[vec![0, 0], vec![1, 1]]).unwrap();
//! let result = essbm(&v, &TermOrder::lex(2)).unwrap();
//! let basis: Vec<String> = result.full_basis().iter().map(ToString::to_string).collect();
//! assert_eq!(basis, ["x2^2 + 2*x2", "x1 + 2*x2"]);
//! ```

pub mod bma;
pub mod cli;
pub mod error;
pub mod essbm;
pub mod field;
pub mod order;
pub mod parallel;
pub mod poly;
pub mod random;
pub mod verify;

pub use error::Error;
