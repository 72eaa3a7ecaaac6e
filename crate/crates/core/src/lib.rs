//! Exact polynomial-matrix toolkit: decides whether multivariate polynomial
//! matrices with structured determinants are equivalent to their Smith
//! forms, and constructs unimodular witnesses when they are.

pub mod criteria;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod polymat;
pub mod polyring;
pub mod reduce;

pub use error::{Error, Result};
pub use polymat::PolyMatrix;
pub use polyring::{Coefficient, Monomial, MonomialOrder, Polynomial, VarSet};
