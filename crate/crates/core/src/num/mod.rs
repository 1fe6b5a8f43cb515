//! Exact arithmetic: rationals, cyclotomic fields and small prime fields.

mod cyclotomic;
pub(crate) mod modp;
mod poly;
mod rational;

pub use cyclotomic::{Cyclotomic, CyclotomicJson};
pub use poly::{cyclotomic_polynomial, euler_phi};
pub use rational::{rat, Rational, RationalJson};
