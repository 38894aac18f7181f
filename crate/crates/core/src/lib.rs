//! Exact arithmetic for elliptic-curve families over Q(T1,...,Tn):
//! specialization of curves and points, canonical and naive heights over Q,
//! minimal discriminants, k-free and power-free sieves with their Euler
//! products, and height-quotient averages over boxes of integer or
//! rational parameters.

pub mod error;
pub mod mpoly;

pub mod family;

pub mod ecq;

pub mod sieve;

pub mod average;

pub mod io;

pub use error::{Error, Result};
