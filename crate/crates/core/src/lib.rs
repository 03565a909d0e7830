//! Exact weight distributions of two families of p-ary cyclic codes
//! defined by trace forms over F_{p^m}.
//!
//! The crate builds finite fields with deterministic moduli and primitive
//! elements ([`gf`]), realizes Tr(a x^(p^k+1)) as a quadratic form and
//! classifies its rank and sign class ([`quadform`]), aggregates the value
//! distribution of the associated character sums ([`spectrum`]), enumerates
//! codeword weights exactly by direct counting or an additive-character
//! transform ([`codes`]), and evaluates the closed-form weight
//! distributions the enumeration must reproduce ([`theory`]).
//!
//! Everything is exact integer arithmetic except the optional transform
//! path, which uses double-precision phases and asserts its rounding
//! residuals. The crate is no_std (with `alloc`); IO, serialization and
//! parallel sweeps live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
mod poly;
mod transform;

pub mod codes;
pub mod gf;
pub mod quadform;
pub mod spectrum;
pub mod theory;

pub use error::{Error, Result};
