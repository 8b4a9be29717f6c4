//! Arithmetic of quadratic forms and curves over the binary field.
//!
//! The crate provides the machinery needed to certify the maximum number of
//! rational points on curves over F_2 of genus at most 5 with fixed gonality:
//!
//! * [`binfield`] — arithmetic in F_{2^k} for k ≤ 8 with fixed moduli;
//! * [`bitlinalg`] — dense linear algebra over F_2 in dimension ≤ 8;
//! * [`quadform`] — quadratic forms in ≤ 5 variables: anatomy, point counts,
//!   the type I–IV classification, and constructive normal forms;
//! * [`orthgroup`] — orthogonal groups O(Q) by naive search and by the
//!   transitivity-accelerated algorithm, plus orbit machinery;
//! * [`groebner`] — sparse polynomials over F_2 and a Buchberger engine with
//!   dimension, Hilbert-function, and smooth-curve checks;
//! * [`curvekit`] — point counting over F_{2^k}, curve families, and
//!   gonality certificates for genus 3, 4, 5;
//! * [`census`] — the exhaustive scan over pencils of quadrics that lists
//!   every genus-5 curve of gonality at least 5.
//!
//! The crate is `no_std` (requires `alloc`); all IO, parallel orchestration,
//! and file formats live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod binfield;
pub mod bitlinalg;
pub mod census;
pub mod curvekit;
pub mod groebner;
pub mod orthgroup;
pub mod quadform;

pub use binfield::{FieldDesc, FieldElem};
pub use bitlinalg::{BinMatrix, BinVector};
pub use quadform::{FormType, QuadraticForm, TypeTable};
