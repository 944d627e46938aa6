//! Exact-arithmetic toolkit for measuring, at desk scale, how often the
//! characteristic polynomial of a bounded integer matrix fails to have the
//! full symmetric group as its Galois group.
//!
//! The crate is organized around the pipeline of the experiments:
//!
//! * [`exactalg`] — arbitrary-precision matrices and polynomials:
//!   characteristic polynomials, resultants, discriminants, factorization
//!   over `F_p` and over `Z`, integer roots, polynomial index mod p.
//! * [`galois`] — Galois group classification: exact resolvent methods for
//!   degrees 2–5 and a sound certified-`S_n` test for general degree.
//! * [`census`] — the counting engine over boxes of integer matrices,
//!   exhaustive or sampled, with checkpoint/resume and power-law fits.
//! * [`fpcensus`] — exhaustive statistics over `Mat_n(F_p)`: fiber counts,
//!   index tails, Gaussian binomials, and brute-force Fourier analysis of
//!   subspace-restriction selectors.
//! * [`latticelab`] — invariant sublattices of `Z^n`: saturation, LLL
//!   reduction, pinch points, and restriction matrices.
//! * [`ddsieve`] — the double discriminant of a matrix and its divisibility
//!   certificates.
//! * [`cli`] — experiment configuration, dispatch, persistence, reports.

pub mod census;
pub mod cli;
pub mod ddsieve;
pub mod exactalg;
pub mod fpcensus;
pub mod galois;
pub mod latticelab;
