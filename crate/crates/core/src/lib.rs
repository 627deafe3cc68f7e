//! Arbitrary-precision toolkit that regenerates, verifies, and audits the
//! cyclometric tables and constructions published by Adam Kochański in
//! 1685: the chain of two-sided rational bounds on pi built by the
//! originator recurrence, the examination table of defects and excesses at
//! diameter 10^25, the compass construction whose segment
//! IL = (1/3)*sqrt(120 - 18*sqrt(3)) approximates the semicircle, and the
//! bisection ratio 3217/1024.
//!
//! Everything is exact or rigorously enclosed. Rationals and fixed-point
//! decimals are unbounded; pi is produced as certified two-sided
//! enclosures from Machin's identity, with a second arctangent identity
//! kept aside as a cross-check; the compass construction lives in the
//! quadratic field Q(sqrt(3)) so its radical identity is checked
//! symbolically. Every printed constant of the source sits in a corpus
//! file, and [`examen::audit_corpus`] classifies each one as confirmed, a
//! convention ambiguity (truncated against rounded renderings, or a
//! deviation row computed by subtracting truncated rows), or a misprint.
//!
//! The modules follow the artifacts:
//!
//! - [`arith`] — unbounded rationals, fixed-point decimals, truncating
//!   expansion, integer and decimal square roots, digit grouping.
//! - [`oracle`] — pi enclosures at any precision, exact side comparisons,
//!   certified digit extraction.
//! - [`synthesis`] — the originator recurrence and the bound chain, the
//!   reduced forms, the curious ratio 9691760/3084983.
//! - [`examen`] — the examination table and the corpus audit.
//! - [`construction`] — the compass and bisection constructions, with
//!   exact coordinates and the year-bound verification.
//! - [`cf`] — continued fraction of pi, convergents, and bound
//!   classification.
//! - [`corpus`] — the audited corpus data layer.

#![forbid(unsafe_code)]

pub mod arith;
pub mod cf;
pub mod construction;
pub mod corpus;
pub mod examen;
pub mod oracle;
pub mod synthesis;
