//! Exact-arithmetic toolkit for based root data of simple and semisimple
//! types, the fundamental-parallelepiped (FPP) unitarity bound, a brute-force
//! checker for the infinitesimal-character splitting argument, and rank-2
//! region geometry rendered as deterministic SVG.
//!
//! Weights are stored in the fundamental-weight basis, so `coords[i]` is the
//! pairing with the i-th simple coroot. All arithmetic outside [`figure`] is
//! exact over the rationals.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod figure;
pub mod fpp;
pub mod infchar;
pub mod lemma;
mod linalg;
pub mod rational;
pub mod rootdata;
pub mod weights;

pub use error::{Error, Result};
pub use fpp::{DiagramInvolution, InductionCertificate, ParabolicType};
pub use infchar::InfinitesimalCharacter;
pub use lemma::{GridSpec, LemmaReport, LemmaStatus, SweepReport};
pub use rational::Rational;
pub use rootdata::{RootDatum, TypeLabel, Weight, WeylWord};
pub use weights::WeightSystem;
