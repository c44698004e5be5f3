//! Exact-arithmetic chain-level string topology on DG open Frobenius algebras.
//!
//! The crate builds the normalized cocyclic cobar complex of a finite
//! dimensional DG open Frobenius algebra over the rationals, computes
//! Hochschild and cyclic homology in degree windows, realizes the
//! chain-level operators (loop product, coproduct, brackets, cobrackets
//! and their homotopies) and machine-checks the identity suites that
//! make the homology a Batalin-Vilkovisky / Gerstenhaber / gravity
//! (co)algebra.
//!
//! All arithmetic is exact; every identity is decided by rational linear
//! algebra, never by tolerance.

pub mod barcomplex;
pub mod cli;
pub mod conventions;
pub mod exactlin;
pub mod frobenius;
pub mod homology;
pub mod stringops;
pub mod verify;

pub use exactlin::Rat;
