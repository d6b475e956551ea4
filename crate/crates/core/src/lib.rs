//! Exact hook-content polynomials for plethysms `S_λ(S_δ(C²))` and decision
//! procedures for their SL(2, C) and GL(2, C) isomorphism.
//!
//! Everything here is pure computation over `alloc`; IO, JSON and the
//! command-line front end live in the `plethykit` crate.
#![no_std]

extern crate alloc;

pub mod error;
pub mod hookcontent;
pub mod oracle;
pub mod partition;
pub mod plethysm;
pub mod qpoly;
pub mod search;
pub mod staircase;
pub mod twist;

pub use error::{Error, Result};
pub use partition::{Cell, Partition};
pub use plethysm::{PlethysmInstance, PolySource, SLInstance};
pub use qpoly::QPolynomial;
pub use staircase::StaircaseDescriptor;
pub use twist::TwistSolution;
