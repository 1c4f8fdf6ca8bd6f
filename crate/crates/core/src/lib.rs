//! # nfh-core
//!
//! Nondeterministic finite hyperautomata (NFH) over finite words.
//!
//! An NFH runs a quantifier prefix `Q1 x1 ... Qk xk` over the words of a
//! *hyperword* (a finite set of words) and checks every resulting assignment
//! with an ordinary NFA over k-tuple letters. Tuples of words are encoded as
//! one word over tuples by zipping them, padding the words that ended with
//! [`Symbol::PAD`].
//!
//! The crate is `no_std` (it needs `alloc`) and purely functional: every
//! operation takes values and returns new values.
//!
//! * [`zip`]: tuple letters, zip/unzip, legality, sequences, lifting.
//! * [`fa`]: the classical NFA engine the hyperautomata are built on.
//! * [`hfa`]: the [`Nfh`] type, acceptance, Boolean closure and the decision
//!   procedures (nonemptiness per fragment, regular membership, containment).
//! * [`hre`]: hyperregular expressions, their parser, compiler and a library
//!   of information-flow policy templates.
//! * [`canon`]: sequence-/permutation-complete canonical forms.
//! * [`learn`]: L*-style learners for the alternation-free fragments and an
//!   automated teacher.
//!
//! ```
//! use nfh_core::hre;
//! use nfh_core::hfa::{member, Hyperword};
//! use nfh_core::Sigma;
//!
//! let sigma = Sigma::new(["a", "b"]).unwrap();
//! let ast = hre::parse("forall x1. forall x2. ([a,a]|[b,b])*([#,b]*|[b,#]*)").unwrap();
//! let nfh = hre::compile(&ast, &sigma).unwrap();
//! let agree = Hyperword::parse_words(&sigma, ["ab", "abb"]).unwrap();
//! let differ = Hyperword::parse_words(&sigma, ["aab", "abb"]).unwrap();
//! assert!(member(&nfh, &agree).unwrap());
//! assert!(!member(&nfh, &differ).unwrap());
//! ```

#![no_std]

extern crate alloc;

pub mod canon;
mod error;
pub mod fa;
pub mod hfa;
pub mod hre;
pub mod learn;
mod limits;
mod symbol;
pub mod zip;

pub use error::{Error, Result};
pub use hfa::{Fragment, Hyperword, Nfh, Quantifier};
pub use limits::Limits;
pub use symbol::{Sigma, Symbol, Word};
