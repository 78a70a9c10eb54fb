//! Addition-free ordinal notation systems and the orders around them.
//!
//! The crate is `no_std` (it needs `alloc`). It provides
//!
//! * unary collapsing terms ([`seq`]) with a linear comparator ([`linear`])
//!   and the gap partial order ([`gap`]),
//! * the binary system of [`ot`] with its linearization into gap terms,
//! * a generic syntactic Bachmann-Howard construction over coded dilators
//!   ([`dilator`], [`bh`]), the quasi-embedding lift ([`kruskal`]) and the
//!   binary tree example ([`btree`]),
//! * Cantor normal forms ([`cnf`]) and an explicit ordinal collapse used to
//!   compute order types ([`collapse`]).
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bh;
pub mod btree;
pub mod cnf;
pub mod collapse;
pub mod descriptor;
pub mod dilator;
pub mod enumerate;
pub mod error;
pub mod gap;
pub mod grammar;
pub mod kruskal;
pub mod linear;
pub mod order;
pub mod ot;
pub mod seq;

pub use error::TermError;
pub use ot::OtTerm;
pub use seq::{Family, Index, SeqTerm, System};
