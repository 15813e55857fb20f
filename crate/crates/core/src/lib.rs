//! Modular group algebras of finite groups: the center, its Jacobson radical
//! and socle, the Reynolds ideal, and the group-theoretic criteria deciding
//! when the socle of the center is an ideal.

pub mod algebra;
pub mod constructors;
pub mod error;
pub mod fp;
pub mod group;
pub mod verifier;

pub use error::{Error, Result};
