//! Exact root-system, Chevalley-basis and symmetric-space computations for
//! compact quaternionic Kähler symmetric spaces.

pub mod catalog;
pub mod chevalley;
pub mod cli;
pub mod error;
pub mod g2_model;
pub mod linalg;
pub mod root_system;
pub mod scalar;
pub mod wolf;
