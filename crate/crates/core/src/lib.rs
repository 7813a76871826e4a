//! Exact computations with degenerate cyclotomic Hecke algebras, twisted tensor
//! space and higher-level Schur algebras.

pub mod cli;
pub mod diagram_tableaux;
pub mod exact_linear;
pub mod hecke_algebra;
pub mod rep_modules;
pub mod schur_algebra;
pub mod tensor_representation;
