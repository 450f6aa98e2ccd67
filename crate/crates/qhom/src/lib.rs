//! Symbolic mod-2 homology of free iterated loop spaces.
//!
//! The crate computes in the polynomial algebras `H_*(Omega^L Sigma^L X; Z/2)`
//! and `H_*(Q_0(X_+); Z/2)` on admissible Dyer-Lashof words, with the dual
//! Steenrod action given by Nishida relations and the Cartan formula. On top
//! of the calculator sit elimination pipelines for spherical classes
//! (mapping-cone models, Steenrod annihilation, primitivity, loop-bound
//! pull-backs) and an audit engine for 2-primary stable stems, Toda-bracket
//! tables, EHP height bounds and Adams-filtration degree bounds.
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! major capability end to end. The `qhom` binary exposes the same operations
//! as subcommands.

pub mod cli;
pub mod dyer_lashof;
pub mod f2poly;
pub mod loopspace;
pub mod mapping_cone;
pub mod spherical_search;
pub mod stems_audit;

/// Crate-wide error type. CLI exit codes are derived from the variant.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("degree {degree} exceeds the truncation cap {cap}")]
    Truncation { degree: u32, cap: u32 },
    #[error("{0}")]
    Unsupported(String),
    #[error("unknown fact: {0}")]
    UnknownFact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
