//! Exact computations with finite-dimensional Hopf algebras, entwining
//! structures, double quantum groups and their categories of entwined modules.
//!
//! Everything is expressed by structure constants over the rationals. Tensor
//! products of basis vectors `e_i ⊗ f_j` are indexed `i * dim(F) + j`
//! (left factor major), and column `j` of a matrix is the image of basis
//! vector `j`.

pub mod corpus;
pub mod emodcat;
pub mod entwining;
pub mod exactla;
pub mod hopfcore;
pub mod pivribbon;
pub mod report;
pub mod smash;

pub use emodcat::{DualSide, DualityData, EntwinedModule, ModuleMorphism};
pub use entwining::{DoubleQuantumGroup, EntwiningMap, HomCA, MonoidalEntwiningDatum};
pub use exactla::{AffineSolution, Matrix, Rat, Tensor, Vector};
pub use hopfcore::{
    AlgebraData, BilinearForm, CoalgebraData, DualTwist, Element, Functional, HopfAlgebraData,
};
pub use pivribbon::{FinderResult, FinderStatus, MorphismCandidate, MorphismKind};
pub use report::{AxiomItem, AxiomReport, Witness};
pub use smash::{DistributiveLaw, LawKind, SmashModule};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("verification failed: {0}")]
    NotVerified(String),
}
