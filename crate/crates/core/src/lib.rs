pub mod algebra;
pub mod case1;
pub mod case2;
pub mod case3;
pub mod closedform;
pub mod driver;
pub mod error;
pub mod normalize;
pub mod omega;
pub mod series;

pub use algebra::{Polynomial, Rational, RationalFunction, SurdNumber};
pub use error::{Error, Result};
pub use normalize::{CaseConditions, NormalForm, OdeInput, PoleAnalysis};
pub use omega::{Omega, OmegaCandidate, Provenance};
pub use closedform::{ClosedForm, LogSum, SecondSolution};
pub use driver::{analyze, solve, SolveReport, SolveStatus, SolverConfig};
