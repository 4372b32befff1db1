//! Exact symbolic computations for the quantum exterior algebra of the full
//! quantum flag manifold of type A2.

pub mod flagext;
pub mod geometry;
pub mod linalg;
pub mod ncpoly;
pub mod qpair;
pub mod report;
pub mod rootdata;
pub mod scalar;
pub mod suites;

pub use linalg::{Echelon, LinalgError, Matrix, SparseVec};
pub use ncpoly::{Alphabet, Ambiguity, NCPolynomial, NcError, ReductionSystem, RewriteRule, Word};
pub use report::{Check, VerificationReport};
pub use scalar::{Coefficient, LaurentPoly, ScalarError, Symbol};
pub use qpair::{CotangentVector, FunctionalId, GeneratorWord, QpairError, TensorSquare};
pub use rootdata::{Letter, Root, Weight};
pub use flagext::{ExteriorAlgebra, ExteriorElement, FlagError};
pub use geometry::{CoinvariantForm, ConnectionDims, Foacs, KahlerCube};
pub use suites::Suite;
