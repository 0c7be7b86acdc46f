//! Exact dimensions and Hilbert polynomials of weighted graph algebras.
//!
//! A loopless multigraph with one nonzero weight per edge defines a
//! commutative algebra generated by per-vertex elements; its filtered
//! dimensions count spanning forests, spanning trees, or strongly
//! connected structures depending on the quotient taken. This crate
//! computes those dimensions exactly, three independent ways, and
//! cross-checks them against each other:
//!
//! * a filtration engine over tilde coordinates, where multiplication
//!   is coordinatewise ([`algebra`], [`filtration`]);
//! * censuses of distinct orientation score vectors ([`census`]);
//! * Tutte-polynomial specializations ([`tutte`]).
//!
//! All arithmetic is exact: arbitrary-precision rationals by default,
//! or a prime field chosen through the [`Scalar`] type parameter for a
//! fast pre-pass. There is no floating point anywhere.
//!
//! ```
//! use graphalg::{filtration_hilbert, AlgebraContext, Graph, Mode, Rational, WeightAssignment};
//!
//! let g = Graph::complete(4);
//! let weights = WeightAssignment::unit(6);
//! let ctx = AlgebraContext::<Rational>::new(&g, &weights, ()).unwrap();
//! let result = filtration_hilbert(&ctx, Mode::External).unwrap();
//! assert_eq!(result.hilbert.row(), "1 3 6 10 11 6 1");
//! assert_eq!(result.total_dim, 38); // spanning forests of K_4
//! ```

pub mod algebra;
pub mod census;
pub mod filtration;
pub mod graph;
pub mod rank;
pub mod scalar;
pub mod tutte;

pub use algebra::{
    moebius_transform, project_with, zeta_transform, AlgebraContext, Mode, TildeVector,
};
pub use census::{
    indegree_forest_check, partition_product_oracle, score_census, CensusMode, ScoreCensus,
};
pub use filtration::{
    filtration_hilbert, filtration_hilbert_monomial, min_annihilating_polynomial,
    sample_generic_weights, total_dimension, verify_hecke_relations, Annihilator,
    FiltrationResult, HeckeReport, SampledWeights,
};
pub use graph::{
    parse_graph, CutData, Edge, EdgePartition, Graph, GraphFile, GraphFileError, Orientation,
    WeightAssignment, FOREST_ORACLE_CAP, MAX_EDGES,
};
pub use scalar::{
    is_prime_u64, parse_rational, Fp, FpConfig, Rational, Scalar, ScalarError, DEFAULT_PRIME,
};
pub use tutte::{
    hilbert_from_tutte, tutte_polynomial, tutte_rank_nullity_oracle, BivariatePolynomial,
    HilbertPolynomial, HilbertVariant,
};

/// Algebra context over exact rationals, the default ground field.
pub type RationalContext = AlgebraContext<Rational>;

/// Algebra context over a prime field, for fast pre-pass computation.
pub type PrimeContext = AlgebraContext<Fp>;

/// Unified error type for the whole crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Graph file rejected, with the offending line.
    Parse(GraphFileError),
    /// A rational value has no image in the requested field.
    Scalar(ScalarError),
    /// Operation requires a connected graph.
    Disconnected,
    /// A weight is zero where the coordinate model needs it nonzero.
    ZeroWeight { edge: usize },
    /// Input exceeds an enumeration cap.
    CapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },
    /// Edge partition malformed.
    BadPartition(String),
    /// Other invalid argument.
    BadInput(String),
    /// Two independent weight samples disagreed at every retry range.
    GenericityFailed { dim_a: usize, dim_b: usize },
    /// Invariant violation: a state the mathematics rules out.
    Internal(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Parse(e) => write!(f, "{e}"),
            Error::Scalar(e) => write!(f, "{e}"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::ZeroWeight { edge } => {
                write!(f, "edge {} has weight zero", edge + 1)
            }
            Error::CapExceeded { what, needed, cap } => {
                write!(f, "{what} is {needed}, above the cap of {cap}")
            }
            Error::BadPartition(msg) => write!(f, "bad edge partition: {msg}"),
            Error::BadInput(msg) => write!(f, "{msg}"),
            Error::GenericityFailed { dim_a, dim_b } => write!(
                f,
                "weight sampling never stabilized: censuses {dim_a} and {dim_b} disagree"
            ),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<GraphFileError> for Error {
    fn from(e: GraphFileError) -> Self {
        Error::Parse(e)
    }
}

impl From<ScalarError> for Error {
    fn from(e: ScalarError) -> Self {
        Error::Scalar(e)
    }
}
