//! Representation theory of thread quivers over exact fields.
//!
//! A thread quiver is a finite quiver whose arrows each carry a totally
//! ordered set. Pointwise finite-dimensional representations of its path
//! category are normalized here into finite data — a valid partition with
//! a cell-constant core plus an explicit noise list — and decomposed into
//! indecomposables by sampling a finite bound quiver algebra, running
//! Krull–Remak–Schmidt there, and inducing back. Interval projectives,
//! Hom/Ext, and representation-type classification are built on the same
//! sampled algebras.
//!
//! The `threadrep` CLI in this workspace exposes the operations over a
//! JSON project format; see the book under `book/` for a guided tour.

pub mod algebra;
pub mod classify;
pub mod decomp;
pub mod homalg;
pub mod ideal;
pub mod matrix;
pub mod order;
pub mod partition;
pub mod pathcat;
pub mod polyfp;
pub mod rep;
pub mod scalar;
pub mod schema;
pub mod transport;

mod book;

use thiserror::Error as ThisError;

/// Crate-wide error type. Variant names are part of the CLI contract:
/// precondition failures exit with code 2 and print the variant name.
#[derive(Debug, Clone, PartialEq, ThisError)]
pub enum Error {
    #[error("FieldMismatch: matrix entries live in different fields")]
    FieldMismatch,
    #[error("SmallCharacteristic: radical computation needs characteristic 0 or > dim")]
    SmallCharacteristic,
    #[error("ExtendField({0}): decomposition requires the degree-{0} extension field")]
    ExtendField(usize),
    #[error("EndpointMismatch: morphisms are not composable or not evaluable")]
    EndpointMismatch,
    #[error("NotHomFinite: a Hom space is infinite-dimensional (cycle survives the ideal)")]
    NotHomFinite,
    #[error("CellMismatch: morphism endpoints do not lie in the expected cells")]
    CellMismatch,
    #[error("MalformedPartition: cells overlap, leave gaps, or are empty")]
    MalformedPartition,
    #[error("InvalidDimVec: dimension vector does not induce a valid partition")]
    InvalidDimVec,
    #[error("IncompatiblePartition: sample does not refine the representation's partition")]
    IncompatiblePartition,
    #[error("RelationViolation: representation does not annihilate the induced relations")]
    RelationViolation,
    #[error("NotLeftBounded: a cycle survives the ideal; projectives are not pointwise finite")]
    NotLeftBounded,
    #[error("ResolutionTooLong: projective resolution exceeded the requested length")]
    ResolutionTooLong,
    #[error("NotBiserial: a vertex has more than two incoming or outgoing arrows")]
    NotBiserial,
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable name used by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::FieldMismatch => "FieldMismatch",
            Error::SmallCharacteristic => "SmallCharacteristic",
            Error::ExtendField(_) => "ExtendField",
            Error::EndpointMismatch => "EndpointMismatch",
            Error::NotHomFinite => "NotHomFinite",
            Error::CellMismatch => "CellMismatch",
            Error::MalformedPartition => "MalformedPartition",
            Error::InvalidDimVec => "InvalidDimVec",
            Error::IncompatiblePartition => "IncompatiblePartition",
            Error::RelationViolation => "RelationViolation",
            Error::NotLeftBounded => "NotLeftBounded",
            Error::ResolutionTooLong => "ResolutionTooLong",
            Error::NotBiserial => "NotBiserial",
            Error::Parse(_) => "Parse",
        }
    }
}
