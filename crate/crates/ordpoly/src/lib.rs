//! Exact-arithmetic toolkit for the five order polytopes: the linear
//! ordering, strict weak order, semiorder, interval order and partial order
//! polytopes on `{1..n}`.
//!
//! The crate enumerates each order class, decides validity and
//! facet-defining status of linear inequalities over the corresponding
//! 0/1 polytopes, classifies the primary (coefficients in `{-1,0,1}`)
//! facet-defining inequalities of the partial order, interval order and
//! semiorder polytopes by combinatorial conditions alone, and solves
//! median-order problems at desk scale by exhaustive scan. Every theorem
//! is cross-checkable against brute-force vertex oracles.
//!
//! See the `book/` guide for a narrative tour. The chapters double as
//! doctests, so every snippet in the guide compiles against this crate.

pub mod cli;
pub mod crosscheck;
pub mod exactlin;
pub mod median;
mod parse;
pub mod polytope;
pub mod primaryineq;
pub mod relations;

mod dd;

pub use exactlin::Rational;
pub use polytope::{FaceReport, GeneralInequality, VertexSet};
pub use primaryineq::PrimaryInequality;
pub use relations::{Arc, OrderClass, Relation};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("relation is not a partial order")]
    NotPartialOrder,

    #[error("class {class} is not enumerable at n={n} (supported range 2..={max})")]
    UnsupportedSize { class: OrderClass, n: usize, max: usize },

    #[error("ground sets differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("empty point set has no affine hull")]
    EmptyPointSet,

    #[error("facet enumeration refused: dim {dim} with {vertices} vertices exceeds the size guard (dim <= {max_dim}, vertices <= {max_vertices}); pass the override to proceed anyway")]
    SizeGuard { dim: usize, vertices: usize, max_dim: usize, max_vertices: usize },

    #[error("parse error at column {col}: {msg}")]
    Parse { msg: String, col: usize },

    #[error("invalid inequality: {0}")]
    InvalidInequality(String),

    #[error("profile must contain at least one relation")]
    EmptyProfile,

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(doctest)]
mod book {
    //! The mdbook chapters under `book/src` are compiled as doctests here,
    //! keeping the guide and the library in sync.

    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Relations, "../../../book/src/relations.md");
    chapter!(Polytopes, "../../../book/src/polytopes.md");
    chapter!(Faces, "../../../book/src/faces.md");
    chapter!(Primary, "../../../book/src/primary.md");
    chapter!(Classification, "../../../book/src/classification.md");
    chapter!(Families, "../../../book/src/families.md");
    chapter!(FacetEnumeration, "../../../book/src/facet-enumeration.md");
    chapter!(Median, "../../../book/src/median.md");
}
