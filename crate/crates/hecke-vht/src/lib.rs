//! Hecke insertion, vacillating Hecke tableaux, and linked partitions.
//!
//! The centerpiece is a bijection between vacillating Hecke tableaux of
//! half-length `n` (sequences of 2n+1 Young diagrams, some with a marked
//! corner, that start and end empty and obey rook-strip growth rules) and
//! linked partitions of `{1, ..., n}`. Under it the maximal number of rows
//! and columns appearing in a sequence become the nesting and crossing
//! numbers of the arc diagram, which makes the joint distribution of
//! crossings and nestings symmetric, even after fixing both endpoint sets.
//!
//! Modules, bottom up:
//!
//! * [`shape`]: partitions, Young diagram cells, rook strips, marked
//!   diagrams;
//! * [`tableau`]: increasing tableaux and their marked variant;
//! * [`hecke`]: Hecke insertion, its inverse, and insertion tableaux of
//!   words;
//! * [`linked`]: linked partitions as arc sets or block families, with
//!   crossing/nesting statistics and a brute-force oracle;
//! * [`vacillating`]: the sequences themselves, the bijection [`phi`] with
//!   its inverse and trace, the conjugation involution [`psi`], and an
//!   independent enumerator;
//! * [`stats`]: joint distributions and [`verify_suite`], which re-derives
//!   every structural claim at a given size;
//! * [`text`]: canonical text and JSON forms for all of the above;
//! * [`cli`]: the subcommand interface used by the `hecke-vht` binary.
//!
//! ```
//! use hecke_vht::{phi, psi, VacillatingHeckeTableau};
//!
//! let v: VacillatingHeckeTableau =
//!     "-;-;1@1,1;1;2,1@2,1;2,1;2,1;1,1;1,1@2,1;1,1;1,1;1;1;-;-".parse().unwrap();
//! let p = phi(&v);
//! assert_eq!(p.to_string(), "n=7; 1-2,1-3,1-5,1-6,2-4,2-7");
//! assert_eq!(v.extrema(), (2, 2));
//! assert_eq!(p.crossing_nesting(), (2, 2));
//! assert_eq!(psi(&psi(&p)), p);
//! ```

pub mod cli;
pub mod error;
pub mod hecke;
pub mod linked;
pub mod shape;
pub mod stats;
pub mod tableau;
pub mod text;
pub mod vacillating;

pub use error::{Error, Result};
pub use hecke::{hecke_insert, hecke_reverse_insert, insertion_tableau, longest_monotone, Word};
pub use linked::{crossing_nesting_oracle, enumerate_linked, Arc, BlockPartition, LinkedPartition};
pub use shape::{Cell, HeckeDiagram, Partition};
pub use stats::{joint_distribution, verify_suite, JointDistribution, VerificationReport};
pub use tableau::{HeckeTableau, IncreasingTableau};
pub use text::Document;
pub use vacillating::{
    enumerate_vhts, phi, phi_inverse, phi_with_trace, psi, word_trace, VacillatingHeckeTableau,
};
