//! Representation theory of acyclic Nakayama algebras.
//!
//! An algebra is given by its Kupisch series `(d_1, ..., d_m)`, and each
//! indecomposable module by a coordinate `M(i, j)` of the AR quiver: `j` is
//! the length and `i + j` the co-diagonal. On top of that the crate offers
//!
//! * AR translations, syzygies, higher translates and global dimension ([`ar`]),
//! * abutments, foundations and footings ([`abutments`]),
//! * gluing of algebras along abutments ([`gluing`]),
//! * tilting modules, slices and fractures over `KA_h` ([`tilting`]),
//! * verification of fractured and n-cluster tilting subcategories, fractured
//!   gluing and slice completion ([`cluster`]),
//! * certified `(n, d)`-representation-finite algebras ([`ndgen`]),
//! * ASCII, DOT, TikZ and JSON renderings of AR quivers ([`render`]).
//!
//! The `examples/` directory has one runnable program per capability, e.g.
//! `cargo run --example glue_motivating`.
//!
//! ```
//! use nakayama::{cluster, gluing, Kupisch};
//!
//! let b = Kupisch::lambda(9, 4)?;
//! let a = Kupisch::lambda(6, 5)?;
//! let glued = gluing::glue(&b, &a, 3)?;
//! assert_eq!(glued.result.run_length(), "5^2,4^7,3,2,1");
//! assert!(cluster::check_nct(&glued.result, 2)?.ok);
//! # Ok::<(), nakayama::Error>(())
//! ```

pub mod abutments;
pub mod ar;
pub mod cli;
pub mod cluster;
pub mod error;
pub mod gluing;
pub mod kupisch;
pub mod ndgen;
pub mod render;
pub mod tilting;

pub use abutments::Side;
pub use ar::{ArQuiver, Module};
pub use cluster::{Failure, Verdict};
pub use error::{Error, Result, Violation};
pub use kupisch::{Coord, Kupisch};
pub use tilting::{Fracture, Fracturing, Slice};
