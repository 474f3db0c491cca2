//! Exact arithmetic for numerical semigroups and their lattice-path
//! classes: Apéry sets and posets, graded Betti numbers through squarefree
//! divisor complexes, defining binomial ideals, tangent cones, and a
//! verification harness that sweeps every statement over a desk-scale
//! corpus.
//!
//! The quickest tour is the `examples/` directory:
//!
//! ```bash
//! cargo run --example semigroup_basics
//! cargo run --example kw_lattice_paths
//! cargo run --example apery_posets
//! cargo run --example poset_characterization
//! cargo run --release --example betti_numbers
//! cargo run --release --example tangent_cones
//! cargo run --release --example scaling_transforms
//! cargo run --release --example verification_sweep
//! ```
//!
//! A minimal end-to-end computation:
//!
//! ```
//! use nsg::resolution::{betti_oracle, Field};
//! use nsg::KwSemigroup;
//!
//! let k = KwSemigroup::new(8, 17, &[1, 2, 3], &[4, 3, 2])?;
//! assert_eq!(k.semigroup().generators(), &[8, 17, 60, 69, 78]);
//! let betti = betti_oracle(k.semigroup(), Field::Rationals)?;
//! assert_eq!(betti.totals(), &[1, 10, 20, 15, 4]);
//! # Ok::<(), nsg::Error>(())
//! ```
//!
//! The same functionality is scriptable through the `nsg` binary; see the
//! README for the command grammar and the JSON descriptor formats.

pub mod cli;
pub mod descriptor;
pub mod error;
pub mod ideal;
pub mod kw;
pub mod linalg;
pub mod poset;
pub mod report;
pub mod resolution;
pub mod semigroup;

pub use error::{Error, Result};
pub use kw::KwSemigroup;
pub use semigroup::NumericalSemigroup;
