//! Parallel slit domains and the flat surfaces they describe.
//!
//! A point of a top-dimensional cell of Bödigheimer's complex `Par(g, 1, m)`
//! is a [`ParallelSlitDomain`]: permutations `σ_0 .. σ_h` with a puncture
//! labelling, slit tips `a` and slit levels `b`. [`glue`] assembles it into a
//! translation surface ([`GluedGrid`]) carrying the dipole differential `dz`;
//! [`surface`] computes the invariants of such a surface and [`uniformize`]
//! recovers the slit domain from any presentation of it.

pub mod census;
pub mod fixtures;
pub mod perm;
pub mod rational;
pub mod sample;
pub mod slit;
pub mod surface;
pub mod uniformizer;

pub use perm::Permutation;
pub use rational::{ComplexRational, ExtRational, Rational};
pub use slit::{
    cell_dimension, normalize, validate_cell_label, CellCandidate, CellError, CellLabel,
    CoordError, ParallelSlitDomain, SlitCoordinates,
};
pub use surface::{glue, GluedGrid, Strip, SurfaceError};
pub use uniformizer::{periods, scramble, uniformize, PeriodMatrix, UniformizeError};
