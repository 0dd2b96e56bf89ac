//! The gluing construction as an explicit flat surface, and its invariants:
//! cone points (zeros of `dz`), ends with residues, genus computed two
//! independent ways, periods of combinatorial loops, and genericity.

mod cones;
mod ends;
mod euler;
mod generic;
mod grid;
mod loops;

pub use cones::{cone_points, ConeData, Corner, CornerPos, VertexClass};
pub use ends::{ends, EndData, Puncture};
pub use euler::{euler_report, genus_via_euler, EulerReport};
pub use generic::{is_generic, Diagnosis, Genericity};
pub use grid::{glue, GluedGrid, GridError, Strip};
pub use loops::{cross, period_of_loop, vertical_loop, Crossing, Step};

use crate::slit::ParallelSlitDomain;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
    #[error("end structure: {0}")]
    EndStructure(String),
    #[error("genus is not a non-negative integer: {0}")]
    NonIntegralGenus(String),
    #[error("truncated surface has {found} boundary circuits, expected {expected}")]
    BoundaryCircuitMismatch { expected: usize, found: usize },
    #[error("path is not closed: {0}")]
    NotClosed(String),
    #[error("path leaves the surface: {0}")]
    OffSurface(String),
    #[error("surface has genus {found_genus} with {found_m} log ends, expected ({g}, {m})")]
    TypeMismatch {
        g: usize,
        m: usize,
        found_genus: usize,
        found_m: usize,
    },
    #[error("expected {expected} simple zeros one per wall, found {found}")]
    ZeroCount { expected: usize, found: usize },
}

/// `g = (Σ (k_v - 1) - m) / 2`, from the degree of the divisor of `dz`.
pub fn genus_via_cones(grid: &GluedGrid) -> Result<usize, SurfaceError> {
    let cones = cone_points(grid)?;
    let m = ends(grid)?.m();
    let total = cones.total_zero_order();
    if total < m || (total - m) % 2 != 0 {
        return Err(SurfaceError::NonIntegralGenus(format!(
            "zero divisor degree {total} with {m} log ends"
        )));
    }
    Ok((total - m) / 2)
}

/// Everything `invariants` reports about a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSummary {
    pub genus_cones: usize,
    pub genus_euler: usize,
    pub ends: EndData,
    pub cones: ConeData,
    pub genericity: Genericity,
}

pub fn summarize(grid: &GluedGrid) -> Result<SurfaceSummary, SurfaceError> {
    Ok(SurfaceSummary {
        genus_cones: genus_via_cones(grid)?,
        genus_euler: genus_via_euler(grid)?,
        ends: ends(grid)?,
        cones: cone_points(grid)?,
        genericity: is_generic(grid),
    })
}

/// Glues `x` and checks that the result is a genus-`g` surface with `m + 1`
/// punctures and one simple zero on each of the `h` walls.
pub fn verify_surface_type(x: &ParallelSlitDomain) -> Result<SurfaceSummary, SurfaceError> {
    let grid = glue(x);
    let summary = summarize(&grid)?;
    let (g, m) = (x.label().g(), x.label().m());
    if summary.genus_cones != summary.genus_euler {
        return Err(SurfaceError::InternalAssertion(format!(
            "genus oracles disagree: cones {} vs euler {}",
            summary.genus_cones, summary.genus_euler
        )));
    }
    if summary.genus_cones != g || summary.ends.m() != m {
        return Err(SurfaceError::TypeMismatch {
            g,
            m,
            found_genus: summary.genus_cones,
            found_m: summary.ends.m(),
        });
    }
    let h = x.h();
    let mut walls: Vec<usize> = summary
        .cones
        .zeros()
        .filter(|z| z.k() == 2)
        .map(|z| z.wall)
        .collect();
    walls.dedup();
    let all_simple = summary.cones.zeros().all(|z| z.k() == 2);
    if !all_simple || walls.len() != h || summary.cones.zeros().count() != h {
        return Err(SurfaceError::ZeroCount {
            expected: h,
            found: summary.cones.zeros().count(),
        });
    }
    Ok(summary)
}
