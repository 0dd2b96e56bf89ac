use num_traits::Zero;

use super::grid::GluedGrid;
use super::SurfaceError;
use crate::rational::{ComplexRational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Left,
    Right,
}

/// Leaving rectangle `(column, strip)` through the side given by `step`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub column: usize,
    pub strip: usize,
    pub step: Step,
}

impl Crossing {
    pub fn new(column: usize, strip: usize, step: Step) -> Self {
        Self { column, strip, step }
    }
}

/// Rectangle entered by a crossing together with the integral of `dz` it
/// contributes (exit point minus entry point, in grid coordinates).
pub fn cross(grid: &GluedGrid, c: Crossing) -> Result<((usize, usize), ComplexRational), SurfaceError> {
    let zero = ComplexRational::zero();
    if c.column >= grid.num_columns() || c.strip >= grid.num_strips() {
        return Err(SurfaceError::OffSurface(format!("{c:?}")));
    }
    match c.step {
        Step::Left if c.column > 0 => Ok(((c.column - 1, c.strip), zero)),
        Step::Right if c.column + 1 < grid.num_columns() => Ok(((c.column + 1, c.strip), zero)),
        Step::Up if c.strip != grid.top_strip() => {
            let up = grid.perm(c.column).apply(c.strip);
            let exit = grid.strip(c.strip).hi.finite().unwrap();
            let entry = grid.strip(up).lo.finite().unwrap();
            Ok(((c.column, up), ComplexRational::new(Rational::zero(), exit - entry)))
        }
        Step::Down if c.strip != grid.bottom_strip() => {
            let down = grid.perm(c.column).inverse().apply(c.strip);
            let exit = grid.strip(c.strip).lo.finite().unwrap();
            let entry = grid.strip(down).hi.finite().unwrap();
            Ok(((c.column, down), ComplexRational::new(Rational::zero(), exit - entry)))
        }
        _ => Err(SurfaceError::OffSurface(format!("{c:?} leaves through an end"))),
    }
}

/// Period of `dz` along a closed chain of rectangle crossings.
pub fn period_of_loop(grid: &GluedGrid, steps: &[Crossing]) -> Result<ComplexRational, SurfaceError> {
    let Some(first) = steps.first() else {
        return Ok(ComplexRational::zero());
    };
    let mut total = ComplexRational::zero();
    let mut at = (first.column, first.strip);
    for (i, c) in steps.iter().enumerate() {
        if (c.column, c.strip) != at {
            return Err(SurfaceError::NotClosed(format!(
                "crossing {i} starts in {:?} but the path is in {at:?}",
                (c.column, c.strip)
            )));
        }
        let (next, delta) = cross(grid, *c)?;
        total = total + delta;
        at = next;
    }
    if at != (first.column, first.strip) {
        return Err(SurfaceError::NotClosed(format!(
            "path ends in {at:?}, started in {:?}",
            (first.column, first.strip)
        )));
    }
    Ok(total)
}

/// Core curve of the vertical cycle of `perm(column)` through `strip`.
pub fn vertical_loop(grid: &GluedGrid, column: usize, strip: usize) -> Vec<Crossing> {
    grid.perm(column)
        .cycle_of(strip)
        .into_iter()
        .scan(strip, |s, _| {
            let c = Crossing::new(column, *s, Step::Up);
            *s = grid.perm(column).apply(*s);
            Some(c)
        })
        .collect()
}
