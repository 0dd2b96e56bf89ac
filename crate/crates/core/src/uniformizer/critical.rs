use std::collections::HashMap;

use crate::rational::Rational;
use crate::surface::{cone_points, CornerPos, GluedGrid, SurfaceError};

/// A simple zero of `dz`, sitting on wall `wall`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zero {
    pub wall: usize,
    pub x: Rational,
    /// The two strips whose bottom-left corner (right of the wall) is this zero.
    pub strips: [usize; 2],
}

/// A leftward horizontal separatrix into a zero.
///
/// `segments[k] = (column, strip)` means the ray runs along the top edge of
/// `strip` in `column`; segments are listed from the zero towards `-inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub zero: usize,
    pub segments: Vec<(usize, usize)>,
}

impl Ray {
    /// Strip below the seam the ray runs along. Constant along a ray, since
    /// it only passes flat wall vertices.
    pub fn strip(&self) -> usize {
        self.segments[0].1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalGraph {
    pub zeros: Vec<Zero>,
    pub rays: Vec<Ray>,
}

impl CriticalGraph {
    pub fn is_cut(&self, column: usize, strip: usize) -> bool {
        self.rays.iter().any(|r| r.segments.contains(&(column, strip)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error("zero on wall {wall} is not simple or shares its wall")]
    NotSimple { wall: usize },
    #[error("separatrix from the zero on wall {from_wall} runs into the zero on wall {to_wall}")]
    SaddleConnection { from_wall: usize, to_wall: usize },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Follows both leftward separatrices of every zero to `-inf`.
///
/// Flow lines of the ascending gradient of `Re z` move right, so those ending
/// in a zero arrive along its two leftward horizontal directions.
pub fn trace_critical_graph(grid: &GluedGrid) -> Result<CriticalGraph, TraceError> {
    let cones = cone_points(grid)?;
    let mut zeros: Vec<Zero> = Vec::new();
    // (wall, strip) of bottom-left corners lying on a zero
    let mut singular: HashMap<(usize, usize), usize> = HashMap::new();
    for z in cones.zeros() {
        if z.k() != 2 || zeros.iter().any(|o| o.wall == z.wall) {
            return Err(TraceError::NotSimple { wall: z.wall });
        }
        let bl = z.bottom_left_strips();
        debug_assert_eq!(bl.len(), 2);
        for &s in &bl {
            singular.insert((z.wall, s), zeros.len());
        }
        debug_assert!(z.corners.iter().all(|c| c.pos != CornerPos::BottomLeft || bl.contains(&c.strip)));
        zeros.push(Zero {
            wall: z.wall,
            x: grid.walls()[z.wall].clone(),
            strips: [bl[0], bl[1]],
        });
    }

    let mut rays = Vec::with_capacity(2 * zeros.len());
    for (index, zero) in zeros.iter().enumerate() {
        let left_column = zero.wall;
        let below = grid.perm(left_column).inverse();
        for &p in &zero.strips {
            let strip = below.apply(p);
            let mut segments = Vec::new();
            let mut column = left_column;
            loop {
                segments.push((column, strip));
                if column == 0 {
                    break;
                }
                // vertex at the left end of this segment, seen from the right
                let wall = column - 1;
                let above = grid.perm(column).apply(strip);
                if let Some(&hit) = singular.get(&(wall, above)) {
                    return Err(TraceError::SaddleConnection {
                        from_wall: zero.wall,
                        to_wall: zeros[hit].wall,
                    });
                }
                column -= 1;
            }
            rays.push(Ray { zero: index, segments });
        }
    }
    Ok(CriticalGraph { zeros, rays })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::h1_domain;
    use crate::surface::glue;

    #[test]
    fn h1_rays() {
        let g = glue(&h1_domain());
        let k = trace_critical_graph(&g).unwrap();
        assert_eq!(k.zeros.len(), 1);
        assert_eq!(k.rays.len(), 2);
        // seams bounding the finite strip: tops of strips 0 and 1 in the left column
        let mut strips: Vec<_> = k.rays.iter().map(|r| r.segments.clone()).collect();
        strips.sort();
        assert_eq!(strips, vec![vec![(0, 0)], vec![(0, 1)]]);
    }
}
