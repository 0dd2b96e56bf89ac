use std::collections::HashMap;

use super::grid::GluedGrid;
use super::SurfaceError;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CornerPos {
    BottomLeft,
    BottomRight,
    TopRight,
    TopLeft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub column: usize,
    pub strip: usize,
    pub pos: CornerPos,
}

impl Corner {
    pub fn new(column: usize, strip: usize, pos: CornerPos) -> Self {
        Self { column, strip, pos }
    }
}

/// One equivalence class of finite rectangle corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClass {
    /// Wall index `w`: the vertex sits between columns `w` and `w + 1`.
    pub wall: usize,
    /// Corners in counter-clockwise order, starting from a bottom-left corner.
    pub corners: Vec<Corner>,
    /// Grid y-coordinates at which the corners of this class occur.
    pub levels: Vec<Rational>,
}

impl VertexClass {
    /// The cone angle is `2π · k`.
    pub fn k(&self) -> usize {
        self.corners.len() / 4
    }

    /// Order of the zero of `dz` at this vertex (0 for flat points).
    pub fn zero_order(&self) -> usize {
        self.k() - 1
    }

    /// Strips whose bottom-left corner belongs to this class, ascending.
    pub fn bottom_left_strips(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .corners
            .iter()
            .filter(|c| c.pos == CornerPos::BottomLeft)
            .map(|c| c.strip)
            .collect();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeData {
    pub classes: Vec<VertexClass>,
}

impl ConeData {
    /// Vertex classes with cone angle at least `4π`.
    pub fn zeros(&self) -> impl Iterator<Item = &VertexClass> {
        self.classes.iter().filter(|c| c.k() >= 2)
    }

    /// `Σ (k - 1)`: degree of the zero divisor of `dz`.
    pub fn total_zero_order(&self) -> usize {
        self.classes.iter().map(VertexClass::zero_order).sum()
    }
}

/// Next corner counter-clockwise around the shared vertex.
///
/// Turning past a left or right side crosses a wall (same strip); turning past
/// a bottom or top side crosses a seam through the column permutation.
fn rotate_ccw(grid: &GluedGrid, c: Corner) -> Corner {
    use CornerPos::*;
    match c.pos {
        BottomLeft => Corner::new(c.column - 1, c.strip, BottomRight),
        BottomRight => {
            let below = grid.perm(c.column).inverse().apply(c.strip);
            Corner::new(c.column, below, TopRight)
        }
        TopRight => Corner::new(c.column + 1, c.strip, TopLeft),
        TopLeft => {
            let above = grid.perm(c.column).apply(c.strip);
            Corner::new(c.column, above, BottomLeft)
        }
    }
}

fn corner_level(grid: &GluedGrid, c: &Corner) -> Rational {
    let strip = grid.strip(c.strip);
    let y = match c.pos {
        CornerPos::BottomLeft | CornerPos::BottomRight => &strip.lo,
        CornerPos::TopLeft | CornerPos::TopRight => &strip.hi,
    };
    y.finite().cloned().expect("finite corner on a finite seam")
}

/// Vertex classes of all finite corners, found by walking around each vertex.
pub fn cone_points(grid: &GluedGrid) -> Result<ConeData, SurfaceError> {
    let bottom = grid.bottom_strip();
    let mut seen: HashMap<Corner, usize> = HashMap::new();
    let mut classes = Vec::new();
    for wall in 0..grid.walls().len() {
        let column = wall + 1;
        for strip in 0..grid.num_strips() {
            if strip == bottom {
                continue;
            }
            let start = Corner::new(column, strip, CornerPos::BottomLeft);
            if seen.contains_key(&start) {
                continue;
            }
            let mut corners = vec![start];
            let mut cur = rotate_ccw(grid, start);
            while cur != start {
                if corners.len() > 4 * grid.num_strips() {
                    return Err(SurfaceError::InternalAssertion(format!(
                        "corner walk from {start:?} does not close"
                    )));
                }
                corners.push(cur);
                cur = rotate_ccw(grid, cur);
            }
            if corners.len() % 4 != 0 {
                return Err(SurfaceError::InternalAssertion(format!(
                    "vertex class of {start:?} has {} corners",
                    corners.len()
                )));
            }
            for c in &corners {
                seen.insert(*c, classes.len());
            }
            let mut levels: Vec<Rational> = corners.iter().map(|c| corner_level(grid, c)).collect();
            levels.sort();
            levels.dedup();
            classes.push(VertexClass {
                wall,
                corners,
                levels,
            });
        }
    }
    Ok(ConeData { classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::h1_domain;
    use crate::surface::glue;

    #[test]
    fn h1_has_one_simple_zero() {
        let g = glue(&h1_domain());
        let cones = cone_points(&g).unwrap();
        assert_eq!(cones.classes.len(), 1);
        let z = &cones.classes[0];
        assert_eq!(z.k(), 2);
        assert_eq!(z.wall, 0);
        assert_eq!(z.bottom_left_strips(), vec![1, 2]);
        assert_eq!(cones.total_zero_order(), 1);
    }

    #[test]
    fn equal_permutations_give_flat_wall() {
        let g = glue(&h1_domain());
        let p = g.perm(1).clone();
        let flat = GluedGrid::new(
            vec![crate::rational::int(0)],
            g.strips().to_vec(),
            vec![p.clone(), p],
            vec![0, 0, 0],
        )
        .unwrap();
        let cones = cone_points(&flat).unwrap();
        assert!(cones.classes.iter().all(|c| c.k() == 1));
        assert_eq!(cones.total_zero_order(), 0);
    }
}
