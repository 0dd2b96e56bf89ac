use std::collections::{HashSet, VecDeque};

use num_traits::Zero;

use super::critical::CriticalGraph;
use crate::rational::{ComplexRational, ExtRational, Rational};
use crate::surface::{GluedGrid, Strip};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DevelopError {
    #[error("gluing across the top of strip {strip} in column {column} does not close up")]
    HolonomyMismatch { column: usize, strip: usize },
    #[error("rectangle ({column}, {strip}) is not reachable in the cut surface")]
    Disconnected { column: usize, strip: usize },
    #[error("developed rectangles ({column}, {a}) and ({column}, {b}) overlap")]
    OverlapDetected { column: usize, a: usize, b: usize },
    #[error("ray {ray} develops onto more than one level")]
    RayNotStraight { ray: usize },
}

/// Developed levels of the two banks of a separatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Banks {
    /// Level of the side facing down onto the strip below the ray.
    pub lower: Rational,
    /// Level of the side facing up, i.e. the bottom of the strip glued above.
    pub upper: Rational,
}

/// The surface cut along its critical graph and laid out in the plane by the
/// primitive of `dz`.
///
/// Walls are never cut and crossing them is the identity, so every rectangle
/// keeps its x-extent; only vertical offsets are recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Development {
    graph: CriticalGraph,
    offsets: Vec<Vec<Rational>>,
    /// Distinct developed images of each zero, sorted by y.
    pub zero_images: Vec<Vec<(Rational, Rational)>>,
    /// Per ray of the critical graph.
    pub banks: Vec<Banks>,
}

impl Development {
    pub fn graph(&self) -> &CriticalGraph {
        &self.graph
    }

    pub fn offset(&self, column: usize, strip: usize) -> ComplexRational {
        ComplexRational::new(Rational::zero(), self.offsets[column][strip].clone())
    }

    pub fn dy(&self, column: usize, strip: usize) -> &Rational {
        &self.offsets[column][strip]
    }

    /// Developed y-extent of a rectangle.
    pub fn y_extent(&self, grid: &GluedGrid, column: usize, strip: usize) -> (ExtRational, ExtRational) {
        let Strip { lo, hi } = grid.strip(strip);
        let dy = &self.offsets[column][strip];
        (lo.shifted(dy), hi.shifted(dy))
    }

    /// Rectangle whose developed image contains `(x, y)` with `x` strictly
    /// inside a column and `lo < y <= hi`.
    pub fn locate_below(&self, grid: &GluedGrid, x: &Rational, y: &Rational) -> Option<(usize, usize)> {
        let ex = ExtRational::Finite(x.clone());
        let ey = ExtRational::Finite(y.clone());
        let column = (0..grid.num_columns())
            .find(|&c| grid.column_left(c) < ex && ex < grid.column_right(c))?;
        (0..grid.num_strips())
            .find(|&s| {
                let (lo, hi) = self.y_extent(grid, column, s);
                lo < ey && ey <= hi
            })
            .map(|s| (column, s))
    }

    /// Like [`Self::locate_below`] but with `lo <= y < hi`.
    pub fn locate_above(&self, grid: &GluedGrid, x: &Rational, y: &Rational) -> Option<(usize, usize)> {
        let ex = ExtRational::Finite(x.clone());
        let ey = ExtRational::Finite(y.clone());
        let column = (0..grid.num_columns())
            .find(|&c| grid.column_left(c) < ex && ex < grid.column_right(c))?;
        (0..grid.num_strips())
            .find(|&s| {
                let (lo, hi) = self.y_extent(grid, column, s);
                lo <= ey && ey < hi
            })
            .map(|s| (column, s))
    }
}

/// Lays out the cut surface by a breadth-first traversal from the bottom
/// strip of the rightmost column, then checks that every remaining adjacency
/// closes up and that developed rectangles do not overlap.
pub fn develop(grid: &GluedGrid, k: &CriticalGraph) -> Result<Development, DevelopError> {
    let cols = grid.num_columns();
    let strips = grid.num_strips();
    let top = grid.top_strip();
    let cut: HashSet<(usize, usize)> = k.rays.iter().flat_map(|r| r.segments.iter().copied()).collect();

    let seam_shift = |c: usize, s: usize| -> (usize, Rational) {
        let up = grid.perm(c).apply(s);
        let shift = grid.strip(s).hi.finite().unwrap() - grid.strip(up).lo.finite().unwrap();
        (up, shift)
    };

    let mut offsets: Vec<Vec<Option<Rational>>> = vec![vec![None; strips]; cols];
    let root = (cols - 1, grid.bottom_strip());
    offsets[root.0][root.1] = Some(Rational::zero());
    let mut queue = VecDeque::from([root]);
    while let Some((c, s)) = queue.pop_front() {
        let here = offsets[c][s].clone().unwrap();
        let mut nbrs: Vec<((usize, usize), Rational)> = Vec::with_capacity(4);
        if c > 0 {
            nbrs.push(((c - 1, s), here.clone()));
        }
        if c + 1 < cols {
            nbrs.push(((c + 1, s), here.clone()));
        }
        if s != top && !cut.contains(&(c, s)) {
            let (up, shift) = seam_shift(c, s);
            nbrs.push(((c, up), &here + shift));
        }
        if s != grid.bottom_strip() {
            let down = grid.perm(c).inverse().apply(s);
            if !cut.contains(&(c, down)) {
                let (_, shift) = seam_shift(c, down);
                nbrs.push(((c, down), &here - shift));
            }
        }
        for (n, off) in nbrs {
            if offsets[n.0][n.1].is_none() {
                offsets[n.0][n.1] = Some(off);
                queue.push_back(n);
            }
        }
    }
    let mut dy: Vec<Vec<Rational>> = Vec::with_capacity(cols);
    for (c, col) in offsets.into_iter().enumerate() {
        let mut v = Vec::with_capacity(strips);
        for (s, o) in col.into_iter().enumerate() {
            v.push(o.ok_or(DevelopError::Disconnected { column: c, strip: s })?);
        }
        dy.push(v);
    }

    // every uncut adjacency, tree or not, must agree
    for c in 0..cols {
        for s in 0..strips {
            if c + 1 < cols && dy[c][s] != dy[c + 1][s] {
                return Err(DevelopError::HolonomyMismatch { column: c, strip: s });
            }
            if s != top && !cut.contains(&(c, s)) {
                let (up, shift) = seam_shift(c, s);
                if dy[c][up] != &dy[c][s] + shift {
                    return Err(DevelopError::HolonomyMismatch { column: c, strip: s });
                }
            }
        }
    }

    // columns are disjoint in x, so overlaps can only occur inside one column
    for c in 0..cols {
        let mut spans: Vec<(ExtRational, ExtRational, usize)> = (0..strips)
            .map(|s| {
                let Strip { lo, hi } = grid.strip(s);
                (lo.shifted(&dy[c][s]), hi.shifted(&dy[c][s]), s)
            })
            .collect();
        spans.sort();
        let mut reach: Option<(ExtRational, usize)> = None;
        for (lo, hi, s) in spans {
            if let Some((top_hi, t)) = &reach {
                if lo < *top_hi {
                    return Err(DevelopError::OverlapDetected { column: c, a: *t, b: s });
                }
            }
            if reach.as_ref().is_none_or(|(top_hi, _)| hi > *top_hi) {
                reach = Some((hi, s));
            }
        }
    }

    let mut banks = Vec::with_capacity(k.rays.len());
    for (index, ray) in k.rays.iter().enumerate() {
        let mut levels = ray.segments.iter().map(|&(c, s)| {
            let (up, _) = seam_shift(c, s);
            let lower = grid.strip(s).hi.finite().unwrap() + &dy[c][s];
            let upper = grid.strip(up).lo.finite().unwrap() + &dy[c][up];
            (lower, upper)
        });
        let first = levels.next().expect("rays have at least one segment");
        if levels.any(|l| l != first) {
            return Err(DevelopError::RayNotStraight { ray: index });
        }
        banks.push(Banks { lower: first.0, upper: first.1 });
    }

    let cones = crate::surface::cone_points(grid).expect("tracing already computed cone points");
    let mut zero_images = Vec::with_capacity(k.zeros.len());
    for zero in &k.zeros {
        let class = cones
            .zeros()
            .find(|z| z.wall == zero.wall)
            .expect("zero found by the tracer");
        let mut pts: Vec<(Rational, Rational)> = class
            .corners
            .iter()
            .map(|corner| {
                let strip = grid.strip(corner.strip);
                let y = match corner.pos {
                    crate::surface::CornerPos::BottomLeft | crate::surface::CornerPos::BottomRight => &strip.lo,
                    _ => &strip.hi,
                };
                let y = y.finite().unwrap() + &dy[corner.column][corner.strip];
                (zero.x.clone(), y)
            })
            .collect();
        pts.sort_by(|a, b| a.1.cmp(&b.1));
        pts.dedup();
        zero_images.push(pts);
    }

    Ok(Development {
        graph: k.clone(),
        offsets: dy,
        zero_images,
        banks,
    })
}
