//! Genus from the Euler characteristic of a truncated, capped copy of the
//! surface. Independent of the corner-rotation count in `cones`.

use std::collections::{HashMap, HashSet};

use petgraph::unionfind::UnionFind;

use super::grid::GluedGrid;
use super::SurfaceError;
use crate::rational::{int, Rational};

const BL: usize = 0;
const BR: usize = 1;
const TR: usize = 2;
const TL: usize = 3;

const LEFT: usize = 0;
const RIGHT: usize = 1;
const BOTTOM: usize = 2;
const TOP: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub boundary_circuits: usize,
    /// Euler characteristic after capping every boundary circuit with a disk.
    pub chi: i64,
    pub genus: usize,
    /// Truncation box `(xmin, xmax, ymin, ymax)`.
    pub bounds: (Rational, Rational, Rational, Rational),
}

/// Cuts the infinite rectangles off one unit beyond the outermost finite wall
/// and level, caps the boundary circuits and reads off `g = (2 - χ) / 2`.
pub fn euler_report(grid: &GluedGrid) -> Result<EulerReport, SurfaceError> {
    let cols = grid.num_columns();
    let strips = grid.num_strips();
    let corner = |c: usize, s: usize, p: usize| (c * strips + s) * 4 + p;
    let side = |c: usize, s: usize, e: usize| (c * strips + s) * 4 + e;
    let n = cols * strips * 4;

    let mut corners: UnionFind<usize> = UnionFind::new(n);
    let mut sides: UnionFind<usize> = UnionFind::new(n);
    let mut glued = vec![false; n];
    let top = grid.top_strip();

    for c in 0..cols {
        for s in 0..strips {
            if c + 1 < cols {
                sides.union(side(c, s, RIGHT), side(c + 1, s, LEFT));
                glued[side(c, s, RIGHT)] = true;
                glued[side(c + 1, s, LEFT)] = true;
                corners.union(corner(c, s, BR), corner(c + 1, s, BL));
                corners.union(corner(c, s, TR), corner(c + 1, s, TL));
            }
            // the seam at infinity closing the top strip onto the bottom one is cut
            if s != top {
                let up = grid.perm(c).apply(s);
                sides.union(side(c, s, TOP), side(c, up, BOTTOM));
                glued[side(c, s, TOP)] = true;
                glued[side(c, up, BOTTOM)] = true;
                corners.union(corner(c, s, TL), corner(c, up, BL));
                corners.union(corner(c, s, TR), corner(c, up, BR));
            }
        }
    }

    let vertex_classes: HashSet<usize> = (0..n).map(|i| corners.find(i)).collect();
    let edge_classes: HashSet<usize> = (0..n).map(|i| sides.find(i)).collect();
    let faces = cols * strips;

    // boundary graph: each unglued side joins the classes of its two end corners
    let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut boundary_sides = 0usize;
    for c in 0..cols {
        for s in 0..strips {
            for (e, (p, q)) in [(LEFT, (BL, TL)), (RIGHT, (BR, TR)), (BOTTOM, (BL, BR)), (TOP, (TL, TR))] {
                if glued[side(c, s, e)] {
                    continue;
                }
                boundary_sides += 1;
                let u = corners.find(corner(c, s, p));
                let v = corners.find(corner(c, s, q));
                adjacency.entry(u).or_default().push(v);
                adjacency.entry(v).or_default().push(u);
            }
        }
    }
    for (v, nbrs) in &adjacency {
        if nbrs.len() != 2 {
            return Err(SurfaceError::InternalAssertion(format!(
                "boundary vertex {v} has degree {} in the truncated surface",
                nbrs.len()
            )));
        }
    }
    let mut circuits = 0usize;
    let mut visited: HashSet<usize> = HashSet::new();
    for &start in adjacency.keys() {
        if !visited.insert(start) {
            continue;
        }
        circuits += 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adjacency[&v] {
                if visited.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    debug_assert!(boundary_sides >= circuits);

    let expected = grid.num_log_ends() + 1;
    if circuits != expected {
        return Err(SurfaceError::BoundaryCircuitMismatch {
            expected,
            found: circuits,
        });
    }

    let v = vertex_classes.len() as i64;
    let e = edge_classes.len() as i64;
    let f = (faces + circuits) as i64;
    let chi = v - e + f;
    if chi > 2 || (2 - chi) % 2 != 0 {
        return Err(SurfaceError::NonIntegralGenus(format!("Euler characteristic {chi}")));
    }

    Ok(EulerReport {
        vertices: vertex_classes.len(),
        edges: edge_classes.len(),
        faces,
        boundary_circuits: circuits,
        chi,
        genus: ((2 - chi) / 2) as usize,
        bounds: truncation_box(grid),
    })
}

pub fn genus_via_euler(grid: &GluedGrid) -> Result<usize, SurfaceError> {
    euler_report(grid).map(|r| r.genus)
}

fn truncation_box(grid: &GluedGrid) -> (Rational, Rational, Rational, Rational) {
    let walls = grid.walls();
    let levels = grid.level_positions();
    let xmin = walls.first().cloned().unwrap_or_else(|| int(0)) - int(1);
    let xmax = walls.last().cloned().unwrap_or_else(|| int(0)) + int(1);
    let ymin = levels.first().cloned().unwrap_or_else(|| int(0)) - int(1);
    let ymax = levels.last().cloned().unwrap_or_else(|| int(0)) + int(1);
    (xmin, xmax, ymin, ymax)
}
