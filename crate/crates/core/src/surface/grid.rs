use crate::perm::Permutation;
use crate::rational::{ExtRational, Rational};
use crate::slit::ParallelSlitDomain;

/// Horizontal band `[lo, hi]` running through every column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Strip {
    pub lo: ExtRational,
    pub hi: ExtRational,
}

impl Strip {
    pub fn new(lo: ExtRational, hi: ExtRational) -> Self {
        Self { lo, hi }
    }

    pub fn height(&self) -> ExtRational {
        self.hi.checked_sub(&self.lo).expect("strip has a finite side")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("walls are not strictly increasing at index {0}")]
    WallsNotIncreasing(usize),
    #[error("{found} column permutations for {expected} columns")]
    ColumnCount { expected: usize, found: usize },
    #[error("column {column} permutation acts on {found} strips, expected {expected}")]
    PermutationSize {
        column: usize,
        expected: usize,
        found: usize,
    },
    #[error("strip {0} has non-positive height")]
    EmptyStrip(usize),
    #[error("strips must contain exactly one bottom-open and one top-open strip, all others finite")]
    InfiniteStrips,
    #[error("column {0} does not glue the top-open strip onto the bottom-open strip")]
    ClosureViolated(usize),
    #[error("end labels: {0}")]
    EndLabels(String),
}

/// An explicit flat surface: columns (left to right) × strips of rectangles.
///
/// Column `c` spans `[walls[c-1], walls[c]]` with the outermost columns
/// unbounded. Crossing a wall keeps the strip. In column `c` the top edge of
/// strip `s` is glued to the bottom edge of strip `perms[c](s)` by a vertical
/// translation. Every gluing is a translation, so `dz` is a global 1-form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GluedGrid {
    walls: Vec<Rational>,
    strips: Vec<Strip>,
    perms: Vec<Permutation>,
    end_labels: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl GluedGrid {
    pub fn new(
        walls: Vec<Rational>,
        strips: Vec<Strip>,
        perms: Vec<Permutation>,
        end_labels: Vec<usize>,
    ) -> Result<Self, GridError> {
        if let Some(i) = walls.windows(2).position(|w| w[0] >= w[1]) {
            return Err(GridError::WallsNotIncreasing(i + 1));
        }
        if perms.len() != walls.len() + 1 {
            return Err(GridError::ColumnCount {
                expected: walls.len() + 1,
                found: perms.len(),
            });
        }
        let n = strips.len();
        for (column, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(GridError::PermutationSize {
                    column,
                    expected: n,
                    found: p.len(),
                });
            }
        }
        let mut bottom = None;
        let mut top = None;
        for (s, strip) in strips.iter().enumerate() {
            if strip.lo >= strip.hi {
                return Err(GridError::EmptyStrip(s));
            }
            match (&strip.lo, &strip.hi) {
                (ExtRational::Finite(_), ExtRational::Finite(_)) => {}
                (ExtRational::NegInf, ExtRational::Finite(_)) if bottom.is_none() => {
                    bottom = Some(s)
                }
                (ExtRational::Finite(_), ExtRational::PosInf) if top.is_none() => top = Some(s),
                _ => return Err(GridError::InfiniteStrips),
            }
        }
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return Err(GridError::InfiniteStrips);
        };
        for (c, p) in perms.iter().enumerate() {
            if p.apply(top) != bottom {
                return Err(GridError::ClosureViolated(c));
            }
        }
        if end_labels.len() != n {
            return Err(GridError::EndLabels(format!(
                "{} labels for {n} strips",
                end_labels.len()
            )));
        }
        let cycles = perms[0].cycles();
        let mut seen = vec![false; cycles.len()];
        for cycle in &cycles {
            let label = end_labels[cycle[0]];
            if cycle.iter().any(|&s| end_labels[s] != label) {
                return Err(GridError::EndLabels(format!(
                    "labels not constant on left end {cycle:?}"
                )));
            }
            if label >= cycles.len() || seen[label] {
                return Err(GridError::EndLabels(format!(
                    "labels do not biject onto 0..{}",
                    cycles.len()
                )));
            }
            seen[label] = true;
        }
        if end_labels[bottom] != 0 {
            return Err(GridError::EndLabels(
                "the end containing the infinite strips must carry label 0".into(),
            ));
        }
        Ok(Self {
            walls,
            strips,
            perms,
            end_labels,
            bottom,
            top,
        })
    }

    pub fn walls(&self) -> &[Rational] {
        &self.walls
    }

    pub fn strips(&self) -> &[Strip] {
        &self.strips
    }

    pub fn strip(&self, s: usize) -> &Strip {
        &self.strips[s]
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, c: usize) -> &Permutation {
        &self.perms[c]
    }

    pub fn end_labels(&self) -> &[usize] {
        &self.end_labels
    }

    pub fn num_columns(&self) -> usize {
        self.perms.len()
    }

    pub fn num_strips(&self) -> usize {
        self.strips.len()
    }

    /// Index of the strip unbounded below.
    pub fn bottom_strip(&self) -> usize {
        self.bottom
    }

    /// Index of the strip unbounded above.
    pub fn top_strip(&self) -> usize {
        self.top
    }

    /// Number of log ends `P_1 .. P_m` (left cylinders).
    pub fn num_log_ends(&self) -> usize {
        self.end_labels.iter().copied().max().unwrap_or(0)
    }

    pub fn column_left(&self, c: usize) -> ExtRational {
        if c == 0 {
            ExtRational::NegInf
        } else {
            ExtRational::Finite(self.walls[c - 1].clone())
        }
    }

    pub fn column_right(&self, c: usize) -> ExtRational {
        if c == self.walls.len() {
            ExtRational::PosInf
        } else {
            ExtRational::Finite(self.walls[c].clone())
        }
    }

    pub fn column_width(&self, c: usize) -> ExtRational {
        self.column_right(c).checked_sub(&self.column_left(c)).expect("column has a finite side")
    }

    /// Finite seam levels, ascending and deduplicated.
    pub fn level_positions(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self
            .strips
            .iter()
            .flat_map(|s| [s.lo.finite().cloned(), s.hi.finite().cloned()])
            .flatten()
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Removes every wall whose two sides carry the same permutation.
    ///
    /// Only walls between equal permutations are dropped, so the result does
    /// not depend on the order in which fake walls are found.
    pub fn merge_fake_walls(&self) -> GluedGrid {
        let mut walls = Vec::new();
        let mut perms = vec![self.perms[0].clone()];
        for (w, x) in self.walls.iter().enumerate() {
            if self.perms[w] != self.perms[w + 1] {
                walls.push(x.clone());
                perms.push(self.perms[w + 1].clone());
            }
        }
        GluedGrid {
            walls,
            perms,
            strips: self.strips.clone(),
            end_labels: self.end_labels.clone(),
            bottom: self.bottom,
            top: self.top,
        }
    }

    pub fn has_fake_walls(&self) -> bool {
        self.perms.windows(2).any(|w| w[0] == w[1])
    }

    pub(crate) fn from_parts_unchecked(
        walls: Vec<Rational>,
        strips: Vec<Strip>,
        perms: Vec<Permutation>,
        end_labels: Vec<usize>,
    ) -> GluedGrid {
        GluedGrid::new(walls, strips, perms, end_labels).expect("construction preserves grid invariants")
    }
}

/// The gluing construction: rectangles `[a_{i+1}, a_i] × [b_j, b_{j+1}]`
/// assembled into a translation surface.
///
/// The cell's column `i` (counted from the right) becomes internal column
/// `h - i`; strip `j` keeps its index.
pub fn glue(x: &ParallelSlitDomain) -> GluedGrid {
    let label = x.label();
    let h = label.h();
    let a = x.coords().a();
    let b = x.coords().b();
    let walls: Vec<Rational> = a.iter().rev().cloned().collect();
    let strips = (0..=2 * h)
        .map(|j| {
            let lo = if j == 0 {
                ExtRational::NegInf
            } else {
                ExtRational::Finite(b[j - 1].clone())
            };
            let hi = if j == 2 * h {
                ExtRational::PosInf
            } else {
                ExtRational::Finite(b[j].clone())
            };
            Strip::new(lo, hi)
        })
        .collect();
    let perms = (0..=h).map(|c| label.sigma(h - c).clone()).collect();
    let end_labels = (0..=2 * h).map(|j| label.label_of_strip(j)).collect();
    GluedGrid::from_parts_unchecked(walls, strips, perms, end_labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::h1_domain;
    use crate::rational::int;

    #[test]
    fn h1_transcription() {
        let g = glue(&h1_domain());
        assert_eq!(g.num_columns(), 2);
        assert_eq!(g.column_width(0), ExtRational::PosInf);
        assert_eq!(g.column_width(1), ExtRational::PosInf);
        let heights: Vec<_> = g.strips().iter().map(Strip::height).collect();
        assert_eq!(
            heights,
            vec![ExtRational::PosInf, ExtRational::Finite(int(1)), ExtRational::PosInf]
        );
        assert_eq!(g.perm(0).as_slice(), &[2, 1, 0]);
        assert_eq!(g.perm(1).as_slice(), &[1, 2, 0]);
        assert_eq!(g.end_labels(), &[0, 1, 0]);
        assert_eq!(g.bottom_strip(), 0);
        assert_eq!(g.top_strip(), 2);
        assert_eq!(g.level_positions(), vec![int(0), int(1)]);
    }

    #[test]
    fn closure_is_enforced() {
        let strips = vec![
            Strip::new(ExtRational::NegInf, ExtRational::Finite(int(0))),
            Strip::new(ExtRational::Finite(int(0)), ExtRational::PosInf),
        ];
        let p = Permutation::identity(2);
        assert_eq!(
            GluedGrid::new(vec![], strips, vec![p], vec![0, 0]),
            Err(GridError::ClosureViolated(0))
        );
    }

    #[test]
    fn merge_is_order_independent() {
        let g = glue(&h1_domain());
        let p0 = g.perm(0).clone();
        let p1 = g.perm(1).clone();
        let fake = GluedGrid::new(
            vec![int(-3), int(-1), int(0), int(5)],
            g.strips().to_vec(),
            vec![p0.clone(), p0.clone(), p0, p1.clone(), p1],
            g.end_labels().to_vec(),
        )
        .unwrap();
        let merged = fake.merge_fake_walls();
        assert_eq!(merged.walls(), &[int(0)]);
        assert_eq!(merged, g);
        assert_eq!(merged.merge_fake_walls(), merged);
    }
}
