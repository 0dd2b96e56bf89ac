use num_traits::{Signed, Zero};

use super::grid::GluedGrid;
use super::SurfaceError;
use crate::rational::Rational;

/// One puncture of the surface.
///
/// `circumference` encodes the residue as `circumference / (2π)`; the factor
/// `2π` is kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Puncture {
    pub label: usize,
    pub pole_order: usize,
    pub circumference: Rational,
    /// Strips of the leftmost column forming this end.
    pub strips: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndData {
    /// Sorted by label; index 0 is the dipole end.
    pub punctures: Vec<Puncture>,
}

impl EndData {
    pub fn m(&self) -> usize {
        self.punctures.len() - 1
    }

    pub fn residue_sum(&self) -> Rational {
        self.punctures.iter().map(|p| &p.circumference).sum()
    }
}

/// Identifies the dipole end and the `m` left cylinders with their residues.
pub fn ends(grid: &GluedGrid) -> Result<EndData, SurfaceError> {
    let right = grid.perm(grid.num_columns() - 1);
    if right.cycle_count() != 1 {
        return Err(SurfaceError::EndStructure(format!(
            "rightmost column has {} vertical cycles; only the dipole end may open to the right",
            right.cycle_count()
        )));
    }
    let bottom = grid.bottom_strip();
    let top = grid.top_strip();
    let mut punctures = Vec::new();
    let mut log_total = Rational::zero();
    let mut dipole = None;
    for cycle in grid.perm(0).cycles() {
        let label = grid.end_labels()[cycle[0]];
        let infinite = cycle.iter().filter(|&&s| s == bottom || s == top).count();
        match (infinite, label) {
            (0, 0) => {
                return Err(SurfaceError::EndStructure(
                    "label 0 attached to a finite cylinder".into(),
                ))
            }
            (0, _) => {
                let circumference: Rational = cycle
                    .iter()
                    .map(|&s| {
                        let st = grid.strip(s);
                        st.hi.finite().unwrap() - st.lo.finite().unwrap()
                    })
                    .sum();
                if !circumference.is_positive() {
                    return Err(SurfaceError::EndStructure(format!(
                        "left cylinder {label} has non-positive circumference"
                    )));
                }
                log_total += &circumference;
                punctures.push(Puncture {
                    label,
                    pole_order: 1,
                    circumference,
                    strips: cycle,
                });
            }
            (2, 0) => dipole = Some(cycle),
            (2, _) => {
                return Err(SurfaceError::EndStructure(format!(
                    "end containing the infinite strips carries label {label}"
                )))
            }
            _ => {
                return Err(SurfaceError::EndStructure(
                    "infinite strips lie in different ends".into(),
                ))
            }
        }
    }
    let Some(dipole) = dipole else {
        return Err(SurfaceError::EndStructure("no dipole end".into()));
    };
    punctures.push(Puncture {
        label: 0,
        pole_order: 2,
        circumference: -log_total,
        strips: dipole,
    });
    punctures.sort_by_key(|p| p.label);
    if punctures.iter().enumerate().any(|(i, p)| p.label != i) {
        return Err(SurfaceError::EndStructure(
            "left cylinders do not match labels 1..m".into(),
        ));
    }
    Ok(EndData { punctures })
}
