use super::cones::cone_points;
use super::grid::GluedGrid;
use crate::uniformizer::{trace_critical_graph, TraceError};

/// Why a grid is (not) generic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnosis {
    Generic,
    /// `dz` has no zeros at all (`h = 0`).
    NoZeros,
    /// A zero of order at least two, or two zeros on one wall (equal critical values).
    NonSimpleOrColocated { wall: usize },
    /// A horizontal trajectory joins two zeros.
    SaddleConnection { from_wall: usize, to_wall: usize },
    /// Two slits developed onto the same level.
    CoincidentLevels,
    /// The grid is not a surface of the modelled type.
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genericity {
    pub diagnosis: Diagnosis,
}

impl Genericity {
    pub fn is_generic(&self) -> bool {
        self.diagnosis == Diagnosis::Generic
    }
}

/// All zeros simple, at most one per wall, and no horizontal saddle connection.
pub fn is_generic(grid: &GluedGrid) -> Genericity {
    let diagnosis = match cone_points(grid) {
        Err(e) => Diagnosis::Invalid(e.to_string()),
        Ok(cones) => {
            let mut per_wall = vec![0usize; grid.walls().len()];
            let mut bad = None;
            for z in cones.zeros() {
                per_wall[z.wall] += 1;
                if z.k() > 2 || per_wall[z.wall] > 1 {
                    bad.get_or_insert(z.wall);
                }
            }
            if let Some(wall) = bad {
                Diagnosis::NonSimpleOrColocated { wall }
            } else if cones.zeros().next().is_none() {
                Diagnosis::NoZeros
            } else {
                match trace_critical_graph(grid) {
                    Ok(_) => Diagnosis::Generic,
                    Err(TraceError::SaddleConnection { from_wall, to_wall }) => {
                        Diagnosis::SaddleConnection { from_wall, to_wall }
                    }
                    Err(TraceError::NotSimple { wall }) => Diagnosis::NonSimpleOrColocated { wall },
                    Err(e) => Diagnosis::Invalid(e.to_string()),
                }
            }
        }
    };
    Genericity { diagnosis }
}
